"""Foot/head sets of vertex sets and the four neighborhood-chain conditions.

For a vertex set S the foot sets collect members whose (out- or in-)
neighborhood is contained in every member's; head sets use containment the
other way.  A digraph satisfies the condition of a kind at level p when the
corresponding set is non-empty for every p-subset of vertices.

The containment tests collapse to one equality each: x is a foot of S iff
its neighborhood equals the intersection of the members' neighborhoods, and
a head iff it equals the union.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .digraph import Digraph


class ConditionKind(enum.Enum):
    """Which of the four foot/head sets must be non-empty on every p-set."""

    C = "C"                  # foot sets of out-neighborhoods
    C_PRIME = "Cp"           # foot sets of in-neighborhoods
    C_STAR = "Cs"            # head sets of out-neighborhoods
    C_STAR_PRIME = "Csp"     # head sets of in-neighborhoods

    @property
    def display(self) -> str:
        return {
            ConditionKind.C: "C(p)",
            ConditionKind.C_PRIME: "C'(p)",
            ConditionKind.C_STAR: "C*(p)",
            ConditionKind.C_STAR_PRIME: "C*'(p)",
        }[self]

    @property
    def uses_in_masks(self) -> bool:
        return self in (ConditionKind.C_PRIME, ConditionKind.C_STAR_PRIME)

    @property
    def uses_head(self) -> bool:
        return self in (ConditionKind.C_STAR, ConditionKind.C_STAR_PRIME)


@dataclass(frozen=True)
class ConditionReport:
    """Verdict for one condition kind at one level p.

    violating_set is present exactly when satisfied is False; it is the
    lexicographically first p-set whose foot/head set is empty.
    """

    kind: ConditionKind
    p: int
    satisfied: bool
    violating_set: Optional[FrozenSet[int]] = None


def _checked_members(d: Digraph, vertices: Iterable[int]) -> List[int]:
    members = sorted(set(int(v) for v in vertices))
    for v in members:
        if not (0 <= v < d.n):
            raise ValueError(f"vertex {v} out of range for n={d.n}")
    return members


def _foot_members(masks: Sequence[int], members: Sequence[int]) -> List[int]:
    it = iter(members)
    inter = masks[next(it)]
    for v in it:
        inter &= masks[v]
    return [x for x in members if masks[x] == inter]


def _head_members(masks: Sequence[int], members: Sequence[int]) -> List[int]:
    union = 0
    for v in members:
        union |= masks[v]
    return [x for x in members if masks[x] == union]


def foot_set_plus(d: Digraph, vertices: Iterable[int]) -> FrozenSet[int]:
    """Members of S whose out-neighborhood is contained in every member's."""
    members = _checked_members(d, vertices)
    if not members:
        return frozenset()
    return frozenset(_foot_members(d.out_masks, members))


def foot_set_minus(d: Digraph, vertices: Iterable[int]) -> FrozenSet[int]:
    """Members of S whose in-neighborhood is contained in every member's."""
    members = _checked_members(d, vertices)
    if not members:
        return frozenset()
    return frozenset(_foot_members(d.in_masks, members))


def head_set_plus(d: Digraph, vertices: Iterable[int]) -> FrozenSet[int]:
    """Members of S whose out-neighborhood contains every member's."""
    members = _checked_members(d, vertices)
    if not members:
        return frozenset()
    return frozenset(_head_members(d.out_masks, members))


def head_set_minus(d: Digraph, vertices: Iterable[int]) -> FrozenSet[int]:
    """Members of S whose in-neighborhood contains every member's."""
    members = _checked_members(d, vertices)
    if not members:
        return frozenset()
    return frozenset(_head_members(d.in_masks, members))


def condition_violation(
    masks: Sequence[int], n: int, p: int, use_head: bool
) -> Optional[Tuple[int, ...]]:
    """First p-subset (lexicographic) whose foot/head set is empty, or None.

    Mask-level core shared by satisfies_condition and the enumeration
    sweeps; `masks` is the out- or in-neighborhood table.
    """
    if use_head:
        for subset in itertools.combinations(range(n), p):
            union = 0
            for v in subset:
                union |= masks[v]
            if not any(masks[x] == union for x in subset):
                return subset
    else:
        for subset in itertools.combinations(range(n), p):
            it = iter(subset)
            inter = masks[next(it)]
            for v in it:
                inter &= masks[v]
            if not any(masks[x] == inter for x in subset):
                return subset
    return None


def satisfies_condition(d: Digraph, kind: ConditionKind, p: int) -> ConditionReport:
    """Check the condition of the given kind at level p.

    Vacuously satisfied when n < p (there are no p-subsets to quantify
    over).  p < 2 is rejected.
    """
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    masks = d.in_masks if kind.uses_in_masks else d.out_masks
    witness = condition_violation(masks, d.n, p, kind.uses_head)
    if witness is None:
        return ConditionReport(kind, p, True, None)
    return ConditionReport(kind, p, False, frozenset(witness))

"""Exact double competition number by pruned search over acyclic digraphs.

dk(G) is the least k such that G plus k new isolated vertices is the CCE
graph of some acyclic digraph.  The search fixes G's vertices at indices
0..n-1, adds vertices n..n+k-1, and backtracks over out-neighborhood rows
in vertex order with ascending row values, so the first witness found is
the lexicographically least row assignment.  k is searched ascending, so
the first feasible stratum is minimal by construction.

Pruning (all exact, no completeness loss):

* a row closing a directed cycle through already-assigned rows is rejected;
* a target edge whose endpoints' rows are both assigned without a common
  out-neighbor is dead (out rows never change once assigned);
* a target non-edge with a common out-neighbor and a common in-neighbor is
  already violated (in-neighborhoods only grow);
* a target non-edge with a common out-neighbor but no common in-neighbor
  yet forbids every later row from feeding both endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .caps import ResourceCapError, resolved_cap
from .digraph import Digraph, bits_of
from .graphs import SimpleGraph


@dataclass(frozen=True)
class DkResult:
    """Minimal padding k plus an acyclic witness realizing G u I_k."""

    k: int
    witness: Digraph


def double_competition_number(
    g: SimpleGraph, k_max: int, cap: Optional[int] = None
) -> Optional[DkResult]:
    """Least k <= k_max with an acyclic witness, or None if none exists."""
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max}")
    limit = cap if cap is not None else resolved_cap("dk")
    if g.n + k_max > limit:
        raise ResourceCapError(
            f"|V(G)| + k_max = {g.n + k_max} exceeds the dk search cap {limit}"
        )
    for k in range(k_max + 1):
        witness = search_realization(g, k)
        if witness is not None:
            return DkResult(k, witness)
    return None


def is_cce_of_acyclic(
    g: SimpleGraph, cap: Optional[int] = None
) -> Optional[Digraph]:
    """An acyclic digraph whose CCE graph is exactly g, if dk(g) = 0."""
    result = double_competition_number(g, 0, cap=cap)
    return result.witness if result is not None else None


def search_realization(g: SimpleGraph, k: int) -> Optional[Digraph]:
    """An acyclic digraph on g.n + k vertices whose CCE graph equals
    g u I_k exactly (added vertices isolated), or None.

    One stratum of the dk search; exposed so tests can re-run the k-1
    stratum and assert minimality directly.
    """
    n = g.n
    total = n + k
    target = list(g.adj_masks) + [0] * k
    outs = [0] * total
    ins = [0] * total
    forbidden: List[int] = []       # two-bit masks no later row may cover

    def closes_cycle(v: int, row: int) -> bool:
        stack = list(bits_of(row))
        seen = 0
        while stack:
            w = stack.pop()
            if w == v:
                return True
            bit = 1 << w
            if seen & bit:
                continue
            seen |= bit
            stack.extend(bits_of(outs[w]))
        return False

    def place(v: int) -> bool:
        if v == total:
            return _cce_matches(total, outs, ins, target)
        self_bit = 1 << v
        n_forbidden = len(forbidden)
        for row in range(1 << total):
            if row & self_bit:
                continue
            if row & ins[v] or closes_cycle(v, row):
                continue
            ok = True
            for pm in forbidden:
                if row & pm == pm:
                    ok = False
                    break
            if not ok:
                continue
            new_forbidden = []
            for x in range(v):
                cout = outs[x] & row
                if (target[x] >> v) & 1:
                    if not cout:
                        ok = False
                        break
                elif cout:
                    if ins[x] & ins[v]:
                        ok = False
                        break
                    new_forbidden.append((1 << x) | self_bit)
            if not ok:
                continue
            outs[v] = row
            forbidden.extend(new_forbidden)
            touched = []
            rr = row
            while rr:
                low = rr & -rr
                w = low.bit_length() - 1
                if not (ins[w] & self_bit):
                    ins[w] |= self_bit
                    touched.append(w)
                rr ^= low
            if place(v + 1):
                return True
            for w in touched:
                ins[w] ^= self_bit
            del forbidden[n_forbidden:]
            outs[v] = 0
        return False

    if place(0):
        return Digraph(
            total,
            [(u, w) for u in range(total) for w in bits_of(outs[u])],
        )
    return None


def _cce_matches(
    total: int, outs: Sequence[int], ins: Sequence[int], target: Sequence[int]
) -> bool:
    for x in range(total):
        ox, ix, tx = outs[x], ins[x], target[x]
        for y in range(x + 1, total):
            has_edge = bool(ox & outs[y]) and bool(ix & ins[y])
            if has_edge != bool((tx >> y) & 1):
                return False
    return True

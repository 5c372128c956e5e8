import itertools
import random

import pytest

from ccelab import (
    ConditionKind,
    Digraph,
    foot_set_minus,
    foot_set_plus,
    head_set_minus,
    head_set_plus,
    interval_order_from,
    satisfies_condition,
    witness_loopless,
)
from ccelab.orders import IntervalRep

import oracles


def test_foot_set_plus_examples():
    empty = Digraph(3)
    assert foot_set_plus(empty, {0, 1, 2}) == {0, 1, 2}
    two_cycle = Digraph(2, [(0, 1), (1, 0)])
    assert foot_set_plus(two_cycle, {0, 1}) == frozenset()
    w = witness_loopless(2, 2)
    assert foot_set_plus(w, {0, 1, 2}) == {0, 1}


def test_foot_set_minus_examples():
    assert foot_set_minus(Digraph(3), {0, 2}) == {0, 2}
    d = Digraph(4, [(0, 1), (0, 2), (3, 2)])
    assert foot_set_minus(d, {1, 2}) == {1}
    w = witness_loopless(2, 2)
    assert foot_set_minus(w, {0, 1, 3}) == {0, 1}


def test_head_set_examples():
    assert head_set_plus(Digraph(3), {0, 1}) == {0, 1}
    d = Digraph(4, [(0, 1), (0, 2), (3, 2)])
    assert head_set_minus(d, {1, 2}) == {2}
    two_cycle = Digraph(2, [(0, 1), (1, 0)])
    assert head_set_plus(two_cycle, {0, 1}) == frozenset()


def test_singleton_sets_are_their_own_feet_and_heads():
    d = Digraph(4, [(0, 1), (2, 3), (3, 3)])
    for v in range(4):
        assert foot_set_plus(d, {v}) == {v}
        assert foot_set_minus(d, {v}) == {v}
        assert head_set_plus(d, {v}) == {v}
        assert head_set_minus(d, {v}) == {v}
    assert foot_set_plus(d, set()) == frozenset()


def test_out_of_range_set():
    d = Digraph(3)
    with pytest.raises(ValueError):
        foot_set_plus(d, {0, 3})


def test_satisfies_condition_examples():
    rep = IntervalRep(((4, 5), (2, 6), (0, 1)))
    order = interval_order_from(rep)
    assert order.arcs == {(0, 2), (1, 2)}
    assert satisfies_condition(order, ConditionKind.C, 2).satisfied

    two_cycle = Digraph(2, [(0, 1), (1, 0)])
    report = satisfies_condition(two_cycle, ConditionKind.C, 2)
    assert not report.satisfied
    assert report.violating_set == {0, 1}

    small = Digraph(2, [(0, 1)])
    assert satisfies_condition(small, ConditionKind.C, 3).satisfied  # vacuous


def test_satisfies_condition_rejects_small_p():
    with pytest.raises(ValueError):
        satisfies_condition(Digraph(3), ConditionKind.C, 1)


def test_witness_is_lexicographically_first():
    # two violating pairs: {0,3} and {1,2}; lexicographic order prefers {0,3}
    d = Digraph(4, [(0, 1), (3, 2), (1, 0), (2, 3)])
    report = satisfies_condition(d, ConditionKind.C, 2)
    assert not report.satisfied
    violating = [
        s
        for s in itertools.combinations(range(4), 2)
        if not oracles.foot_head_oracle(d, s)[0]
    ]
    assert report.violating_set == frozenset(violating[0])


def test_against_oracle_exhaustive_n3():
    for n in range(4):
        for mask in range(1 << (n * n)):
            d = Digraph.from_arc_mask(n, mask)
            for p in (2, 3):
                for flag, kind in (
                    ("C", ConditionKind.C),
                    ("Cp", ConditionKind.C_PRIME),
                    ("Cs", ConditionKind.C_STAR),
                    ("Csp", ConditionKind.C_STAR_PRIME),
                ):
                    got = satisfies_condition(d, kind, p).satisfied
                    assert got == oracles.condition_oracle(d, flag, p)


def test_foot_head_sets_match_oracle_random():
    rng = random.Random(4242)
    for _ in range(300):
        n = rng.randint(1, 5)
        d = Digraph.from_arc_mask(n, rng.getrandbits(n * n))
        members = [v for v in range(n) if rng.random() < 0.6]
        fp, fm, hp, hm = oracles.foot_head_oracle(d, members)
        assert foot_set_plus(d, members) == fp
        assert foot_set_minus(d, members) == fm
        assert head_set_plus(d, members) == hp
        assert head_set_minus(d, members) == hm


def test_duality_under_reversal():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 5)
        d = Digraph.from_arc_mask(n, rng.getrandbits(n * n))
        r = d.reverse()
        members = set(range(0, n, 2))
        assert foot_set_plus(d, members) == foot_set_minus(r, members)
        assert head_set_plus(d, members) == head_set_minus(r, members)
        for p in (2, 3):
            assert (
                satisfies_condition(d, ConditionKind.C, p).satisfied
                == satisfies_condition(r, ConditionKind.C_PRIME, p).satisfied
            )
            assert (
                satisfies_condition(d, ConditionKind.C_STAR, p).satisfied
                == satisfies_condition(r, ConditionKind.C_STAR_PRIME, p).satisfied
            )

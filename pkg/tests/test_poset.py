"""Poset substrate: construction, closures, extrema, upset enumeration."""

import itertools

import pytest

from priestley import (
    build_poset,
    canonical_form,
    enumerate_upsets,
    extrema,
    order_closure,
    poset_from_json,
    poset_to_json,
)
from priestley.errors import (
    CycleDetected,
    DuplicateLabel,
    UnknownLabel,
    UnknownPoint,
)
from priestley.poset import relabel_canonically


def two_chain():
    return build_poset(["x1", "x2"], [("x1", "x2")])


def two_antichain():
    return build_poset(["a", "b"], [])


def vee():
    return build_poset(["a", "b", "c"], [("a", "c"), ("b", "c")])


def test_build_two_chain():
    P = two_chain()
    assert P.n == 2
    assert P.le(0, 1) and not P.le(1, 0)


def test_build_single_point():
    P = build_poset(["a"], [])
    assert P.n == 1
    assert P.le(0, 0)


def test_build_rejects_cycle():
    with pytest.raises(CycleDetected):
        build_poset(["a", "b"], [("a", "b"), ("b", "a")])


def test_build_rejects_duplicate_label():
    with pytest.raises(DuplicateLabel):
        build_poset(["a", "a"], [])


def test_build_rejects_unknown_label():
    with pytest.raises(UnknownLabel):
        build_poset(["a"], [("a", "b")])


def test_transitive_closure_applied():
    P = build_poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert P.le(0, 2)


def test_order_closure_examples():
    P = two_chain()
    assert order_closure(P, {0}, "up") == {0, 1}
    assert order_closure(P, {1}, "down") == {0, 1}
    A = two_antichain()
    assert order_closure(A, {0}, "up") == {0}


def test_order_closure_rejects_unknown_point():
    with pytest.raises(UnknownPoint):
        order_closure(two_chain(), {5}, "up")


def test_order_closure_laws():
    # idempotent, monotone, extensive; up/down dual under reversal
    for P in (two_chain(), two_antichain(), vee()):
        subsets = [frozenset(s) for k in range(P.n + 1)
                   for s in itertools.combinations(range(P.n), k)]
        for s in subsets:
            for d in ("up", "down"):
                c = order_closure(P, s, d)
                assert s <= c
                assert order_closure(P, c, d) == c
            for t in subsets:
                if s <= t:
                    assert order_closure(P, s, "up") <= order_closure(P, t, "up")


def test_extrema_examples():
    P = two_chain()
    assert extrema(P, {0, 1}, "max") == {1}
    assert extrema(P, frozenset(), "min") == frozenset()
    V = vee()
    assert extrema(V, {0, 1, 2}, "min") == {0, 1}


def test_extrema_every_point_dominated():
    for P in (two_chain(), vee()):
        full = frozenset(range(P.n))
        mins = extrema(P, full, "min")
        assert mins <= full
        for s in full:
            assert any(P.le(m, s) for m in mins)


def test_enumerate_upsets_examples():
    P = two_chain()
    assert enumerate_upsets(P) == [frozenset(), frozenset({1}), frozenset({0, 1})]
    A = two_antichain()
    assert enumerate_upsets(A) == [
        frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})
    ]
    single = build_poset(["a"], [])
    assert enumerate_upsets(single) == [frozenset(), frozenset({0})]


def test_upset_counts_chain_and_antichain():
    for n in range(1, 6):
        chain = build_poset([f"c{i}" for i in range(n)],
                            [(f"c{i}", f"c{i+1}") for i in range(n - 1)])
        assert len(enumerate_upsets(chain)) == n + 1
        anti = build_poset([f"a{i}" for i in range(n)], [])
        assert len(enumerate_upsets(anti)) == 2 ** n


def test_canonical_form_invariance():
    P = build_poset(["a", "b", "c"], [("a", "c"), ("b", "c")])
    Q = build_poset(["z", "y", "x"], [("x", "z"), ("y", "z")])
    R = build_poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert canonical_form(P) == canonical_form(Q)
    assert canonical_form(P) != canonical_form(R)
    assert canonical_form(relabel_canonically(P)) == canonical_form(P)


def test_json_round_trip():
    P = vee()
    again = poset_from_json(poset_to_json(P))
    assert again == P


def test_json_applies_closure():
    P = poset_from_json({"points": ["a", "b", "c"],
                         "covers": [["a", "b"], ["b", "c"]]})
    assert P.le(0, 2)

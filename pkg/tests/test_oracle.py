"""The verifier itself: enumeration counts, determinism, green runs."""

import pytest

from priestley import oracle
from priestley.errors import BoundExceeded, UnknownTheoremId


def test_poset_counts():
    # the number of posets up to isomorphism, by size
    expected = {1: 1, 2: 2, 3: 5, 4: 16, 5: 63, 6: 318}
    for n, count in expected.items():
        assert len(oracle.enumerate_posets(n)) == count


def test_posets_up_to():
    assert len(oracle.posets_up_to(3)) == 8


def test_bound_exceeded():
    with pytest.raises(BoundExceeded):
        oracle.enumerate_posets(7)
    with pytest.raises(BoundExceeded):
        oracle.run_suite(bound=7)


def test_unknown_theorem_id():
    with pytest.raises(UnknownTheoremId):
        oracle.run_suite(["no-such-id"])


def test_enumeration_deterministic():
    a = oracle.enumerate_posets(4)
    b = oracle.enumerate_posets(4)
    assert a == b
    assert all(P.labels == tuple(f"p{i}" for i in range(P.n)) for P in a)


def test_single_check_runs_green():
    cases = oracle.run_suite(["upset-Nj-eq-Fj"], bound=4)
    s = oracle.summarize(cases)
    assert s["failed"] == 0 and s["total"] == 24


def test_suite_reproducible():
    ids = ["eqv-conditions-rmax", "fan-figures"]
    a = oracle.run_suite(ids, bound=3)
    b = oracle.run_suite(ids, bound=3)
    assert a == b


def test_registry_complete():
    # one registered check per structural theme; the suite runs every
    # id it advertises
    assert len(oracle.CHECKS) >= 30
    cases = oracle.run_suite(["fan-figures", "fan-d-laws"], bound=1)
    assert {c.theorem_id for c in cases} == {"fan-figures", "fan-d-laws"}


def test_small_bound_suite_green():
    cases = oracle.run_suite(bound=3)
    s = oracle.summarize(cases)
    assert s["failed"] == 0
    assert s["total"] > 0

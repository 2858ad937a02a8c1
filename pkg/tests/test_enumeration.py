import os

import pytest

from freelang.automata import BoolOp, boolean_combine, product, quotient_complexity, reverse
from freelang.bounds import expected_bound
from freelang.enumeration import (FREE_CLASSES, SearchInfeasible, SearchSpec,
                                  enumerate_minimal_free_dfas, impossibility_check,
                                  max_complexity_search, reversal_witness_search,
                                  unary_max_search)
from freelang.freeness import classify
from brute import all_minimal


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pruned_matches_brute_force(n):
    brute = all_minimal(2, n)
    for cls in FREE_CLASSES:
        pruned = [(d.delta, d.finals) for d in enumerate_minimal_free_dfas(cls, 2, n)]
        assert len(pruned) == len(set(pruned)), cls
        assert set(pruned) == brute[cls], (cls, n)


# counts computed once by the unpruned enumerator in tests/brute.py
@pytest.mark.parametrize("cls,n,count", [
    ("prefix", 3, 5), ("suffix", 3, 5), ("suffix", 4, 45),
    ("bifix", 4, 15), ("bifix", 5, 125),
    ("factor", 4, 13), ("factor", 5, 75),
    ("subword", 4, 11), ("subword", 5, 49),
])
def test_binary_counts(cls, n, count):
    assert sum(1 for _ in enumerate_minimal_free_dfas(cls, 2, n)) == count


def test_prefix_free_three_states_listed():
    from freelang.automata import enumerate_language
    langs = sorted(tuple(enumerate_language(d, 3)) for d in enumerate_minimal_free_dfas("prefix", 2, 3))
    assert len(langs) == 5
    # {a}, {b}, {a,b}, a*b, b*a
    assert [(0,)] in [list(x) for x in langs]


def test_enumerated_automata_are_minimal_and_free():
    for d in enumerate_minimal_free_dfas("subword", 3, 4):
        assert quotient_complexity(d) == 4
        assert classify(d).subword_free


def test_unary_free_languages_are_single_powers():
    for n in range(2, 7):
        ds = list(enumerate_minimal_free_dfas("subword", 1, n))
        assert len(ds) == 1


@pytest.mark.parametrize("m,n", [(3, 4), (4, 4), (5, 3)])
def test_unary_union_is_max(m, n):
    r = max_complexity_search(SearchSpec("subword", 1, m, n, "union"))
    assert r.max_kappa == max(m, n) == expected_bound("free_unary", "union", m, n)


@pytest.mark.parametrize("cls", FREE_CLASSES)
@pytest.mark.parametrize("op", ["union", "intersection", "difference", "symmetric_difference",
                                "product"])
def test_search_respects_bounds(cls, op):
    r = max_complexity_search(SearchSpec(cls, 2, 4, 4, op))
    assert r.exhaustive
    assert r.max_kappa <= expected_bound(cls, op, 4, 4)
    k, l = r.witness_pair
    got = product(k, l) if op == "product" else boolean_combine(k, l, BoolOp(op))
    assert got.state_count == r.max_kappa


def test_workers_do_not_change_result():
    one = max_complexity_search(SearchSpec("factor", 2, 5, 5, "union", workers=1))
    two = max_complexity_search(SearchSpec("factor", 2, 5, 5, "union", workers=2))
    assert one.max_kappa == two.max_kappa == 13
    assert one.witness_pair == two.witness_pair
    assert one.candidates_examined == two.candidates_examined


def test_infeasible_needs_cap():
    with pytest.raises(SearchInfeasible):
        max_complexity_search(SearchSpec("factor", 2, 8, 8))
    r = max_complexity_search(SearchSpec("factor", 2, 7, 7, cap=50))
    assert not r.exhaustive
    assert r.candidates_examined <= 50 * 50


def test_spec_validation():
    with pytest.raises(ValueError):
        SearchSpec("regular", 2, 4, 4)
    with pytest.raises(ValueError):
        SearchSpec("factor", 2, 1, 4)
    with pytest.raises(ValueError):
        SearchSpec("factor", 2, 4, 4, "reversal")


@pytest.mark.parametrize("k", [2, 3, 4])
def test_reversal_witness_search(k):
    d = reversal_witness_search(2, k)
    assert d.state_count == k
    assert reverse(d).state_count == 2 ** k


def test_reversal_witness_search_unary_fails():
    assert reversal_witness_search(1, 2) is None


def test_binary_subword_reversal_below_bound():
    # the reversal bound needs more letters than two at n = 5
    best, _ = unary_max_search("subword", 2, 5, "reversal")
    assert best < expected_bound("subword", "reversal", None, 5)


def test_star_max_meets_bound():
    best, _ = unary_max_search("factor", 2, 5, "star")
    assert best == expected_bound("factor", "star", None, 5)


def test_impossibility_small():
    # binary subword-free union at m = n = 4 cannot reach 8
    assert impossibility_check("subword", "union", 4, 4, 2)
    assert not impossibility_check("subword", "union", 4, 4, 5)


@pytest.mark.slow
@pytest.mark.skipif(not os.environ.get("FREELANG_LONG"), reason="about 5 minutes; set FREELANG_LONG=1")
@pytest.mark.parametrize("op", ["union", "symmetric_difference"])
def test_binary_factor_union_six_seven_exhaustive(op):
    # beyond the default grid, so an explicit cap larger than the space is passed
    r = max_complexity_search(SearchSpec("factor", 2, 6, 7, op, cap=10 ** 9))
    assert r.exhaustive
    assert r.max_kappa == expected_bound("factor_binary", op, 6, 7) == 26

"""Acceptance suite: one check per acceptance criterion.

Run under pytest (a summary line per criterion is printed at the end) or
directly with ``python tests/test_acceptance.py``.
"""

import os
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from freelang.automata import (Alphabet, BoolOp, boolean_combine, minimize, product,
                               quotient_complexity, restrict_alphabet, reverse, star, words_dfa)
from freelang.bounds import MATCH, expected_bound
from freelang.enumeration import (SearchBudgetExceeded, SearchSpec, impossibility_check,
                                  max_complexity_search)
from freelang.freeness import (check_second_quotient_letter_reachability, classify,
                               is_bifix_free, is_factor_free, is_subword_free)
from freelang.witnesses import (Family, make_witness, subword_boolean_pair,
                                subword_boolean_reduced, verify_witness)
from oracles import RELATIONS, free_by_pairs, language, random_dfa, random_word_set, run, words_upto

# tolerances: every complexity is compared exactly
PAIR_SECONDS = 1.0          # per witness pair for boolean operations
IMPOSSIBILITY_BUDGET = 600  # seconds
RESULTS = []


def _record(cid, title, ok, detail):
    RESULTS.append((cid, title, "PASS" if ok else "FAIL", detail))
    return ok, detail


def _boolean_values(m, n):
    return {
        "intersection": m * n - 3 * (m + n - 4),
        "difference": m * n - (2 * m + 3 * n - 9),
        "union": m * n - (m + n),
        "symmetric_difference": m * n - (m + n),
    }


def criterion_1():
    worst, bad = 0.0, []
    for m in (4, 5, 6):
        for n in (4, 5, 6):
            t0 = time.perf_counter()
            pair = make_witness(Family.THM1_FACTOR_BOOL, m, n)
            ok = (is_factor_free(pair.left) and is_factor_free(pair.right)
                  and quotient_complexity(pair.left) == m and quotient_complexity(pair.right) == n)
            want = _boolean_values(m, n)
            for op, value in want.items():
                ok &= boolean_combine(pair.left, pair.right, op).state_count == value
            worst = max(worst, time.perf_counter() - t0)
            if not ok:
                bad.append((m, n))
    ok = not bad and worst < PAIR_SECONDS
    return _record(1, "factor-free boolean witnesses, m,n in 4..6", ok,
                   f"failures={bad} slowest={worst:.3f}s")


def criterion_2():
    worst, bad = 0.0, []
    for m, n in ((4, 4), (4, 5), (5, 6)):
        t0 = time.perf_counter()
        k, l = subword_boolean_pair(m, n)
        want = _boolean_values(m, n)
        ok = (is_subword_free(k) and is_subword_free(l) and len(k.alphabet) == m + n - 3
              and quotient_complexity(k) == m and quotient_complexity(l) == n)
        for op in ("union", "symmetric_difference", "intersection", "difference"):
            ok &= boolean_combine(k, l, op).state_count == want[op]
        drop = {"b", "c", f"d{m - 1}", f"e{n - 1}"}
        keep = [x for x in k.alphabet.names if x not in drop]
        ki, li = restrict_alphabet(k, keep), restrict_alphabet(l, keep)
        ok &= len(ki.alphabet) == m + n - 7
        ok &= boolean_combine(ki, li, "intersection").state_count == want["intersection"]
        kd, ld = subword_boolean_reduced(k, l, m, n, "difference")
        ok &= set(k.alphabet.names) - set(kd.alphabet.names) == drop - {"b"}
        ok &= boolean_combine(kd, ld, "difference").state_count == want["difference"]
        worst = max(worst, time.perf_counter() - t0)
        if not ok:
            bad.append((m, n))
    ok = not bad and worst < PAIR_SECONDS
    return _record(2, "subword-free boolean witnesses and reduced alphabets", ok,
                   f"failures={bad} slowest={worst:.3f}s")


def criterion_3():
    bad = []
    for m, n in ((6, 6), (6, 7), (7, 6)):
        pair = make_witness(Family.PROP6_BIFIX_BINARY, m, n)
        want = m * n - (m + n) - 2
        ok = is_bifix_free(pair.left) and is_bifix_free(pair.right)
        ok &= len(pair.left.alphabet) == 2
        ok &= boolean_combine(pair.left, pair.right, "union").state_count == want
        ok &= boolean_combine(pair.left, pair.right, "symmetric_difference").state_count == want
        if not ok:
            bad.append((m, n))
    return _record(3, "binary bifix-free union and symmetric difference", not bad,
                   f"failures={bad}")


def criterion_4():
    seen, bad = [], []
    for m, n in ((6, 6), (6, 7)):
        reports = verify_witness(Family.PROP8_FACTOR_BINARY, m, n)
        pair = make_witness(Family.PROP8_FACTOR_BINARY, m, n)
        want = expected_bound("factor_binary", "union", m, n)
        ok = is_factor_free(pair.left) and is_factor_free(pair.right)
        ok &= all(r.measured_kappa == want and r.verdict == MATCH for r in reports)
        ok &= all(r.expected["conjectural"] for r in reports)
        seen.append(reports[0].measured_kappa)
        if not ok:
            bad.append((m, n))
    # the formula gives 26 at (6,7); the value 25 quoted beside it is an arithmetic slip
    return _record(4, "binary factor-free union, conjectural upper bound", not bad,
                   f"measured={seen} formula={[21, 26]} conjectural=True failures={bad}")


def criterion_5():
    table = {(4, 4): 7, (5, 4): 10, (5, 5): 13, (6, 4): 13, (6, 5): 17, (6, 6): 21}
    got, exhaustive = {}, True
    t0 = time.perf_counter()
    for (m, n), _ in table.items():
        r = max_complexity_search(SearchSpec("factor", 2, m, n, "union"))
        got[(m, n)] = r.max_kappa
        exhaustive &= r.exhaustive
        k, l = r.witness_pair
        exhaustive &= boolean_combine(k, l, "union").state_count == r.max_kappa
    ok = got == table and exhaustive
    return _record(5, "exhaustive binary factor-free union table", ok,
                   f"values={[got[x] for x in table]} exhaustive={exhaustive} "
                   f"time={time.perf_counter() - t0:.1f}s")


def criterion_6():
    bad = []
    sigma = Alphabet.of("a")
    for m in range(4, 9):
        for n in range(4, 9):
            pair = make_witness(Family.THM3_PRODUCT_UNARY, m, n)
            if pair.left.alphabet != sigma or product(pair.left, pair.right).state_count != m + n - 2:
                bad.append(("product", m, n))
    for n in range(4, 9):
        pair = make_witness(Family.THM4_STAR_BINARY, None, n)
        if len(pair.left.alphabet) != 2 or star(pair.left).state_count != n - 1:
            bad.append(("star", n))
    return _record(6, "unary product and binary star", not bad, f"failures={bad}")


def criterion_7():
    bad = []
    for n in (3, 4, 5, 6, 7):
        pair = make_witness(Family.THM5_REVERSAL_FACTOR, None, n)
        d = pair.left
        if not (is_factor_free(d) and quotient_complexity(d) == n
                and reverse(d).state_count == 2 ** (n - 3) + 2):
            bad.append(("factor", n))
    for n in (4, 5, 6):
        d = make_witness(Family.THM6_REVERSAL_SUBWORD, None, n).left
        if not (is_subword_free(d) and quotient_complexity(d) == n
                and len(d.alphabet) == 2 ** (n - 3) - 1
                and reverse(d).state_count == 2 ** (n - 3) + 2):
            bad.append(("subword", n))
    return _record(7, "reversal of factor-free and subword-free witnesses", not bad,
                   f"failures={bad}")


class Skipped(Exception):
    pass


def criterion_8():
    t0 = time.perf_counter()
    try:
        none_attains = impossibility_check("subword", "union", 4, 4, 4,
                                           budget_seconds=IMPOSSIBILITY_BUDGET)
    except SearchBudgetExceeded as exc:
        RESULTS.append((8, "subword-free union bound unattainable over 4 letters", "SKIP",
                        f"budget of {IMPOSSIBILITY_BUDGET}s exceeded: {exc}"))
        raise Skipped(str(exc)) from None
    return _record(8, "subword-free union bound unattainable over 4 letters", none_attains,
                   f"bound={expected_bound('subword', 'union', 4, 4)} unattained={none_attains} "
                   f"time={time.perf_counter() - t0:.1f}s")


def _property_suites(rng):
    failures = []
    # minimization against brute-force languages
    for _ in range(500):
        d = random_dfa(rng)
        m = minimize(d)
        bound = min(2 * d.state_count, 7 if len(d.alphabet) == 3 else 16)
        if minimize(m) != m or language(m, bound) != language(d, bound):
            failures.append("minimize")
            break
    # operations against brute-force composition
    for _ in range(200):
        sigma = Alphabet.of("ab")
        k = random_dfa(rng, n=rng.randint(1, 5), alphabet=sigma)
        l = random_dfa(rng, n=rng.randint(1, 5), alphabet=sigma)
        lk, ll = language(k, 6), language(l, 6)
        words = list(words_upto(2, 6))
        for op in BoolOp:
            out = boolean_combine(k, l, op)
            if any(run(out, w) != op(w in lk, w in ll) for w in words):
                failures.append(op.value)
        if language(product(k, l), 6) != {u + v for u in lk for v in ll if len(u + v) <= 6}:
            failures.append("product")
        if language(reverse(k), 6) != {w[::-1] for w in lk}:
            failures.append("reverse")
        closure, frontier, base = {()}, {()}, lk - {()}
        while frontier:
            frontier = {u + v for u in frontier for v in base if len(u + v) <= 6} - closure
            closure |= frontier
        if language(star(k), 6) != closure:
            failures.append("star")
    # freeness predicates against pairwise word checks
    preds = {"prefix": lambda d: classify(d).prefix_free,
             "suffix": lambda d: classify(d).suffix_free,
             "factor": is_factor_free, "subword": is_subword_free}
    for _ in range(200):
        words = random_word_set(rng, 2)
        d = words_dfa(Alphabet.of("ab"), words)
        for rel in RELATIONS:
            if preds[rel](d) != free_by_pairs(words, rel):
                failures.append(f"{rel}-free")
    # hierarchy, structural consequences and letter reachability on witnesses
    grid = [(Family.THM1_FACTOR_BOOL, m, n) for m in (4, 5, 6) for n in (4, 5, 6)]
    grid += [(Family.THM2_SUBWORD_BOOL, m, n) for m, n in ((4, 4), (4, 5), (5, 6))]
    grid += [(Family.PROP6_BIFIX_BINARY, 6, 7), (Family.PROP8_FACTOR_BINARY, 6, 7),
             (Family.THM3_PRODUCT_UNARY, 5, 6), (Family.THM4_STAR_BINARY, None, 6),
             (Family.THM5_REVERSAL_FACTOR, None, 6), (Family.THM6_REVERSAL_SUBWORD, None, 6)]
    for family, m, n in grid:
        for d in make_witness(family, m, n).operands:
            f, md = classify(d), minimize(d)
            if f.subword_free and not (f.factor_free and f.finite):
                failures.append("hierarchy")
            if f.factor_free and not f.bifix_free:
                failures.append("hierarchy")
            if f.prefix_free and len(md.finals) != 1:
                failures.append("prefix structure")
            if f.suffix_free and any(md.initial in row for row in md.delta):
                failures.append("suffix structure")
            if f.subword_free and md.state_count >= 4 and \
                    not check_second_quotient_letter_reachability(md):
                failures.append("letter reachability")
    return failures


def criterion_9(seed=20101):
    failures = _property_suites(random.Random(seed))
    return _record(9, "property suites", not failures, f"failures={sorted(set(failures))}")


# ---------------------------------------------------------------------------
# pytest entry points

def test_criterion_1_factor_boolean():
    ok, detail = criterion_1()
    assert ok, detail


def test_criterion_2_subword_boolean():
    ok, detail = criterion_2()
    assert ok, detail


def test_criterion_3_binary_bifix_union():
    ok, detail = criterion_3()
    assert ok, detail


def test_criterion_4_binary_factor_union():
    ok, detail = criterion_4()
    assert ok, detail


@pytest.mark.slow
def test_criterion_5_enumeration_table():
    ok, detail = criterion_5()
    assert ok, detail


def test_criterion_6_product_and_star():
    ok, detail = criterion_6()
    assert ok, detail


def test_criterion_7_reversal():
    ok, detail = criterion_7()
    assert ok, detail


@pytest.mark.slow
def test_criterion_8_impossibility():
    try:
        ok, detail = criterion_8()
    except Skipped as exc:
        pytest.skip(f"time budget exceeded: {exc}")
    assert ok, detail


def test_criterion_9_property_suites():
    ok, detail = criterion_9(int(os.environ.get("FREELANG_SEED", "20101")))
    assert ok, detail


def format_line(entry):
    cid, title, status, detail = entry
    return f"criterion {cid} [{status}] {title}: {detail}"


def format_results():
    return [format_line(e) for e in sorted(RESULTS)]


if __name__ == "__main__":
    failed = False
    for fn in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
               criterion_7, criterion_8, criterion_9):
        try:
            ok, _ = fn()
            failed |= not ok
        except Skipped:
            pass
        print(format_line(RESULTS[-1]), flush=True)
    sys.exit(1 if failed else 0)

"""Parameterized witness languages that meet the complexity bounds exactly."""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .automata import (Alphabet, BoolOp, Dfa, boolean_combine, minimize, product,
                       quotient_complexity, restrict_alphabet, reverse, star)
from .bounds import ComplexityReport, bound_formula
from .enumeration import _cached_free, pair_kappa, _op_table, reversal_witness_search
from .freeness import adjoin, classify
from .regex import regex_to_dfa


class Family(enum.Enum):
    THM1_FACTOR_BOOL = "THM1_FACTOR_BOOL"
    PROP5_FACTOR_BINARY = "PROP5_FACTOR_BINARY"
    PROP6_BIFIX_BINARY = "PROP6_BIFIX_BINARY"
    PROP8_FACTOR_BINARY = "PROP8_FACTOR_BINARY"
    THM2_SUBWORD_BOOL = "THM2_SUBWORD_BOOL"
    THM3_PRODUCT_UNARY = "THM3_PRODUCT_UNARY"
    THM4_STAR_BINARY = "THM4_STAR_BINARY"
    THM5_REVERSAL_FACTOR = "THM5_REVERSAL_FACTOR"
    THM6_REVERSAL_SUBWORD = "THM6_REVERSAL_SUBWORD"


class WitnessError(ValueError):
    pass


BOOLS = ("intersection", "difference", "union", "symmetric_difference")

# family -> (freeness flag of the operands, bound class, operations, (min m, min n))
_FAMILIES = {
    Family.THM1_FACTOR_BOOL: ("factor_free", "factor", BOOLS, (4, 4)),
    Family.PROP5_FACTOR_BINARY: ("factor_free", "factor_binary", ("intersection", "difference"),
                                 (6, 6)),
    Family.PROP6_BIFIX_BINARY: ("bifix_free", "bifix_binary", ("union", "symmetric_difference"),
                                (6, 6)),
    Family.PROP8_FACTOR_BINARY: ("factor_free", "factor_binary", ("union", "symmetric_difference"),
                                 (6, 6)),
    Family.THM2_SUBWORD_BOOL: ("subword_free", "subword", BOOLS, (4, 4)),
    Family.THM3_PRODUCT_UNARY: ("subword_free", "subword", ("product",), (2, 2)),
    Family.THM4_STAR_BINARY: ("subword_free", "subword", ("star",), (None, 3)),
    Family.THM5_REVERSAL_FACTOR: ("factor_free", "factor", ("reversal",), (None, 3)),
    Family.THM6_REVERSAL_SUBWORD: ("subword_free", "subword", ("reversal",), (None, 4)),
}

UNARY_FAMILIES = (Family.THM4_STAR_BINARY, Family.THM5_REVERSAL_FACTOR,
                  Family.THM6_REVERSAL_SUBWORD)


@dataclass
class WitnessPair:
    family: Family
    m: Optional[int]
    n: int
    left: Dfa
    right: Optional[Dfa]
    declared: dict
    expected: dict = field(default_factory=dict)
    descriptions: tuple = ()

    @property
    def operands(self):
        return (self.left,) if self.right is None else (self.left, self.right)


# ---------------------------------------------------------------------------
# individual families

def factor_boolean_pair(m: int, n: int):
    sigma = Alphabet.of("abc")
    k = f"a(c*(a|b))^{m - 3}"
    l = f"a(b*(a|c))^{n - 3}"
    return regex_to_dfa(k, sigma), regex_to_dfa(l, sigma), (k, l)


def binary_bifix_union_pair(m: int, n: int):
    sigma = Alphabet.of("ab")
    block = f"((ba*)^{m - 5}b|a)"
    k = f"a{block}(b{block})*a"
    l = f"a(a|b)^{n - 4}(b(a|b)^{n - 4})*a"
    return regex_to_dfa(k, sigma), regex_to_dfa(l, sigma), (k, l)


def binary_factor_union_pair(m: int, n: int):
    # the pair loses m-3 states, so the smaller operand takes the a(b*a)^k shape
    sigma = Alphabet.of("ab")
    if m > n:
        r, l, (lr, ll) = binary_factor_union_pair(n, m)
        return l, r, (ll, lr)
    k = f"a(b*a)^{m - 3}"
    l = f"(a|b)(ba*)^{n - 4}b"
    return regex_to_dfa(k, sigma), regex_to_dfa(l, sigma), (k, l)


def subword_boolean_alphabet(m: int, n: int) -> Alphabet:
    return Alphabet(("a", "b", "c") + tuple(f"d{i}" for i in range(3, m))
                    + tuple(f"e{j}" for j in range(3, n)))


def _quotient_equations(sigma: Alphabet, size: int, first: tuple, own: str, other: str,
                        spare: str) -> Dfa:
    """DFA of one subword-free boolean witness with ``size`` quotients.

    States are 1..size (stored as 0..size-1); size-1 is ε and size is ∅.
    ``own`` is the letter family indexing this language's quotients (d or e),
    ``other`` the family of the partner language, ``spare`` the letter (b or
    c) used only by this language.
    """
    eps, empty = size - 1, size
    table = {q: {} for q in range(1, size + 1)}
    others = [f"{other}{j}" for j in first]
    for x in ["a", spare] + others:
        table[1][x] = 2
    for i in range(3, size):
        table[1][f"{own}{i}"] = i
    for i in range(2, size - 2):
        table[i]["a"] = i + 1
        table[i][f"{own}{i + 1}"] = eps
    # K_{m-2} has no d_{m-1} edge: d_{m-1} alone is already in K via K_1, and
    # a^{m-3} d_{m-1} would contain it as a subword
    for x in ["a", spare] + others:
        table[size - 2][x] = eps
    rows = []
    for q in range(1, size + 1):
        rows.append([table[q].get(x, empty) - 1 for x in sigma.names])
    return minimize(Dfa(sigma, rows, 0, {eps - 1}))


def subword_boolean_pair(m: int, n: int):
    sigma = subword_boolean_alphabet(m, n)
    k = _quotient_equations(sigma, m, tuple(range(3, n)), "d", "e", "b")
    l = _quotient_equations(sigma, n, tuple(range(3, m)), "e", "d", "c")
    return k, l


def subword_boolean_reduced(k: Dfa, l: Dfa, m: int, n: int, operation: str):
    """Operands over the smaller alphabet on which one operation stays tight."""
    drop = {"intersection": {"b", "c", f"d{m - 1}", f"e{n - 1}"},
            "difference": {"c", f"d{m - 1}", f"e{n - 1}"}}[operation]
    keep = [x for x in k.alphabet.names if x not in drop]
    return restrict_alphabet(k, keep), restrict_alphabet(l, keep)


def unary_power(length: int, alphabet: Alphabet) -> Dfa:
    return regex_to_dfa(f"a^{length}", alphabet)


@lru_cache(maxsize=None)
def factor_reversal_language(n: int) -> Dfa:
    sigma = Alphabet.of("abc")
    if n == 3:
        return regex_to_dfa("a", sigma)
    if n == 4:
        return regex_to_dfa("aa", sigma)
    inner = reversal_witness_search(2, n - 3)
    if inner is None:
        raise WitnessError(f"no binary DFA with {n - 3} states meets 2^{n - 3} for reversal")
    return adjoin(inner, "both", "c")


def subword_reversal_subsets(n: int) -> list:
    """Non-empty subsets of {1..n-3}, by size then lexicographically."""
    base = range(1, n - 2)
    return [s for r in range(1, n - 2) for s in itertools.combinations(base, r)]


def subword_reversal_language(n: int) -> Dfa:
    subsets = subword_reversal_subsets(n)
    ell = len(subsets)
    sigma = Alphabet(tuple(f"a{i}" for i in range(1, ell + 1)))
    # DFA of the reversed language: a_i then any a_j with j in S_i
    final, empty = ell + 1, ell + 2
    rows = [[i + 1 for i in range(ell)]]
    for s in subsets:
        rows.append([final if j + 1 in s else empty for j in range(ell)])
    rows.append([empty] * ell)
    rows.append([empty] * ell)
    reversed_language = Dfa(sigma, rows, 0, {final})
    return reverse(reversed_language)


@lru_cache(maxsize=None)
def binary_factor_intersection_pair(m: int, n: int):
    """First binary factor-free pair (enumeration order) tight for ∩ and ∖ at once."""
    if (m, n) != (6, 6):
        raise WitnessError("the binary factor-free intersection/difference witnesses are only "
                           "reconstructed by search at m = n = 6")
    want_i = m * n - 3 * (m + n - 4)
    want_d = m * n - (2 * m + 3 * n - 9)
    lefts = _cached_free("factor", 2, m)
    rights = _cached_free("factor", 2, n)
    t_i, t_d = _op_table("intersection"), _op_table("difference")
    for k in lefts:
        for l in rights:
            if (pair_kappa(k.delta, k.finals, l.delta, l.finals, t_i) == want_i
                    and pair_kappa(k.delta, k.finals, l.delta, l.finals, t_d) == want_d):
                return k, l
    raise WitnessError(f"no binary factor-free pair attains {want_i} and {want_d}")


# ---------------------------------------------------------------------------

def _check_params(family: Family, m, n):
    mins = _FAMILIES[family][3]
    if family in UNARY_FAMILIES:
        if n is None or n < mins[1]:
            raise WitnessError(f"{family.value} needs n >= {mins[1]}")
        if family is Family.THM5_REVERSAL_FACTOR and n > 7:
            raise WitnessError("THM5 inner automaton search is limited to n <= 7")
        if family is Family.THM6_REVERSAL_SUBWORD and n > 9:
            raise WitnessError("THM6 needs 2^(n-3)-1 letters; n <= 9 supported")
        return
    if m is None or n is None or m < mins[0] or n < mins[1]:
        raise WitnessError(f"{family.value} needs m >= {mins[0]} and n >= {mins[1]}")


def make_witness(family: Family | str, m: Optional[int] = None, n: Optional[int] = None,
                 verify: bool = True) -> WitnessPair:
    family = Family(family)
    _check_params(family, m, n)
    flag, cls, ops, _ = _FAMILIES[family]
    right = None
    descriptions = ()
    if family is Family.THM1_FACTOR_BOOL:
        left, right, descriptions = factor_boolean_pair(m, n)
    elif family is Family.PROP5_FACTOR_BINARY:
        left, right = binary_factor_intersection_pair(m, n)
        descriptions = ("enumeration search", "enumeration search")
    elif family is Family.PROP6_BIFIX_BINARY:
        left, right, descriptions = binary_bifix_union_pair(m, n)
    elif family is Family.PROP8_FACTOR_BINARY:
        left, right, descriptions = binary_factor_union_pair(m, n)
    elif family is Family.THM2_SUBWORD_BOOL:
        left, right = subword_boolean_pair(m, n)
        descriptions = ("quotient equations", "quotient equations")
    elif family is Family.THM3_PRODUCT_UNARY:
        sigma = Alphabet.of("a")
        left, right = unary_power(m - 2, sigma), unary_power(n - 2, sigma)
        descriptions = (f"a^{m - 2}", f"a^{n - 2}")
    elif family is Family.THM4_STAR_BINARY:
        left = unary_power(n - 2, Alphabet.of("ab"))
        descriptions = (f"a^{n - 2}",)
    elif family is Family.THM5_REVERSAL_FACTOR:
        left = factor_reversal_language(n)
        descriptions = ("a" if n == 3 else "aa" if n == 4 else "cKc, K from reversal search",)
    else:
        left = subword_reversal_language(n)
        descriptions = ("reverse of two-letter subset language",)

    declared = {flag: True}
    expected = {}
    for op in ops:
        expected[op] = bound_formula(cls, op)(m if m is not None else n, n)
    if family is Family.THM2_SUBWORD_BOOL:
        expected["intersection@reduced"] = expected["intersection"]
        expected["difference@reduced"] = expected["difference"]
    pair = WitnessPair(family, m, n, left, right, declared, expected, descriptions)
    if verify:
        _verify_operands(pair)
    return pair


def _verify_operands(pair: WitnessPair):
    sizes = (pair.n,) if pair.right is None else (pair.m, pair.n)
    for d, size in zip(pair.operands, sizes):
        kappa = quotient_complexity(d)
        if kappa != size:
            raise WitnessError(f"{pair.family.value}: operand has κ={kappa}, expected {size}")
        flags = classify(d).to_dict()
        for flag, want in pair.declared.items():
            if flags[flag] != want:
                raise WitnessError(f"{pair.family.value}: operand fails {flag}")


def apply_operation(op: str, left: Dfa, right: Optional[Dfa] = None) -> Dfa:
    if op == "product":
        return product(left, right)
    if op == "star":
        return star(left)
    if op == "reversal":
        return reverse(left)
    return boolean_combine(left, right, BoolOp(op))


def verify_witness(family: Family | str, m: Optional[int] = None,
                   n: Optional[int] = None) -> list:
    """Apply the family's operations and compare each κ with the stored bound."""
    pair = make_witness(family, m, n)
    flag, cls, ops, _ = _FAMILIES[pair.family]
    names = ["K", "L"] if pair.right is not None else ["L"]
    reports = []
    for op in ops:
        t0 = time.perf_counter()
        kappa = apply_operation(op, pair.left, pair.right).state_count
        reports.append(ComplexityReport.build(names, op, kappa, bound_formula(cls, op), m, n,
                                              time.perf_counter() - t0))
    if pair.family is Family.THM2_SUBWORD_BOOL:
        for op in ("intersection", "difference"):
            t0 = time.perf_counter()
            k, l = subword_boolean_reduced(pair.left, pair.right, m, n, op)
            kappa = apply_operation(op, k, l).state_count
            report = ComplexityReport.build(names, f"{op}@reduced", kappa,
                                            bound_formula(cls, op), m, n,
                                            time.perf_counter() - t0)
            reports.append(report)
    return reports


__all__ = [
    "Family", "WitnessError", "WitnessPair", "apply_operation", "make_witness",
    "subword_boolean_reduced", "verify_witness",
]

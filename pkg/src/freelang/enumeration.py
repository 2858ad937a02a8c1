"""Exhaustive search over small minimal DFAs of free languages.

Candidate transition tables are generated with the structure every minimal
DFA of the class must have, then filtered:

* prefix-free (and everything stronger): the last two states are the
  ε-quotient, the only final state, and the empty quotient;
* suffix-free (and everything stronger): no transition enters the initial
  state, and an empty quotient exists;
* subword-free languages are finite, so states can be numbered so that every
  transition moves forward or stays in the empty state.

Interchangeable middle states are only accepted when they are discovered in
breadth-first order, which removes most isomorphic copies before the more
expensive minimality and freeness checks.  A final canonical-form set
removes the rest.
"""

from __future__ import annotations

import itertools
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .automata import Alphabet, BoolOp, Dfa, _refine, minimize, product, reverse, star
from .bounds import expected_bound
from .freeness import _embeds

FREE_CLASSES = ("prefix", "suffix", "bifix", "factor", "subword")
PAIR_OPS = ("union", "intersection", "difference", "symmetric_difference", "product")

# feasible without an explicit cap: (class family, alphabet size) -> largest m, n
_FEASIBLE = {
    ("prefix", 2): 6, ("bifix", 2): 6, ("factor", 2): 6,
    ("suffix", 2): 4, ("subword", 2): 6, ("subword", 3): 5, ("subword", 4): 4,
    ("subword", 5): 4,
}


class SearchInfeasible(RuntimeError):
    pass


class SearchBudgetExceeded(RuntimeError):
    pass


def default_alphabet(size: int) -> Alphabet:
    if size <= 26:
        return Alphabet(tuple("abcdefghijklmnopqrstuvwxyz"[:size]))
    return Alphabet(tuple(f"a{i}" for i in range(1, size + 1)))


# ---------------------------------------------------------------------------
# candidate tables

def _bfs_canonical(delta, free_lo, free_hi) -> bool:
    """All states reachable, and states in [free_lo, free_hi) first seen in order."""
    seen = {0}
    queue = [0]
    want = free_lo
    i = 0
    while i < len(queue):
        for t in delta[queue[i]]:
            if t not in seen:
                if free_lo <= t < free_hi:
                    if t != want:
                        return False
                    want += 1
                seen.add(t)
                queue.append(t)
        i += 1
    return len(seen) == len(delta)


def _raw_tables(cls: str, k: int, n: int) -> Iterator[tuple]:
    """Yield (delta, finals) candidates for a class; may contain isomorphic copies."""
    if n == 1:
        yield ((0,) * k,), frozenset()
        return
    if cls == "suffix":
        sink = n - 1
        for combo in _canonical_rows(k, n - 1, 1, n, 1, n - 1):
            delta = combo + ((sink,) * k,)
            for bits in range(1, 2 ** (n - 1)):
                yield delta, frozenset(q for q in range(n - 1) if bits >> q & 1)
        return

    eps, sink = n - 2, n - 1
    tail = ((sink,) * k, (sink,) * k)
    finals = frozenset({eps})
    if cls == "subword":
        choices = [list(itertools.product(range(q + 1, n), repeat=k)) for q in range(n - 2)]
        for combo in itertools.product(*choices):
            delta = combo + tail
            if len(_reach(delta)) == n:
                yield delta, finals
        return
    lo = 0 if cls == "prefix" else 1
    for combo in _canonical_rows(k, n - 2, lo, n, 1, eps):
        yield combo + tail, finals


def _canonical_rows(k, rows, lo, hi, free_lo, free_hi):
    """Rows for states 0..rows-1 with targets in [lo, hi), in lexicographic order.

    States in [free_lo, free_hi) must be first reached in index order during a
    breadth-first walk from 0, and state free_hi (if below hi) must be reached.  This
    yields exactly the tables accepted by ``_bfs_canonical`` without walking
    the rejected ones.
    """
    slots = rows * k
    table = [0] * slots

    def fill(i, want, fixed_seen):
        if i == slots:
            if want >= free_hi and fixed_seen:
                yield tuple(tuple(table[q * k:(q + 1) * k]) for q in range(rows))
            return
        q = i // k
        if i % k == 0 and free_lo <= q < free_hi and q >= want:
            return  # state q is unreachable
        for t in range(lo, hi):
            if free_lo <= t < free_hi:
                if t > want:
                    continue
                table[i] = t
                yield from fill(i + 1, want + (t == want), fixed_seen)
            else:
                table[i] = t
                yield from fill(i + 1, want, fixed_seen or t == free_hi)

    yield from fill(0, free_lo, free_hi == 0 or free_hi >= hi)


def _reach(delta):
    seen = {0}
    stack = [0]
    while stack:
        for t in delta[stack.pop()]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def _in_class(d: Dfa, cls: str) -> bool:
    if cls == "prefix":
        return True  # forced by the table shape once minimal
    if cls == "suffix":
        return not _embeds(d, "suffix")
    if cls == "bifix":
        return not _embeds(d, "suffix")
    if cls == "factor":
        return not _embeds(d, "factor")
    if cls == "subword":
        return not _embeds(d, "subword")
    raise ValueError(f"unknown free class {cls!r}; expected one of {FREE_CLASSES}")


def enumerate_minimal_free_dfas(cls: str, alphabet_size: int, n: int,
                                alphabet: Optional[Alphabet] = None,
                                limit: Optional[int] = None) -> Iterator[Dfa]:
    """Every minimal DFA with ``n`` states whose language lies in ``cls``, once each.

    Automata are yielded in canonical numbering, in a fixed order.  ``limit``
    stops the stream after that many automata.
    """
    if cls not in FREE_CLASSES:
        raise ValueError(f"unknown free class {cls!r}; expected one of {FREE_CLASSES}")
    if n < 1 or alphabet_size < 1:
        raise ValueError("need n >= 1 and alphabet_size >= 1")
    alphabet = alphabet or default_alphabet(alphabet_size)
    if len(alphabet) != alphabet_size:
        raise ValueError("alphabet size mismatch")
    seen = set()
    for delta, finals in _raw_tables(cls, alphabet_size, n):
        if len(set(_refine(delta, finals, range(n)).values())) != n:
            continue
        d = Dfa(alphabet, delta, 0, finals)
        if not _in_class(d, cls):
            continue
        canon = minimize(d)
        key = (canon.delta, canon.finals)
        if key in seen:
            continue
        seen.add(key)
        yield canon
        if limit is not None and len(seen) >= limit:
            return


@lru_cache(maxsize=None)
def _cached_free(cls, k, n):
    return tuple(enumerate_minimal_free_dfas(cls, k, n))


# ---------------------------------------------------------------------------
# fast quotient complexity of a boolean combination

def _op_table(op: str):
    f = BoolOp(op)
    return {(x, y): f(x, y) for x in (False, True) for y in (False, True)}


def pair_kappa(dk, fk, dl, fl, table) -> int:
    """κ of the boolean combination of two complete DFAs given as raw tables."""
    n = len(dl)
    start = 0
    index = {start: 0}
    codes = [start]
    rows = []
    i = 0
    while i < len(codes):
        c = codes[i]
        p, q = divmod(c, n)
        row = []
        for tp, tq in zip(dk[p], dl[q]):
            code = tp * n + tq
            j = index.get(code)
            if j is None:
                j = index[code] = len(codes)
                codes.append(code)
            row.append(j)
        rows.append(row)
        i += 1
    block = [table[(c // n in fk, c % n in fl)] for c in codes]
    count = len(set(block))
    while True:
        sigs = {}
        new = [sigs.setdefault((block[s],) + tuple(block[t] for t in row), len(sigs))
               for s, row in enumerate(rows)]
        if len(sigs) == count:
            return count
        block, count = new, len(sigs)


# ---------------------------------------------------------------------------
# pair search

@dataclass
class SearchSpec:
    cls: str
    alphabet_size: int
    m: int
    n: int
    operation: str = "union"
    cap: Optional[int] = None
    workers: int = 1

    def __post_init__(self):
        if self.cls not in FREE_CLASSES:
            raise ValueError(f"unknown free class {self.cls!r}")
        if self.operation not in PAIR_OPS:
            raise ValueError(f"unknown operation {self.operation!r}; expected one of {PAIR_OPS}")
        if self.alphabet_size < 1 or self.m < 2 or self.n < 2:
            raise ValueError("need alphabet_size >= 1 and m, n >= 2")

    def feasible(self) -> bool:
        if self.alphabet_size == 1:
            return True
        limit = _FEASIBLE.get((self.cls, self.alphabet_size))
        return limit is not None and max(self.m, self.n) <= limit


@dataclass
class SearchResult:
    spec: SearchSpec
    max_kappa: int
    witness_pair: tuple
    candidates_examined: int
    exhaustive: bool
    operand_counts: tuple = ()
    seconds: float = field(default=0.0, compare=False)

    def to_dict(self):
        from .textformat import dumps_dfa
        s = self.spec
        return {
            "class": s.cls, "alphabet_size": s.alphabet_size, "m": s.m, "n": s.n,
            "operation": s.operation, "cap": s.cap,
            "max_kappa": self.max_kappa,
            "candidates_examined": self.candidates_examined,
            "exhaustive": self.exhaustive,
            "operand_counts": list(self.operand_counts),
            "witness_pair": [dumps_dfa(d) for d in self.witness_pair],
            "timings": {"seconds": round(self.seconds, 3)},
        }


def _scan_chunk(args):
    """Best (κ, i, j) over lefts[lo:hi] × rights; ties keep the first pair."""
    lefts, rights, lo, hi, op, symmetric, budget = args
    best = (-1, -1, -1)
    examined = 0
    table = None if op == "product" else _op_table(op)
    for i in range(lo, hi):
        k = lefts[i]
        for j in range(i if symmetric else 0, len(rights)):
            if budget is not None and examined >= budget:
                return best, examined, False
            l = rights[j]
            if table is None:
                kappa = product(k, l).state_count
            else:
                kappa = pair_kappa(k.delta, k.finals, l.delta, l.finals, table)
            examined += 1
            if kappa > best[0]:
                best = (kappa, i, j)
    return best, examined, True


def _operands(spec: SearchSpec):
    cap = spec.cap
    alphabet = default_alphabet(spec.alphabet_size)
    if cap is None:
        lefts = _cached_free(spec.cls, spec.alphabet_size, spec.m)
        rights = _cached_free(spec.cls, spec.alphabet_size, spec.n)
        return lefts, rights, True
    lefts = tuple(enumerate_minimal_free_dfas(spec.cls, spec.alphabet_size, spec.m, alphabet, cap))
    rights = tuple(enumerate_minimal_free_dfas(spec.cls, spec.alphabet_size, spec.n, alphabet, cap))
    full = len(lefts) < cap and len(rights) < cap
    return lefts, rights, full


def max_complexity_search(spec: SearchSpec, progress: bool = False) -> SearchResult:
    """Largest κ(K op L) over all pairs of free operands of sizes m and n.

    Without a cap the search must lie in the documented feasible grid;
    with a cap both operand streams and the number of examined pairs are
    truncated and the result is only a lower bound.
    """
    if spec.cap is None and not spec.feasible():
        raise SearchInfeasible(
            f"{spec.cls}-free search at alphabet {spec.alphabet_size}, m={spec.m}, n={spec.n} "
            "is outside the supported grid; pass a cap to run a truncated search")
    t0 = time.perf_counter()
    lefts, rights, full = _operands(spec)
    if progress:
        print(f"operands: {len(lefts)} x {len(rights)}", file=sys.stderr)
    commutative = spec.operation in ("union", "intersection", "symmetric_difference")
    symmetric = commutative and spec.m == spec.n

    workers = max(1, spec.workers)
    bounds = [round(len(lefts) * c / workers) for c in range(workers + 1)]
    if symmetric and workers > 1:
        # balance triangular work: chunk i costs about len - i
        total = len(lefts) * (len(lefts) + 1) / 2
        bounds, acc, c = [0], 0.0, 1
        for i in range(len(lefts)):
            acc += len(lefts) - i
            if acc >= total * c / workers and c < workers:
                bounds.append(i + 1)
                c += 1
        bounds.append(len(lefts))
    spans = [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]
    budget = None if spec.cap is None else max(1, spec.cap // len(spans))
    jobs = [(lefts, rights, lo, hi, spec.operation, symmetric, budget) for lo, hi in spans]

    if workers == 1 or len(jobs) == 1:
        results = []
        for job in jobs:
            results.append(_scan_chunk(job))
            if progress:
                print(f"  rows {job[2]}..{job[3]} done, best so far "
                      f"{max(r[0][0] for r in results)}", file=sys.stderr)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_chunk, jobs))

    best = (-1, -1, -1)
    examined = 0
    complete_scan = True
    for (kappa, i, j), count, done in results:
        examined += count
        complete_scan &= done
        # merge by max κ, ties to the lexicographically smallest pair
        if kappa > best[0] or (kappa == best[0] and (i, j) < best[1:]):
            best = (kappa, i, j)
    if best[0] < 0:
        raise SearchInfeasible("no operands of the requested sizes exist in this class")
    pair = (lefts[best[1]], rights[best[2]])
    exhaustive = spec.cap is None or (full and complete_scan and examined < spec.cap)
    return SearchResult(spec, best[0], pair, examined, exhaustive,
                        (len(lefts), len(rights)), time.perf_counter() - t0)


def unary_max_search(cls: str, alphabet_size: int, n: int, operation: str) -> tuple:
    """Largest κ of star or reversal over all free operands with n states."""
    fn = {"star": star, "reversal": reverse}[operation]
    best, witness = -1, None
    for d in enumerate_minimal_free_dfas(cls, alphabet_size, n):
        kappa = fn(d).state_count
        if kappa > best:
            best, witness = kappa, d
    return best, witness


# ---------------------------------------------------------------------------
# reversal witnesses and impossibility checks

def _all_tables(k: int, n: int):
    rows = list(itertools.product(range(n), repeat=k))
    for combo in itertools.product(rows, repeat=n):
        if _bfs_canonical(combo, 1, n):
            yield combo


@lru_cache(maxsize=None)
def reversal_witness_search(alphabet_size: int, k: int) -> Optional[Dfa]:
    """First DFA (in table order) with k states whose reversal has 2^k quotients.

    Returns None when no such automaton exists.
    """
    if k < 1:
        raise ValueError("k must be positive")
    alphabet = default_alphabet(alphabet_size)
    target = 2 ** k
    for delta in _all_tables(alphabet_size, k):
        for bits in range(1, 2 ** k):
            finals = frozenset(q for q in range(k) if bits >> q & 1)
            if len(set(_refine(delta, finals, range(k)).values())) != k:
                continue
            d = Dfa(alphabet, delta, 0, finals)
            if reverse(d).state_count == target:
                return d
    return None


def search_space_size(cls: str, alphabet_size: int, n: int) -> int:
    """Number of raw transition tables the generator walks for one operand size."""
    k = alphabet_size
    if n <= 2:
        return 1
    if cls == "subword":
        size = 1
        for q in range(n - 2):
            size *= (n - 1 - q) ** k
        return size
    if cls == "suffix":
        return (n - 1) ** ((n - 1) * k) * (2 ** (n - 1))
    lo = 0 if cls == "prefix" else 1
    return (n - lo) ** ((n - 2) * k)


MAX_SEARCH_SPACE = 2_000_000


def impossibility_check(cls: str, operation: str, m: int, n: int, alphabet_size: int,
                        budget_seconds: Optional[float] = None,
                        bound_class: Optional[str] = None) -> bool:
    """True iff no pair of free operands attains the stored bound at this alphabet size.

    Stops at the first attaining pair.  Raises :class:`SearchInfeasible` when
    the raw operand tables exceed ``MAX_SEARCH_SPACE`` and
    :class:`SearchBudgetExceeded` when ``budget_seconds`` runs out.
    """
    if operation not in PAIR_OPS:
        raise ValueError(f"unknown operation {operation!r}")
    space = search_space_size(cls, alphabet_size, m) + search_space_size(cls, alphabet_size, n)
    if space > MAX_SEARCH_SPACE:
        raise SearchInfeasible(
            f"{space} raw operand tables exceed the limit of {MAX_SEARCH_SPACE}")
    target = expected_bound(bound_class or cls, operation, m, n)
    t0 = time.perf_counter()
    lefts = _cached_free(cls, alphabet_size, m)
    rights = _cached_free(cls, alphabet_size, n)
    table = None if operation == "product" else _op_table(operation)
    for i, k in enumerate(lefts):
        if budget_seconds is not None and time.perf_counter() - t0 > budget_seconds:
            raise SearchBudgetExceeded(f"stopped after {i} of {len(lefts)} left operands")
        for l in rights:
            if table is None:
                kappa = product(k, l).state_count
            else:
                kappa = pair_kappa(k.delta, k.finals, l.delta, l.finals, table)
            if kappa >= target:
                return False
    return True

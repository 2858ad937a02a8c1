"""Complete DFAs, NFAs, and the operations whose quotient complexity we measure.

Symbols are small integers indexing into an :class:`Alphabet`; words are
tuples of symbols.  A :class:`Dfa` stores its transition table as a tuple of
rows, ``delta[state][symbol]``.  Every operation returns a complete, minimal
automaton numbered canonically (breadth-first from the initial state, letters
in alphabet order), so two automata accept the same language exactly when
they compare equal after :func:`minimize`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("alphabet must be non-empty")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate letter names in {names!r}")
        for name in names:
            if not isinstance(name, str) or not name or name.isspace():
                raise ValueError(f"bad letter name {name!r}")

    @classmethod
    def of(cls, names: str | Iterable[str]) -> Alphabet:
        """``Alphabet.of("abc")`` or ``Alphabet.of(["a", "d3"])``."""
        return cls(tuple(names))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(range(len(self.names)))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"letter {name!r} not in alphabet {self.names}") from None

    def word(self, text: str | Sequence[str]) -> Word:
        """Parse a word written with letter names.

        A string is split greedily on the longest matching name, so with
        letters ``d3`` and ``a`` the text ``"ad3a"`` is three letters.  A list
        of names is taken as-is.
        """
        if not isinstance(text, str):
            return tuple(self.index(x) for x in text)
        by_len = sorted(self.names, key=len, reverse=True)
        out, pos = [], 0
        while pos < len(text):
            for name in by_len:
                if text.startswith(name, pos):
                    out.append(self.names.index(name))
                    pos += len(name)
                    break
            else:
                raise ValueError(f"no letter of {self.names} at position {pos} of {text!r}")
        return tuple(out)

    def show(self, word: Word) -> str:
        if not word:
            return "ε"
        sep = "" if all(len(x) == 1 for x in self.names) else " "
        return sep.join(self.names[s] for s in word)


class BoolOp(enum.Enum):
    UNION = "union"
    INTERSECTION = "intersection"
    DIFFERENCE = "difference"
    SYMMETRIC_DIFFERENCE = "symmetric_difference"

    def __call__(self, x: bool, y: bool) -> bool:
        if self is BoolOp.UNION:
            return x or y
        if self is BoolOp.INTERSECTION:
            return x and y
        if self is BoolOp.DIFFERENCE:
            return x and not y
        return x != y


@dataclass(frozen=True)
class Dfa:
    """Deterministic automaton; ``None`` in ``delta`` marks a missing transition.

    Only :func:`complete` accepts a partial automaton.  Everything else
    requires a total transition table.
    """

    alphabet: Alphabet
    delta: tuple
    initial: int
    finals: frozenset

    def __post_init__(self):
        delta = tuple(tuple(row) for row in self.delta)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "finals", frozenset(self.finals))
        n, k = len(delta), len(self.alphabet)
        if n == 0:
            raise ValueError("a DFA needs at least one state")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        if any(not 0 <= f < n for f in self.finals):
            raise ValueError(f"final states {sorted(self.finals)} out of range")
        for q, row in enumerate(delta):
            if len(row) != k:
                raise ValueError(f"state {q} has {len(row)} transitions, expected {k}")
            for t in row:
                if t is not None and not 0 <= t < n:
                    raise ValueError(f"transition target {t} out of range")

    @property
    def state_count(self) -> int:
        return len(self.delta)

    @property
    def is_complete(self) -> bool:
        return all(t is not None for row in self.delta for t in row)

    def step(self, q: int, word: Word) -> int:
        for a in word:
            q = self.delta[q][a]
        return q

    def __repr__(self):
        return (f"Dfa(states={self.state_count}, alphabet={''.join(self.alphabet.names)!r}, "
                f"initial={self.initial}, finals={sorted(self.finals)})")


@dataclass(frozen=True)
class Nfa:
    alphabet: Alphabet
    delta: tuple  # delta[state][symbol] -> frozenset of states
    initials: frozenset
    finals: frozenset

    def __post_init__(self):
        delta = tuple(tuple(frozenset(ts) for ts in row) for row in self.delta)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        n, k = len(delta), len(self.alphabet)
        for q, row in enumerate(delta):
            if len(row) != k:
                raise ValueError(f"state {q} has {len(row)} transition sets, expected {k}")
            for ts in row:
                if any(not 0 <= t < n for t in ts):
                    raise ValueError("transition target out of range")
        if any(not 0 <= q < n for q in self.initials | self.finals):
            raise ValueError("initial/final state out of range")

    @property
    def state_count(self) -> int:
        return len(self.delta)


def _require_complete(d: Dfa):
    if not d.is_complete:
        raise ValueError("operation needs a complete DFA; call complete() first")


def _same_alphabet(k: Dfa, l: Dfa):
    if k.alphabet != l.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {k.alphabet.names} vs {l.alphabet.names}")


def _check_word(alphabet: Alphabet, w: Word):
    k = len(alphabet)
    for a in w:
        if not isinstance(a, int) or not 0 <= a < k:
            raise ValueError(f"symbol {a!r} not in alphabet {alphabet.names}")


def accepts(d: Dfa, w: Word) -> bool:
    _require_complete(d)
    _check_word(d.alphabet, w)
    return d.step(d.initial, w) in d.finals


def complete(d: Dfa) -> Dfa:
    """Route every missing transition to a fresh non-final sink."""
    if d.is_complete:
        return d
    sink = d.state_count
    delta = [tuple(sink if t is None else t for t in row) for row in d.delta]
    delta.append((sink,) * len(d.alphabet))
    return Dfa(d.alphabet, delta, d.initial, d.finals)


# ---------------------------------------------------------------------------
# minimization

def _reachable(delta, initial) -> list:
    seen = {initial}
    order = [initial]
    i = 0
    while i < len(order):
        for t in delta[order[i]]:
            if t not in seen:
                seen.add(t)
                order.append(t)
        i += 1
    return order


def _refine(delta, finals, states) -> dict:
    """Moore partition refinement over ``states``; returns state -> block id."""
    block = {q: (q in finals) for q in states}
    count = len(set(block.values()))
    while True:
        sigs = {}
        new = {}
        for q in states:
            sig = (block[q],) + tuple(block[t] for t in delta[q])
            new[q] = sigs.setdefault(sig, len(sigs))
        if len(sigs) == count:
            return new
        block, count = new, len(sigs)


def _canonical(delta, initial, finals, block) -> tuple:
    """BFS renumbering of the quotient automaton induced by ``block``."""
    rep = {}
    for q in sorted(block):
        rep.setdefault(block[q], q)
    number = {block[initial]: 0}
    queue = [block[initial]]
    rows = []
    i = 0
    while i < len(queue):
        q = rep[queue[i]]
        row = []
        for t in delta[q]:
            b = block[t]
            if b not in number:
                number[b] = len(queue)
                queue.append(b)
            row.append(number[b])
        rows.append(tuple(row))
        i += 1
    fin = frozenset(number[block[q]] for q in rep.values() if q in finals)
    return tuple(rows), fin


def minimize(d: Dfa) -> Dfa:
    """Quotient automaton of L(d): reachable, reduced, canonically numbered."""
    _require_complete(d)
    states = _reachable(d.delta, d.initial)
    block = _refine(d.delta, d.finals, states)
    rows, fin = _canonical(d.delta, d.initial, d.finals, block)
    return Dfa(d.alphabet, rows, 0, fin)


def quotient_complexity(d: Dfa) -> int:
    _require_complete(d)
    states = _reachable(d.delta, d.initial)
    return len(set(_refine(d.delta, d.finals, states).values()))


def is_minimal(d: Dfa) -> bool:
    return quotient_complexity(d) == d.state_count


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    _same_alphabet(d1, d2)
    return minimize(d1) == minimize(d2)


# ---------------------------------------------------------------------------
# boolean operations, product, star, reversal

def cross_product(k: Dfa, l: Dfa, op: BoolOp) -> Dfa:
    """Reachable part of the cross-product automaton, not minimized."""
    _same_alphabet(k, l)
    _require_complete(k)
    _require_complete(l)
    start = (k.initial, l.initial)
    index = {start: 0}
    pairs = [start]
    rows = []
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        row = []
        for tp, tq in zip(k.delta[p], l.delta[q]):
            nxt = (tp, tq)
            if nxt not in index:
                index[nxt] = len(pairs)
                pairs.append(nxt)
            row.append(index[nxt])
        rows.append(row)
        i += 1
    finals = {j for j, (p, q) in enumerate(pairs) if op(p in k.finals, q in l.finals)}
    return Dfa(k.alphabet, rows, 0, finals)


def boolean_combine(k: Dfa, l: Dfa, op: BoolOp | str) -> Dfa:
    return minimize(cross_product(k, l, BoolOp(op)))


def determinize(n: Nfa) -> Dfa:
    """Subset construction over reachable subsets, stored as bit masks."""
    k = len(n.alphabet)
    succ = [[sum(1 << t for t in n.delta[q][a]) for a in range(k)] for q in range(n.state_count)]
    fmask = sum(1 << q for q in n.finals)
    start = sum(1 << q for q in n.initials)
    index = {start: 0}
    subsets = [start]
    rows = []
    i = 0
    while i < len(subsets):
        s = subsets[i]
        row = []
        for a in range(k):
            t, bits, q = 0, s, 0
            while bits:
                if bits & 1:
                    t |= succ[q][a]
                bits >>= 1
                q += 1
            if t not in index:
                index[t] = len(subsets)
                subsets.append(t)
            row.append(index[t])
        rows.append(row)
        i += 1
    finals = {j for j, s in enumerate(subsets) if s & fmask}
    return Dfa(n.alphabet, rows, 0, finals)


def dfa_to_nfa(d: Dfa) -> Nfa:
    _require_complete(d)
    return Nfa(d.alphabet, [[{t} for t in row] for row in d.delta], {d.initial}, d.finals)


def product(k: Dfa, l: Dfa) -> Dfa:
    """Concatenation KL."""
    _same_alphabet(k, l)
    _require_complete(k)
    _require_complete(l)
    m = k.state_count
    rows = []
    for q, row in enumerate(k.delta):
        branch = q in k.finals
        rows.append([{t} | ({m + l.delta[l.initial][a]} if branch else set())
                     for a, t in enumerate(row)])
    for row in l.delta:
        rows.append([{m + t} for t in row])
    initials = {k.initial} | ({m + l.initial} if k.initial in k.finals else set())
    finals = {m + f for f in l.finals}
    if l.initial in l.finals:
        finals |= set(k.finals)
    return minimize(determinize(Nfa(k.alphabet, rows, initials, finals)))


def star(d: Dfa) -> Dfa:
    _require_complete(d)
    n = d.state_count
    new = n  # fresh initial state, final, never re-entered
    loop = d.delta[d.initial]
    rows = []
    for q, row in enumerate(d.delta):
        rows.append([{t} | ({loop[a]} if q in d.finals else set()) for a, t in enumerate(row)])
    rows.append([{t} for t in loop])
    return minimize(determinize(Nfa(d.alphabet, rows, {new}, set(d.finals) | {new})))


def reverse_nfa(d: Dfa) -> Nfa:
    _require_complete(d)
    k = len(d.alphabet)
    rows = [[set() for _ in range(k)] for _ in range(d.state_count)]
    for q, row in enumerate(d.delta):
        for a, t in enumerate(row):
            rows[t][a].add(q)
    return Nfa(d.alphabet, rows, d.finals, {d.initial})


def reverse(d: Dfa) -> Dfa:
    return minimize(determinize(reverse_nfa(d)))


# ---------------------------------------------------------------------------
# small constructions used throughout

def empty_dfa(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, [(0,) * len(alphabet)], 0, ())


def epsilon_dfa(alphabet: Alphabet) -> Dfa:
    k = len(alphabet)
    return Dfa(alphabet, [(1,) * k, (1,) * k], 0, {0})


def universal_dfa(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, [(0,) * len(alphabet)], 0, {0})


def words_dfa(alphabet: Alphabet, words: Iterable[Word]) -> Dfa:
    """Minimal DFA of a finite set of words (trie, completed, minimized)."""
    k = len(alphabet)
    rows = [[None] * k]
    finals = set()
    for w in words:
        _check_word(alphabet, w)
        q = 0
        for a in w:
            if rows[q][a] is None:
                rows[q][a] = len(rows)
                rows.append([None] * k)
            q = rows[q][a]
        finals.add(q)
    return minimize(complete(Dfa(alphabet, rows, 0, finals)))


def extend_alphabet(d: Dfa, alphabet: Alphabet) -> Dfa:
    """Same language over a larger alphabet; new letters lead to a sink."""
    _require_complete(d)
    old = d.alphabet.names
    missing = [name for name in old if name not in alphabet.names]
    if missing:
        raise AlphabetMismatch(f"letters {missing} missing from {alphabet.names}")
    sink = d.state_count
    rows = []
    for row in d.delta:
        rows.append([row[old.index(x)] if x in old else sink for x in alphabet.names])
    rows.append([sink] * len(alphabet))
    return minimize(Dfa(alphabet, rows, d.initial, d.finals))


def restrict_alphabet(d: Dfa, keep: Iterable[str]) -> Dfa:
    """L(d) ∩ Γ* over the sub-alphabet Γ (letters kept in original order)."""
    _require_complete(d)
    keep = set(keep)
    names = tuple(x for x in d.alphabet.names if x in keep)
    if len(names) != len(keep):
        raise AlphabetMismatch(f"letters {sorted(keep - set(names))} not in {d.alphabet.names}")
    cols = [d.alphabet.index(x) for x in names]
    rows = [[row[c] for c in cols] for row in d.delta]
    return minimize(Dfa(Alphabet(names), rows, d.initial, d.finals))


def rename_letters(d: Dfa, mapping: dict) -> Dfa:
    names = tuple(mapping.get(x, x) for x in d.alphabet.names)
    return Dfa(Alphabet(names), d.delta, d.initial, d.finals)


# ---------------------------------------------------------------------------
# language enumeration

def _distance_to_final(d: Dfa) -> list:
    inf = float("inf")
    dist = [0 if q in d.finals else inf for q in range(d.state_count)]
    changed = True
    while changed:
        changed = False
        for q, row in enumerate(d.delta):
            best = min(dist[t] for t in row) + 1
            if best < dist[q]:
                dist[q] = best
                changed = True
    return dist


def enumerate_language(d: Dfa, max_len: int) -> list:
    """Accepted words of length ≤ max_len in length-lexicographic order."""
    _require_complete(d)
    dist = _distance_to_final(d)
    out = []

    def walk(q, prefix, left):
        if left == 0:
            if q in d.finals:
                out.append(tuple(prefix))
            return
        for a, t in enumerate(d.delta[q]):
            if dist[t] <= left - 1:
                prefix.append(a)
                walk(t, prefix, left - 1)
                prefix.pop()

    for length in range(max_len + 1):
        if dist[d.initial] <= length:
            walk(d.initial, [], length)
    return out

"""Prefix-, suffix-, bifix-, factor- and subword-freeness of regular languages.

The suffix, factor and subword tests search a product of the automaton with
itself for a pair ``x, w`` of accepted words where ``x`` embeds properly in
``w``.  No determinization is needed, so the tests work on infinite languages
and stay polynomial in the number of states.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .automata import Alphabet, Dfa, _require_complete, extend_alphabet, minimize, product, words_dfa


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class FreeClass:
    prefix_free: bool
    suffix_free: bool
    bifix_free: bool
    factor_free: bool
    subword_free: bool
    finite: bool

    def to_dict(self):
        return asdict(self)


# ---------------------------------------------------------------------------
# helpers on a complete DFA

def _live_states(d: Dfa) -> set:
    """States from which some final state is reachable."""
    preds = [set() for _ in range(d.state_count)]
    for q, row in enumerate(d.delta):
        for t in row:
            preds[t].add(q)
    live = set(d.finals)
    stack = list(live)
    while stack:
        for p in preds[stack.pop()]:
            if p not in live:
                live.add(p)
                stack.append(p)
    return live


def _sink(d: Dfa):
    """Index of the empty state of a minimal DFA, or None."""
    live = _live_states(d)
    for q in range(d.state_count):
        if q not in live:
            return q
    return None


def _embeds(d: Dfa, mode: str) -> bool:
    """True iff some accepted word properly contains another accepted word.

    ``mode`` selects the containment: "prefix", "suffix", "factor" (w = u x v)
    or "subword" (scattered subsequence).
    """
    _require_complete(d)
    live = _live_states(d)
    if d.initial not in live:
        return False
    delta, finals, init = d.delta, d.finals, d.initial

    if mode == "subword":
        # (state of w, state of x, some letter of w skipped)
        start = (init, init, False)
        seen = {start}
        stack = [start]
        while stack:
            p, q, skipped = stack.pop()
            if skipped and p in finals and q in finals:
                return True
            for a, tp in enumerate(delta[p]):
                if tp not in live:
                    continue
                for nxt in ((tp, delta[q][a], skipped), (tp, q, True)):
                    if nxt[1] in live and nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
        return False

    # phases: 0 reading u, 1 reading x (tracking q), 2 reading v
    allow_u = mode in ("suffix", "factor")
    allow_v = mode in ("prefix", "factor")
    seen = set()
    stack = []

    def push(node):
        p, phase, q, u_used, v_used = node
        if node in seen:
            return
        seen.add(node)
        stack.append(node)
        if phase == 0:
            push((p, 1, init, u_used, v_used))
        elif phase == 1 and q in finals:
            push((p, 2, -1, u_used, v_used))

    push((init, 0, -1, False, False))
    while stack:
        p, phase, q, u_used, v_used = stack.pop()
        if phase == 2 and p in finals and (u_used or v_used):
            return True
        for a, tp in enumerate(delta[p]):
            if tp not in live:
                continue
            if phase == 0 and allow_u:
                push((tp, 0, -1, True, v_used))
            elif phase == 1:
                tq = delta[q][a]
                if tq in live:
                    push((tp, 1, tq, u_used, v_used))
            elif phase == 2 and allow_v:
                push((tp, 2, -1, u_used, True))
    return False


# ---------------------------------------------------------------------------
# predicates

def is_prefix_free(d: Dfa) -> bool:
    m = minimize(d)
    if not m.finals:
        return True
    if len(m.finals) != 1:
        return False
    (f,) = m.finals
    targets = set(m.delta[f])
    if len(targets) != 1:
        return False
    (s,) = targets
    return s != f and s not in m.finals and all(t == s for t in m.delta[s])


def is_suffix_free(d: Dfa) -> bool:
    return not _embeds(d, "suffix")


def is_bifix_free(d: Dfa) -> bool:
    return is_prefix_free(d) and is_suffix_free(d)


def is_factor_free(d: Dfa) -> bool:
    return not _embeds(d, "factor")


def is_subword_free(d: Dfa) -> bool:
    return not _embeds(d, "subword")


def is_finite(d: Dfa) -> bool:
    """No cycle runs through a state that is both reachable and live."""
    m = minimize(d)
    live = _live_states(m)
    color = {}

    def cyclic(q):
        color[q] = 1
        for t in m.delta[q]:
            if t not in live:
                continue
            c = color.get(t)
            if c == 1 or (c is None and cyclic(t)):
                return True
        color[q] = 2
        return False

    return not (m.initial in live and cyclic(m.initial))


def classify(d: Dfa) -> FreeClass:
    prefix = is_prefix_free(d)
    suffix = is_suffix_free(d)
    return FreeClass(
        prefix_free=prefix,
        suffix_free=suffix,
        bifix_free=prefix and suffix,
        factor_free=is_factor_free(d),
        subword_free=is_subword_free(d),
        finite=is_finite(d),
    )


def classify_json(d: Dfa) -> str:
    from .automata import quotient_complexity
    record = classify(d).to_dict()
    record["kappa"] = quotient_complexity(d)
    return json.dumps(record, sort_keys=True)


# ---------------------------------------------------------------------------
# structure of finite languages

def topological_quotient_order(d: Dfa) -> list:
    """Order the states of a minimal DFA of a finite language so transitions go forward.

    The empty state, if any, comes last; ties go to the smaller state index.
    """
    if minimize(d) != d:
        raise PreconditionError("DFA must be minimal and canonically numbered; call minimize()")
    if not is_finite(d):
        raise PreconditionError("language is infinite; no forward order of quotients exists")
    sink = _sink(d)
    nodes = [q for q in range(d.state_count) if q != sink]
    indeg = {q: 0 for q in nodes}
    for q in nodes:
        for t in set(d.delta[q]):
            if t != sink:
                indeg[t] += 1
    order = []
    ready = sorted(q for q in nodes if indeg[q] == 0)
    while ready:
        q = ready.pop(0)
        order.append(q)
        for t in sorted(set(d.delta[q])):
            if t != sink:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
                    ready.sort()
    if sink is not None:
        order.append(sink)
    return order


def check_second_quotient_letter_reachability(d: Dfa) -> bool:
    """Every quotient that can come second in a forward order is reached only by letters.

    A state can be placed second exactly when all its incoming transitions
    come from the initial state.  For each such state we collect the lengths
    of all words that reach it and require that set to be {1}.
    """
    if minimize(d) != d:
        raise PreconditionError("DFA must be minimal and canonically numbered; call minimize()")
    if d.state_count < 4:
        raise PreconditionError(f"needs at least 4 quotients, got {d.state_count}")
    if not is_subword_free(d):
        raise PreconditionError("language is not subword-free")
    sink = _sink(d)
    preds = {q: set() for q in range(d.state_count)}
    for q, row in enumerate(d.delta):
        for t in row:
            preds[t].add(q)
    candidates = [q for q in range(d.state_count)
                  if q not in (d.initial, sink) and preds[q] and preds[q] <= {d.initial}]
    if not candidates:
        return False

    # lengths of words reaching each state; finite since the language is finite
    lengths = {d.initial: {0}}
    for q in topological_quotient_order(d):
        if q == sink:
            continue
        for t in set(d.delta[q]):
            if t != sink:
                for length in lengths.get(q, ()):
                    lengths.setdefault(t, set()).add(length + 1)
    return all(lengths.get(q) == {1} for q in candidates)


# ---------------------------------------------------------------------------
# constructing free languages

def adjoin(d: Dfa, mode: str, letter: str) -> Dfa:
    """Language aL, La or aLa for a fresh letter a ("prefix_letter", "suffix_letter", "both")."""
    if letter in d.alphabet.names:
        raise ValueError(f"letter {letter!r} already in alphabet {d.alphabet.names}")
    if mode not in ("prefix_letter", "suffix_letter", "both"):
        raise ValueError(f"unknown adjoin mode {mode!r}")
    alphabet = Alphabet(d.alphabet.names + (letter,))
    body = extend_alphabet(d, alphabet)
    mark = words_dfa(alphabet, [(len(alphabet) - 1,)])
    out = body
    if mode in ("prefix_letter", "both"):
        out = product(mark, out)
    if mode in ("suffix_letter", "both"):
        out = product(out, mark)
    return out


__all__ = [
    "FreeClass", "PreconditionError", "adjoin", "check_second_quotient_letter_reachability",
    "classify", "classify_json", "is_bifix_free", "is_factor_free", "is_finite",
    "is_prefix_free", "is_subword_free", "is_suffix_free", "topological_quotient_order",
]

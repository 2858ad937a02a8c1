"""Regular expressions with a power operator, parsed and compiled to DFAs.

Grammar (highest precedence first)::

    atom    := letter | 'name' | () | ∅ | ε | ( expr )
    postfix := atom ( * | ^k | ^{k} )*
    concat  := postfix+
    expr    := concat ( (| or ∪) concat )*

Single-character letters are written bare; multi-character letter names such
as ``d3`` are quoted: ``'d3'``.  Whitespace is ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import (Alphabet, BoolOp, Dfa, boolean_combine, empty_dfa, epsilon_dfa,
                       minimize, product, star, words_dfa)


class Regex:
    __slots__ = ()


@dataclass(frozen=True)
class Empty(Regex):
    pass


@dataclass(frozen=True)
class Epsilon(Regex):
    pass


@dataclass(frozen=True)
class Letter(Regex):
    symbol: int


@dataclass(frozen=True)
class Union(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Concat(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Star(Regex):
    inner: Regex


@dataclass(frozen=True)
class Power(Regex):
    inner: Regex
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")


class RegexSyntaxError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


_UNION = ("|", "∪")


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def error(self, message):
        raise RegexSyntaxError(message, self.text, self.pos)

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> Regex:
        node = self.expr()
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self):
        node = self.concat()
        while self.peek() in _UNION:
            self.pos += 1
            node = Union(node, self.concat())
        return node

    def concat(self):
        node = self.postfix()
        while self.peek() is not None and self.peek() not in _UNION and self.peek() != ")":
            node = Concat(node, self.postfix())
        return node

    def postfix(self):
        node = self.atom()
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                node = Star(node)
            elif c == "^":
                self.pos += 1
                node = Power(node, self.exponent())
            else:
                return node

    def exponent(self):
        braced = self.peek() == "{"
        if braced:
            self.pos += 1
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected exponent digits")
        value = int(self.text[start:self.pos])
        if braced:
            if self.peek() != "}":
                self.error("expected '}'")
            self.pos += 1
        return value

    def atom(self):
        c = self.peek()
        if c is None:
            self.error("unexpected end of expression")
        if c == "(":
            self.pos += 1
            if self.peek() == ")":
                self.pos += 1
                return Epsilon()
            node = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return node
        if c == "∅":
            self.pos += 1
            return Empty()
        if c == "ε":
            self.pos += 1
            return Epsilon()
        if c == "'":
            end = self.text.find("'", self.pos + 1)
            if end < 0:
                self.error("unterminated quoted letter")
            name = self.text[self.pos + 1:end]
            return self.letter(name, end + 1)
        if c in "*^)|∪":
            self.error(f"unexpected {c!r}")
        return self.letter(c, self.pos + 1)

    def letter(self, name, after):
        if name not in self.alphabet.names:
            self.error(f"unknown letter {name!r}")
        self.pos = after
        return Letter(self.alphabet.names.index(name))


def parse_regex(text: str, alphabet: Alphabet) -> Regex:
    return _Parser(text, alphabet).parse()


def _needs_quotes(name: str) -> bool:
    return len(name) != 1 or name.isdigit() or name in "()*^|∪'∅ε{} "


def print_regex(r: Regex, alphabet: Alphabet) -> str:
    """Inverse of :func:`parse_regex` up to structural equality."""

    def go(r, ctx):
        # ctx: 0 = anywhere, 1 = concat operand, 2 = postfix operand
        if isinstance(r, Empty):
            return "∅"
        if isinstance(r, Epsilon):
            return "()"
        if isinstance(r, Letter):
            name = alphabet.names[r.symbol]
            return f"'{name}'" if _needs_quotes(name) else name
        if isinstance(r, Union):
            s = f"{go(r.left, 0)}|{go(r.right, 1)}"
            return f"({s})" if ctx >= 1 else s
        if isinstance(r, Concat):
            right = go(r.right, 2) if isinstance(r.right, Concat) else go(r.right, 1)
            s = go(r.left, 1) + right
            return f"({s})" if ctx >= 2 else s
        if isinstance(r, Star):
            return go(r.inner, 2) + "*"
        if isinstance(r, Power):
            return f"{go(r.inner, 2)}^{r.exponent}"
        raise TypeError(f"not a regex node: {r!r}")

    return go(r, 0)


def regex_to_dfa(r: Regex | str, alphabet: Alphabet) -> Dfa:
    """Minimal complete DFA for ``r``, built bottom-up from the node operations."""
    if isinstance(r, str):
        r = parse_regex(r, alphabet)
    k = len(alphabet)

    def build(r):
        if isinstance(r, Empty):
            return empty_dfa(alphabet)
        if isinstance(r, Epsilon):
            return epsilon_dfa(alphabet)
        if isinstance(r, Letter):
            if not 0 <= r.symbol < k:
                raise ValueError(f"symbol {r.symbol} not in alphabet {alphabet.names}")
            return words_dfa(alphabet, [(r.symbol,)])
        if isinstance(r, Union):
            return boolean_combine(build(r.left), build(r.right), BoolOp.UNION)
        if isinstance(r, Concat):
            return product(build(r.left), build(r.right))
        if isinstance(r, Star):
            return star(build(r.inner))
        if isinstance(r, Power):
            base = build(r.inner)
            out = epsilon_dfa(alphabet)
            for _ in range(r.exponent):
                out = product(out, base)
            return out
        raise TypeError(f"not a regex node: {r!r}")

    return minimize(build(r))

"""Line-based DFA text format.

::

    # comment
    states 3
    alphabet a b
    initial 0
    finals 1
    1 2
    2 2
    2 2

After the four header lines come ``states`` rows of transition targets in
alphabet order.  ``-`` marks a missing transition (partial automata only).
``dumps_dfa`` writes the canonical form, which ``loads_dfa`` reads back exactly.
"""

from __future__ import annotations

from pathlib import Path

from .automata import Alphabet, Dfa


class DfaFormatError(ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


def dumps_dfa(d: Dfa) -> str:
    lines = [
        f"states {d.state_count}",
        "alphabet " + " ".join(d.alphabet.names),
        f"initial {d.initial}",
        " ".join(["finals"] + [str(f) for f in sorted(d.finals)]),
    ]
    for row in d.delta:
        lines.append(" ".join("-" if t is None else str(t) for t in row))
    return "\n".join(lines) + "\n"


def loads_dfa(text: str) -> Dfa:
    body = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            body.append((number, line.split()))
    header = {}
    for key in ("states", "alphabet", "initial", "finals"):
        if not body:
            raise DfaFormatError(f"missing '{key}' header", len(text.splitlines()) + 1)
        number, fields = body.pop(0)
        if fields[0] != key:
            raise DfaFormatError(f"expected '{key}', got {fields[0]!r}", number)
        header[key] = (number, fields[1:])

    def ints(key, fields, number):
        try:
            return [int(x) for x in fields]
        except ValueError:
            raise DfaFormatError(f"'{key}' needs integers", number) from None

    number, fields = header["states"]
    if len(fields) != 1:
        raise DfaFormatError("'states' takes one integer", number)
    (n,) = ints("states", fields, number)
    number, names = header["alphabet"]
    try:
        alphabet = Alphabet(names)
    except ValueError as exc:
        raise DfaFormatError(str(exc), number) from None
    number, fields = header["initial"]
    if len(fields) != 1:
        raise DfaFormatError("'initial' takes one integer", number)
    (initial,) = ints("initial", fields, number)
    number, fields = header["finals"]
    finals = ints("finals", fields, number)

    if len(body) != n:
        where = body[n][0] if len(body) > n else len(text.splitlines()) + 1
        raise DfaFormatError(f"expected {n} transition rows, found {len(body)}", where)
    rows = []
    for number, fields in body:
        if len(fields) != len(alphabet):
            raise DfaFormatError(f"expected {len(alphabet)} targets, got {len(fields)}", number)
        row = []
        for x in fields:
            if x == "-":
                row.append(None)
                continue
            try:
                row.append(int(x))
            except ValueError:
                raise DfaFormatError(f"bad transition target {x!r}", number) from None
        rows.append(row)
    try:
        return Dfa(alphabet, rows, initial, finals)
    except ValueError as exc:
        raise DfaFormatError(str(exc), header["states"][0]) from None


def read_dfa(path) -> Dfa:
    return loads_dfa(Path(path).read_text(encoding="utf-8"))


def write_dfa(d: Dfa, path) -> None:
    Path(path).write_text(dumps_dfa(d), encoding="utf-8")

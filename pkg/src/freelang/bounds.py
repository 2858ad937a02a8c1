"""Closed-form complexity bounds for free and reference language classes.

Each entry maps ``(class, operation)`` to a formula in the operand
complexities ``m`` (left) and ``n`` (right, or the only operand for star and
reversal), together with the alphabet size needed for tightness.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

CLASSES = (
    "free_unary", "prefix", "suffix", "bifix", "factor", "subword",
    "bifix_binary", "factor_binary", "regular",
)
BOOLEAN_OPS = ("union", "symmetric_difference", "intersection", "difference")
OPERATIONS = BOOLEAN_OPS + ("product", "star", "reversal")
UNARY_OPS = ("star", "reversal")


@dataclass(frozen=True)
class BoundFormula:
    cls: str
    operation: str
    formula_id: str
    text: str
    fn: Callable = field(repr=False, compare=False)
    alphabet: str = ""
    conjectural: bool = False
    min_m: int = 1
    min_n: int = 1
    tight: bool = True  # False: reference value or upper bound only

    def __call__(self, m: int, n: int) -> int:
        if self.operation in UNARY_OPS:
            if n < self.min_n:
                raise ValueError(f"{self.formula_id} needs n >= {self.min_n}, got n={n}")
        elif m < self.min_m or n < self.min_n:
            raise ValueError(f"{self.formula_id} needs m >= {self.min_m}, n >= {self.min_n}; "
                             f"got m={m}, n={n}")
        return self.fn(m, n)


_TABLE: dict = {}


def _add(cls, ops, formula_id, text, fn, alphabet="", conjectural=False, min_m=1, min_n=1,
         tight=True):
    for op in ops:
        _TABLE[(cls, op)] = BoundFormula(cls, op, formula_id, text, fn, alphabet, conjectural,
                                         min_m, min_n, tight)


# unary free languages are exactly {a^(n-2)}
_add("free_unary", ["union", "symmetric_difference"], "unary.union", "max(m,n)",
     lambda m, n: max(m, n), min_m=2, min_n=2)
_add("free_unary", ["intersection"], "unary.intersection", "m (when m=n)",
     lambda m, n: m, min_m=2, min_n=2)
_add("free_unary", ["difference"], "unary.difference", "m", lambda m, n: m, min_m=2, min_n=2)
_add("free_unary", ["product"], "unary.product", "m+n-2", lambda m, n: m + n - 2, min_m=2, min_n=2)
_add("free_unary", ["star"], "unary.star", "n", lambda m, n: n, min_n=2, tight=False)
_add("free_unary", ["reversal"], "unary.reversal", "2^(n-2)+1", lambda m, n: 2 ** (n - 2) + 1,
     min_n=2, tight=False)

_add("prefix", ["union", "symmetric_difference"], "prefix.union", "mn-2",
     lambda m, n: m * n - 2, "2", min_m=3, min_n=3)
_add("prefix", ["intersection"], "prefix.intersection", "mn-2(m+n-3)",
     lambda m, n: m * n - 2 * (m + n - 3), "2", min_m=3, min_n=3)
_add("prefix", ["difference"], "prefix.difference", "mn-(m+2n-4)",
     lambda m, n: m * n - (m + 2 * n - 4), "2", min_m=3, min_n=3)
_add("prefix", ["product"], "prefix.product", "m+n-2", lambda m, n: m + n - 2, "1", min_m=2, min_n=2)
_add("prefix", ["star"], "prefix.star", "n", lambda m, n: n, "2", min_n=2)
_add("prefix", ["reversal"], "prefix.reversal", "2^(n-2)+1", lambda m, n: 2 ** (n - 2) + 1, "3",
     min_n=2)

_add("suffix", ["union", "symmetric_difference"], "suffix.union", "mn-(m+n-2)",
     lambda m, n: m * n - (m + n - 2), "2", min_m=3, min_n=3)
_add("suffix", ["intersection"], "suffix.intersection", "mn-2(m+n-3)",
     lambda m, n: m * n - 2 * (m + n - 3), "2", min_m=3, min_n=3)
_add("suffix", ["difference"], "suffix.difference", "mn-(m+2n-4)",
     lambda m, n: m * n - (m + 2 * n - 4), "2", min_m=3, min_n=3)
_add("suffix", ["product"], "suffix.product", "(m-1)2^(n-1)+1",
     lambda m, n: (m - 1) * 2 ** (n - 1) + 1, "3", min_m=2, min_n=2)
_add("suffix", ["star"], "suffix.star", "2^(n-2)+1", lambda m, n: 2 ** (n - 2) + 1, "2", min_n=2)
_add("suffix", ["reversal"], "suffix.reversal", "2^(n-2)+1", lambda m, n: 2 ** (n - 2) + 1, "3",
     min_n=2)

for _cls in ("bifix", "factor"):
    _add(_cls, ["union", "symmetric_difference"], "bifix_factor.union", "mn-(m+n)",
         lambda m, n: m * n - (m + n), "3", min_m=4, min_n=4)
    _add(_cls, ["intersection"], "bifix_factor.intersection", "mn-3(m+n-4)",
         lambda m, n: m * n - 3 * (m + n - 4), "2", min_m=4, min_n=4)
    _add(_cls, ["difference"], "bifix_factor.difference", "mn-(2m+3n-9)",
         lambda m, n: m * n - (2 * m + 3 * n - 9), "2", min_m=4, min_n=4)
    _add(_cls, ["product"], "bifix_factor.product", "m+n-2", lambda m, n: m + n - 2, "1",
         min_m=2, min_n=2)
    _add(_cls, ["star"], "bifix_factor.star", "n-1", lambda m, n: n - 1, "2", min_n=3)
    _add(_cls, ["reversal"], "bifix_factor.reversal", "2^(n-3)+2", lambda m, n: 2 ** (n - 3) + 2,
         "3", min_n=3)

_add("subword", ["union", "symmetric_difference"], "subword.union", "mn-(m+n)",
     lambda m, n: m * n - (m + n), "m+n-3", min_m=4, min_n=4)
_add("subword", ["intersection"], "subword.intersection", "mn-3(m+n-4)",
     lambda m, n: m * n - 3 * (m + n - 4), "m+n-7", min_m=4, min_n=4)
_add("subword", ["difference"], "subword.difference", "mn-(2m+3n-9)",
     lambda m, n: m * n - (2 * m + 3 * n - 9), "m+n-6", min_m=4, min_n=4)
_add("subword", ["product"], "subword.product", "m+n-2", lambda m, n: m + n - 2, "1",
     min_m=2, min_n=2)
_add("subword", ["star"], "subword.star", "n-1", lambda m, n: n - 1, "2", min_n=3)
_add("subword", ["reversal"], "subword.reversal", "2^(n-3)+2", lambda m, n: 2 ** (n - 3) + 2,
     "2^(n-3)-1", min_n=3)

# binary alphabet refinements
_add("bifix_binary", ["union"], "bifix_binary.union", "mn-(m+n)-2",
     lambda m, n: m * n - (m + n) - 2, "2", min_m=4, min_n=4)
# upper bound is proved for union only; the symmetric-difference value is a lower bound
_add("bifix_binary", ["symmetric_difference"], "bifix_binary.symmetric_difference",
     "mn-(m+n)-2", lambda m, n: m * n - (m + n) - 2, "2", conjectural=True, min_m=6, min_n=6)
_add("bifix_binary", ["intersection"], "bifix_factor.intersection", "mn-3(m+n-4)",
     lambda m, n: m * n - 3 * (m + n - 4), "2", min_m=4, min_n=4)
_add("bifix_binary", ["difference"], "bifix_factor.difference", "mn-(2m+3n-9)",
     lambda m, n: m * n - (2 * m + 3 * n - 9), "2", min_m=4, min_n=4)
_add("factor_binary", ["union", "symmetric_difference"], "factor_binary.union",
     "mn-(m+n)-min(m-3,n-3)", lambda m, n: m * n - (m + n) - min(m - 3, n - 3), "2",
     conjectural=True, min_m=6, min_n=6)
_add("factor_binary", ["intersection"], "bifix_factor.intersection", "mn-3(m+n-4)",
     lambda m, n: m * n - 3 * (m + n - 4), "2", min_m=4, min_n=4)
_add("factor_binary", ["difference"], "bifix_factor.difference", "mn-(2m+3n-9)",
     lambda m, n: m * n - (2 * m + 3 * n - 9), "2", min_m=4, min_n=4)

for _op in BOOLEAN_OPS:
    _add("regular", [_op], "regular." + _op, "mn", lambda m, n: m * n, "2")
_add("regular", ["product"], "regular.product", "(2m-1)2^(n-1)",
     lambda m, n: (2 * m - 1) * 2 ** (n - 1), "2")
_add("regular", ["star"], "regular.star", "2^(n-1)+2^(n-2)",
     lambda m, n: 2 ** (n - 1) + 2 ** (n - 2), "2", min_n=2)
_add("regular", ["reversal"], "regular.reversal", "2^n", lambda m, n: 2 ** n, "2")


def bound_formula(cls: str, operation: str) -> BoundFormula:
    try:
        return _TABLE[(cls, operation)]
    except KeyError:
        raise ValueError(f"no bound stored for class {cls!r} and operation {operation!r}") from None


def expected_bound(cls: str, operation: str, m: Optional[int], n: int) -> int:
    """Evaluate the stored bound; ``m`` is ignored for star and reversal."""
    return bound_formula(cls, operation)(m if m is not None else n, n)


def all_formulas() -> list:
    return list(_TABLE.values())


# ---------------------------------------------------------------------------
# reports

MATCH, BELOW, ABOVE = "match", "below_bound", "ABOVE_BOUND_ALERT"


def judge(measured: int, expected: Optional[int]) -> Optional[str]:
    if expected is None:
        return None
    if measured == expected:
        return MATCH
    return BELOW if measured < expected else ABOVE


@dataclass
class ComplexityReport:
    operands: list
    operation: str
    measured_kappa: int
    expected: Optional[dict]  # value, formula_id, formula, conjectural
    verdict: Optional[str]
    timings: dict = field(default_factory=dict)

    @classmethod
    def build(cls, operands, operation, measured, formula: Optional[BoundFormula], m, n,
              seconds=None):
        expected = None
        if formula is not None:
            expected = {
                "value": formula(m if m is not None else n, n),
                "formula_id": formula.formula_id,
                "formula": formula.text,
                "conjectural": formula.conjectural,
            }
        verdict = judge(measured, expected["value"] if expected else None)
        timings = {} if seconds is None else {"seconds": round(seconds, 6)}
        return cls(list(operands), operation, measured, expected, verdict, timings)

    @property
    def alarming(self) -> bool:
        """Measured value exceeds a proved (non-conjectural) bound."""
        return self.verdict == ABOVE and not self.expected["conjectural"]

    def to_dict(self):
        return asdict(self)

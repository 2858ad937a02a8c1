"""Command-line interface: ``freelang classify|op|witness|table|enumerate|check``.

Exit codes: 0 success, 1 usage or input error, 2 a measured complexity
exceeded a proved bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .automata import AlphabetMismatch, Dfa, complete, quotient_complexity
from .bounds import ABOVE, BOOLEAN_OPS, ComplexityReport, all_formulas, bound_formula, judge
from .enumeration import FREE_CLASSES, PAIR_OPS, SearchInfeasible, SearchSpec, max_complexity_search
from .freeness import classify
from .textformat import DfaFormatError, dumps_dfa, read_dfa, write_dfa
from .witnesses import Family, WitnessError, apply_operation, make_witness, verify_witness

OPS = BOOLEAN_OPS + ("product", "star", "reversal")
EXIT_OK, EXIT_USAGE, EXIT_ALERT = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj, fmt):
    if fmt == "json":
        return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)
    lines = []
    for key, value in obj.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True, ensure_ascii=False)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _load(path) -> Dfa:
    """Read a DFA file; partial automata get a sink."""
    try:
        d = read_dfa(path)
    except FileNotFoundError:
        raise UsageError(f"{path}: no such file") from None
    except DfaFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None
    return d if d.is_complete else complete(d)


def _out_dir(args):
    if args.out is None:
        return None
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def operand_class(dfas) -> str:
    """Strongest free class shared by all operands, as a bound-table class name."""
    flags = [classify(d) for d in dfas]
    if all(len(d.alphabet) == 1 for d in dfas) and all(f.prefix_free for f in flags):
        return "free_unary"
    for cls in ("subword", "factor", "bifix", "prefix", "suffix"):
        if all(getattr(f, f"{cls}_free") for f in flags):
            return cls
    return "regular"


# ---------------------------------------------------------------------------
# subcommands

def cmd_classify(args):
    d = _load(args.file)
    record = classify(d).to_dict()
    record["kappa"] = quotient_complexity(d)
    print(_dump(record, args.format))
    return EXIT_OK


def cmd_op(args):
    unary = args.operation in ("star", "reversal")
    if unary and args.right is not None:
        raise UsageError(f"{args.operation} takes one operand")
    if not unary and args.right is None:
        raise UsageError(f"{args.operation} takes two operands")
    left = _load(args.left)
    right = None if unary else _load(args.right)
    operands = [left] if unary else [left, right]
    t0 = time.perf_counter()
    try:
        result = apply_operation(args.operation, left, right)
    except AlphabetMismatch as exc:
        raise UsageError(str(exc)) from None
    seconds = time.perf_counter() - t0
    cls = args.cls or operand_class(operands)
    m = quotient_complexity(left)
    n = m if unary else quotient_complexity(right)
    formula = None
    try:
        formula = bound_formula(cls, args.operation)
        formula(m, n)
    except ValueError:
        formula = None
    names = [str(args.left)] + ([] if unary else [str(args.right)])
    report = ComplexityReport.build(names, args.operation, result.state_count, formula, m, n,
                                    seconds)
    record = report.to_dict()
    record["class"] = cls
    out = _out_dir(args)
    if out is not None:
        write_dfa(result, out / "result.dfa")
    print(_dump(record, args.format))
    return EXIT_ALERT if report.alarming else EXIT_OK


def cmd_witness(args):
    try:
        pair = make_witness(args.family, args.m, args.n)
        reports = verify_witness(args.family, args.m, args.n)
    except WitnessError as exc:
        raise UsageError(str(exc)) from None
    names = ["K", "L"] if pair.right is not None else ["L"]
    record = {
        "family": pair.family.value, "m": pair.m, "n": pair.n,
        "operands": {name: dumps_dfa(d) for name, d in zip(names, pair.operands)},
        "descriptions": dict(zip(names, pair.descriptions)),
        "reports": [r.to_dict() for r in reports],
    }
    out = _out_dir(args)
    if out is not None:
        for name, d in zip(names, pair.operands):
            write_dfa(d, out / f"{name}.dfa")
        (out / "report.json").write_text(_dump(record, "json") + "\n", encoding="utf-8")
    print(_dump(record, args.format))
    return EXIT_ALERT if any(r.alarming for r in reports) else EXIT_OK


# rows rendered by the table command; witness families supply measured values
_TABLE_ROWS = {
    1: [("free_unary", None), ("prefix", None), ("suffix", None), ("bifix", "bifix"),
        ("factor", "factor"), ("subword", "subword"), ("regular", None)],
    2: [("free_unary", None), ("prefix", None), ("suffix", None), ("bifix", "bifix"),
        ("factor", "factor"), ("subword", "subword"), ("regular", None)],
}
_TABLE_OPS = {1: ("union", "symmetric_difference", "intersection", "difference"),
              2: ("product", "star", "reversal")}


def _measured(cls, op, m, n):
    """κ measured on the witness family covering (cls, op), or None."""
    if cls in ("bifix", "factor"):
        family = {"product": Family.THM3_PRODUCT_UNARY, "star": Family.THM4_STAR_BINARY,
                  "reversal": Family.THM5_REVERSAL_FACTOR}.get(op, Family.THM1_FACTOR_BOOL)
    else:
        family = {"product": Family.THM3_PRODUCT_UNARY, "star": Family.THM4_STAR_BINARY,
                  "reversal": Family.THM6_REVERSAL_SUBWORD}.get(op, Family.THM2_SUBWORD_BOOL)
    unary = op in ("star", "reversal")
    try:
        pair = make_witness(family, None if unary else m, n)
    except WitnessError:
        return None
    return apply_operation(op, pair.left, pair.right).state_count


def cmd_table(args):
    table_id = args.table
    if table_id not in _TABLE_ROWS:
        raise UsageError("table id must be 1 or 2")
    m, n = args.m, args.n
    rows = []
    for cls, measured_cls in _TABLE_ROWS[table_id]:
        row = {"class": cls}
        for op in _TABLE_OPS[table_id]:
            formula = bound_formula(cls, op)
            try:
                value = formula(m, n)
            except ValueError:
                value = None
            cell = {"formula": formula.text, "value": value, "alphabet": formula.alphabet}
            if measured_cls is not None:
                cell["measured"] = _measured(measured_cls, op, m, n)
            row[op] = cell
        rows.append(row)
    if args.format == "json":
        print(json.dumps({"table": table_id, "m": m, "n": n, "rows": rows}, indent=2,
                         sort_keys=True, ensure_ascii=False))
        return EXIT_OK
    ops = _TABLE_OPS[table_id]
    header = ["class"] + list(ops)
    lines = []
    for row in rows:
        cells = [row["class"]]
        for op in ops:
            c = row[op]
            text = f"{c['formula']} = {c['value'] if c['value'] is not None else '-'}"
            if "measured" in c:
                text += f" [measured {c['measured'] if c['measured'] is not None else '-'}]"
            cells.append(text)
        lines.append(cells)
    widths = [max(len(str(r[i])) for r in [header] + lines) for i in range(len(header))]
    print(f"table {table_id} at m={m}, n={n}")
    for r in [header] + lines:
        print("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip())
    return EXIT_OK


def cmd_enumerate(args):
    spec = SearchSpec(args.cls, args.alphabet, args.m, args.n, args.operation,
                      cap=args.force_cap, workers=args.workers)
    try:
        result = max_complexity_search(spec, progress=True)
    except SearchInfeasible as exc:
        raise UsageError(str(exc)) from None
    record = result.to_dict()
    record["expected"] = _search_bound(spec)
    record["verdict"] = judge(result.max_kappa, record["expected"] and record["expected"]["value"])
    out = _out_dir(args)
    if out is not None:
        k, l = result.witness_pair
        write_dfa(k, out / "K.dfa")
        write_dfa(l, out / "L.dfa")
        (out / "result.json").write_text(_dump(record, "json") + "\n", encoding="utf-8")
    print(_dump(record, args.format))
    if record["verdict"] == ABOVE and not record["expected"]["conjectural"]:
        return EXIT_ALERT
    return EXIT_OK


def _search_bound(spec):
    """Bound for a search, preferring the alphabet-specific refinement when one exists."""
    candidates = [spec.cls]
    if spec.alphabet_size == 1:
        candidates = ["free_unary"]
    elif spec.alphabet_size == 2:
        candidates.insert(0, f"{spec.cls}_binary")
    for cls in candidates:
        try:
            f = bound_formula(cls, spec.operation)
            value = f(spec.m, spec.n)
        except ValueError:
            continue
        return {"class": cls, "formula": f.text, "formula_id": f.formula_id, "value": value,
                "conjectural": f.conjectural}
    return None


def cmd_check(args):
    import pytest

    root = Path(__file__).resolve().parents[2]
    target = root / "tests" / "test_acceptance.py"
    if not target.exists():
        raise UsageError(f"acceptance suite not found at {target}; run from a source checkout")
    return pytest.main([str(target), "-q", "-s"])


def cmd_formulas(args):
    rows = [{"class": f.cls, "operation": f.operation, "id": f.formula_id, "formula": f.text,
             "alphabet": f.alphabet, "conjectural": f.conjectural} for f in all_formulas()]
    print(json.dumps(rows, indent=2, ensure_ascii=False) if args.format == "json"
          else "\n".join(f"{r['class']:14} {r['operation']:21} {r['formula']}" for r in rows))
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", metavar="DIR", help="also write automata and reports here")
    common.add_argument("--workers", type=int, default=1, metavar="N")
    common.add_argument("--force-cap", type=int, default=None, metavar="K",
                        help="run a truncated search of at most K candidates")

    parser = argparse.ArgumentParser(prog="freelang", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="freeness flags and κ of a DFA file")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("op", parents=[common], help="apply an operation and report κ")
    p.add_argument("operation", choices=OPS)
    p.add_argument("left")
    p.add_argument("right", nargs="?")
    p.add_argument("--class", dest="cls", default=None,
                   help="bound class to compare against (default: inferred from operands)")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("witness", parents=[common], help="build and verify a witness family")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("-m", type=int)
    p.add_argument("-n", type=int)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("table", parents=[common], help="regenerate a bound table")
    p.add_argument("table", type=int, choices=(1, 2))
    p.add_argument("-m", type=int, default=5)
    p.add_argument("-n", type=int, default=6)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", parents=[common], help="exhaustive max-κ search")
    p.add_argument("--class", dest="cls", choices=FREE_CLASSES, default="factor")
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--op", dest="operation", choices=PAIR_OPS, default="union")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", parents=[common], help="run the acceptance suite")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("formulas", parents=[common], help="list every stored bound formula")
    p.set_defaults(func=cmd_formulas)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if os.environ.get("FREELANG_SEED"):
        import random
        random.seed(int(os.environ["FREELANG_SEED"]))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"freelang: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

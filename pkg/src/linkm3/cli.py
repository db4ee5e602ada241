"""Command-line front end: ``python -m linkm3 <command> ...``.

Commands
--------
compute
    Invariants of one or more links given as a family, a braid word or a
    diagram (inline JSON or a path).
paper-table
    The worked examples next to their printed values.
sweep-asymptotic
    ``M`` of cables of a base link against the ``(l1 l2 l3)**4`` scaling law.
oracle-check
    Brute-force skein oracle over the small-diagram corpus plus the closed forms.

Exit codes: 0 success, 2 unreadable input, 3 violated precondition,
4 a failed oracle check.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .diagram import BraidWord, LinkDiagram, braid_closure, lk_triple
from .errors import (
    BadBraid,
    BadFamily,
    BadFigure,
    DiagramError,
    NotGood,
    TooLarge,
    WrongComponentCount,
    ZeroLinking,
)
from .families import PRINTED_NORMALIZATION, PRINTED_VALUES, FamilySpec, paper_figure
from .invariants import FIELDS, cable_link, m_invariant, m_via_normalization, report

EXIT_PARSE, EXIT_PRECONDITION, EXIT_ORACLE = 2, 3, 4

DEFAULT_LAMBDAS = ((1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 2, 1), (3, 1, 1))
TABLE_FIGURES = (6, 7, 8, 9, 10, 11)


class ParseError(Exception):
    pass


class Precondition(Exception):
    pass


# ---------------------------------------------------------------------------
# Formatting


def fmt(v, csv_style: bool = False) -> str:
    """Exact text for a value; rationals print as ``-1/4`` (``num/den`` always in CSV)."""
    if v is None:
        return ""
    if isinstance(v, Fraction):
        if csv_style or v.denominator != 1:
            return f"{v.numerator}/{v.denominator}"
        return str(v.numerator)
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(fmt(x, csv_style) for x in v) + ")"
    return str(v)


def jsonable(v):
    if isinstance(v, Fraction):
        return {"num": v.numerator, "den": v.denominator}
    if isinstance(v, (tuple, list)):
        return [jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: jsonable(x) for k, x in v.items()}
    return v


def render(rows: list[dict], columns: Sequence[str], style: str) -> str:
    if style == "json":
        return "".join(json.dumps(jsonable(r), sort_keys=True) + "\n" for r in rows)
    if style == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([fmt(r.get(c), csv_style=True) for c in columns])
        return buf.getvalue()
    cells = [list(columns)] + [[fmt(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def mapper(jobs: int) -> tuple[Callable, Callable[[], None]]:
    """Order-preserving map over ``jobs`` worker processes, plus its shutdown."""
    if jobs <= 1:
        return map, lambda: None
    pool = ProcessPoolExecutor(max_workers=jobs)
    return pool.map, pool.shutdown


# ---------------------------------------------------------------------------
# Input


def _load_json(text: str, what: str):
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: not valid JSON ({exc.msg} at line {exc.lineno} column {exc.colno})")


def parse_params(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise ParseError(f"params: expected comma-separated integers, got {text!r}") from None


def parse_triples(text: str) -> list[tuple[int, int, int]]:
    out = []
    for chunk in text.split(";"):
        t = parse_params(chunk)
        if len(t) != 3:
            raise ParseError(f"lambdas: {chunk!r} is not a triple")
        if min(t) < 1:
            raise ParseError(f"lambdas: multiplicities must be positive, got {chunk!r}")
        out.append(t)
    return out


def diagram_from_obj(obj, kind: str = "auto") -> tuple[str, LinkDiagram]:
    """Build ``(label, diagram)`` from family, braid or diagram JSON."""
    if not isinstance(obj, dict):
        raise ParseError(f"input: expected a JSON object, got {type(obj).__name__}")
    if kind == "auto":
        if "family" in obj:
            kind = "family"
        elif "strands" in obj or "word" in obj:
            kind = "braid"
        elif "crossings" in obj:
            kind = "diagram"
        else:
            raise ParseError("input: object has none of the fields 'family', 'strands', 'crossings'")
    try:
        if kind == "family":
            spec = FamilySpec.from_json(obj)
            return f"{spec.name}({','.join(map(str, spec.params))})", spec.build()
        if kind == "braid":
            b = BraidWord.from_json(obj)
            return f"braid{list(b.letters)}", braid_closure(b)
        d = LinkDiagram.from_json(obj)
        return f"diagram[{len(d)}]", d
    except (BadFamily, BadFigure, BadBraid, DiagramError) as exc:
        raise ParseError(f"{kind}: {exc}") from None
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{kind}: malformed field value ({exc})") from None


def collect_inputs(args) -> list[tuple[str, LinkDiagram]]:
    items: list[tuple[str, LinkDiagram]] = []
    if args.family:
        items.append(diagram_from_obj(
            {"family": args.family, "params": list(parse_params(args.params or ""))}, "family"))
    elif args.params:
        raise ParseError("params: given without --family")
    for text in args.braid or ():
        items.append(diagram_from_obj(_load_json(text, "braid"), "braid"))
    for text in args.diagram or ():
        items.append(diagram_from_obj(_load_json(text, "diagram"), "diagram"))
    for text in args.inputs:
        obj = _load_json(text, "input")
        for o in obj if isinstance(obj, list) else [obj]:
            items.append(diagram_from_obj(o))
    if not items:
        raise ParseError("input: give --family, --braid, --diagram or an input path")
    return items


# ---------------------------------------------------------------------------
# compute

TWO_COMPONENT = ("lk", "c1_components", "c1_link", "beta")
ONE_COMPONENT = ("c1_link",)
ALL_FIELDS = FIELDS + ("beta",)


def parse_fields(text: str | None) -> tuple[str, ...] | None:
    if not text:
        return None
    fields = tuple(f.strip() for f in text.split(",") if f.strip())
    unknown = [f for f in fields if f not in ALL_FIELDS]
    if unknown:
        raise ParseError(f"invariants: unknown name(s) {unknown}; choose from {list(ALL_FIELDS)}")
    return fields


def applicable_fields(m: int) -> tuple[str, ...]:
    if m == 1:
        return ONE_COMPONENT
    if m == 2:
        return TWO_COMPONENT
    if m == 3:
        return FIELDS
    return ("lk",)


def compute_row(item: tuple[str, LinkDiagram, tuple[str, ...] | None]) -> dict:
    label, d, fields = item
    m = d.component_count
    allowed = applicable_fields(m)
    if fields is None:
        fields = allowed
    bad = [f for f in fields if f not in allowed]
    if bad:
        raise Precondition(f"{', '.join(bad)} not defined for a {m}-component link")
    rep = report(d, fields)
    row = {"input": label, "components": m, "crossings": len(d)}
    for f in fields:
        if f == "lk":
            row["lk"] = lk_triple(d) if m == 3 else rep.lk
        else:
            row[f] = getattr(rep, f)
    return row


def cmd_compute(args, out) -> int:
    fields = parse_fields(args.invariants)
    items = [(label, d, fields) for label, d in collect_inputs(args)]
    run, close = mapper(min(args.jobs, len(items)))
    try:
        rows = list(run(compute_row, items))
    finally:
        close()
    columns = ["input", "components", "crossings"]
    for r in rows:
        columns += [k for k in r if k not in columns]
    if args.format == "json":
        for r, (_, d, _) in zip(rows, items):
            r["diagram"] = d.to_json()
    out.write(render(rows, columns, args.format))
    return 0


# ---------------------------------------------------------------------------
# paper-table

TABLE_COLUMNS = ("lk", "gamma", "betas", "m_tilde", "p1", "r", "m_av", "m")


def compare_printed(row: dict, printed: dict) -> tuple[str, list[str]]:
    """``match``, ``sign_flagged`` (every difference is a negation, ``|M|`` agrees) or ``mismatch``."""
    diffs = [k for k, v in printed.items() if row.get(k) != v]
    if not diffs:
        return "match", []

    def negated(a, b):
        if isinstance(a, tuple):
            return all(x == -y for x, y in zip(a, b))
        return a == -b

    if all(negated(row.get(k), printed[k]) for k in diffs):
        return "sign_flagged", diffs
    return "mismatch", diffs


def figure_row(n: int) -> dict:
    d = paper_figure(n)
    rep = report(d)
    row = {"figure": n, "lk": lk_triple(d)}
    for f in TABLE_COLUMNS[1:]:
        row[f] = getattr(rep, f)
    status, diffs = compare_printed(row, PRINTED_VALUES[n])
    row["status"] = status
    row["differs"] = ",".join(diffs)
    row["printed"] = {k: fmt(v) for k, v in PRINTED_VALUES[n].items()}
    return row


def normalization_row(n: int) -> dict:
    m, mav_norm = m_via_normalization(paper_figure(n))
    printed = PRINTED_NORMALIZATION[n]
    row = {"figure": f"{n}/norm", "m_av": mav_norm, "m": m}
    got = {"m_av_norm": mav_norm, "m": m}
    diffs = [k for k, v in printed.items() if got[k] != v]
    row["status"] = "match" if not diffs else "mismatch"
    row["differs"] = ",".join(diffs)
    row["printed"] = {k: fmt(v) for k, v in printed.items()}
    return row


def cmd_paper_table(args, out) -> int:
    run, close = mapper(args.jobs)
    try:
        rows = list(run(figure_row, TABLE_FIGURES))
        if args.normalization:
            rows += list(run(normalization_row, tuple(PRINTED_NORMALIZATION)))
    finally:
        close()
    columns = ["figure", *TABLE_COLUMNS, "status", "differs"]
    if args.format != "table":
        columns.append("printed")
    out.write(render(rows, columns, args.format))
    return 0


# ---------------------------------------------------------------------------
# sweep-asymptotic


def sweep_row(item) -> dict:
    base, base_m, lam = item
    m = m_invariant(cable_link(base, lam))
    scale = (lam[0] * lam[1] * lam[2]) ** 4
    predicted = scale * base_m
    ratio = m / base_m if base_m else None
    return {"lambda": lam, "m": m, "predicted": predicted, "ratio": ratio,
            "scale": scale, "status": "pass" if m == predicted else "fail"}


def cmd_sweep(args, out) -> int:
    if args.family:
        _, base = diagram_from_obj(
            {"family": args.family, "params": list(parse_params(args.params or ""))}, "family")
    else:
        base = paper_figure(6)
    if base.component_count != 3:
        raise Precondition(f"the base link has {base.component_count} components, not 3")
    lambdas = parse_triples(args.lambdas) if args.lambdas else list(DEFAULT_LAMBDAS)
    base_m = m_invariant(base)
    run, close = mapper(min(args.jobs, len(lambdas)))
    try:
        rows = list(run(sweep_row, [(base, base_m, lam) for lam in lambdas]))
    finally:
        close()
    out.write(render(rows, ["lambda", "m", "predicted", "scale", "ratio", "status"], args.format))
    return 0


# ---------------------------------------------------------------------------
# oracle-check


def cmd_oracle(args, out) -> int:
    from . import oracle

    seeds = range(args.seed, args.seed + args.seeds)
    run, close = mapper(args.jobs)
    try:
        records = oracle.corpus_check(args.max_crossings, seeds, map_fn=run)
    finally:
        close()
    if not args.skip_closed_forms:
        records += oracle.closed_form_suite()
    if args.format == "json":
        out.write(oracle.to_jsonl(records))
    else:
        rows = [{"identity": r["identity"], "case": r.get("case", ""), "status": r["status"],
                 "detail": _detail(r)} for r in records]
        out.write(render(rows, ["identity", "case", "status", "detail"], args.format))
    return EXIT_ORACLE if any(r["status"] == "fail" for r in records) else 0


def _detail(rec: dict) -> str:
    if "mismatches" in rec:
        return f"{rec['cases'] - len(rec['mismatches'])}/{rec['cases']} agree"
    if rec.get("failed_crossings"):
        return f"crossings {rec['failed_crossings']}"
    return rec.get("conway", "")


# ---------------------------------------------------------------------------
# Entry point


def build_parser() -> argparse.ArgumentParser:
    jobs_default = os.cpu_count() or 1
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--jobs", type=int, default=jobs_default,
                        help="worker processes (default: all cores)")
    common.add_argument("--seed", type=int, default=0, help="first random seed where one is used")

    p = argparse.ArgumentParser(prog="linkm3", description="Conway-coefficient invariants of links.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="invariants of given links")
    c.add_argument("inputs", nargs="*", help="path or inline JSON: family, braid or diagram (or a list)")
    c.add_argument("--family", help="family name, e.g. hopf3, l0, figure")
    c.add_argument("--params", help="comma-separated integer parameters")
    c.add_argument("--braid", action="append", help='braid JSON, e.g. {"strands":2,"word":[1,1]}')
    c.add_argument("--diagram", action="append", help="diagram JSON or a path to one")
    c.add_argument("--invariants", help=f"comma-separated subset of {','.join(ALL_FIELDS)}")
    c.set_defaults(run=cmd_compute)

    t = sub.add_parser("paper-table", parents=[common],
                       help="worked examples against their printed values")
    t.add_argument("--normalization", action="store_true",
                   help="also evaluate figure 9 through its secondary normalization (slow)")
    t.set_defaults(run=cmd_paper_table)

    s = sub.add_parser("sweep-asymptotic", parents=[common], help="check the cable scaling law")
    s.add_argument("--family", help="base family (default: the positive fiber link)")
    s.add_argument("--params")
    s.add_argument("--lambdas", help='semicolon-separated triples, e.g. "2,1,1;2,2,1"')
    s.set_defaults(run=cmd_sweep)

    o = sub.add_parser("oracle-check", parents=[common], help="brute-force oracle and closed forms")
    o.add_argument("--max-crossings", type=int, default=12)
    o.add_argument("--seeds", type=int, default=5, help="number of random crossing orders")
    o.add_argument("--skip-closed-forms", action="store_true")
    o.set_defaults(run=cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        args.jobs = 1
    try:
        return args.run(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Precondition, WrongComponentCount, ZeroLinking, NotGood, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION

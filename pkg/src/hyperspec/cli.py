"""Command-line front end.

Exit codes: 0 all MUST-PASS checks green, 1 a MUST-PASS failure, 2 input
error. Output is JSON-first (deterministic: byte-identical for identical
inputs); --plain switches to a text rendering.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import galoisline, specops as ops
from .gfarith import is_prime
from .hyperkernel import (
    HyperRingTable,
    HyperTable,
    check_hypergroup,
    check_hyperring,
    krasner_hyperfield,
    sign_hyperfield,
)
from .suite import DEFAULT_SUITE, load_algebra, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _emit(doc: dict, plain: str | None, as_plain: bool) -> None:
    if as_plain and plain is not None:
        print(plain)
    else:
        print(json.dumps(doc, indent=2))


def cmd_laws(args) -> int:
    spec = args.table
    try:
        if spec == "builtin:K":
            table, kind = krasner_hyperfield(), "hyperring"
        elif spec == "builtin:S":
            table, kind = sign_hyperfield(), "hyperring"
        else:
            doc = json.loads(Path(spec).read_text())
            if "mul" in doc:
                table, kind = HyperRingTable.from_json(doc), "hyperring"
            else:
                table, kind = HyperTable.from_json(doc), "hypergroup"
    except Exception as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if kind == "hyperring":
        report = check_hyperring(table)
    else:
        report = check_hypergroup(table, args.mode)
    doc = {"input": spec, "kind": kind, "ok": report.ok, "report": report.to_json()}
    lines = [f"{spec}: {'PASS' if report.ok else 'FAIL'}"]
    for name, c in report.checks.items():
        mark = "ok" if c.passed else "FAIL"
        lines.append(f"  {name:<34} {mark}" + (f"  witness={list(c.witness)}" if c.witness else ""))
    _emit(doc, "\n".join(lines), args.plain)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_hyperop(args) -> int:
    try:
        h = load_algebra(args.algebra)
        h.ensure_verified()
        pts = ops.kpoints(h)
        if args.pair:
            f = ops.point_by_label(h, args.pair[0])
            g = ops.point_by_label(h, args.pair[1])
    except Exception as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.pair:
        res = ops.hyperop(h, f, g)
        doc = res.to_json()
        plain = f"{f.label} * {g.label} = {res.labels()}"
        _emit(doc, plain, args.plain)
        return EXIT_OK
    table = []
    for f in pts:
        row = []
        for g in pts:
            row.append(ops.hyperop(h, f, g).labels())
        table.append(row)
    doc = {
        "algebra": h.name or args.algebra,
        "points": [kp.label for kp in pts],
        "table": table,
    }
    width = max(len(kp.label) for kp in pts) + 2
    lines = [f"hyperoperation table for {doc['algebra']} (rows * columns)"]
    for kp, row in zip(pts, table):
        cells = "  ".join(",".join(cell) if len(cell) > 1 else cell[0] for cell in row)
        lines.append(f"{kp.label:<{width}} | {cells}")
    _emit(doc, "\n".join(lines), args.plain)
    return EXIT_OK


def cmd_verify(args) -> int:
    specs = list(DEFAULT_SUITE)
    checks = None
    out_path = None
    verbosity = 0
    try:
        if args.suite:
            cfg = json.loads(Path(args.suite).read_text())
            specs = cfg.get("algebras", specs)
            checks = cfg.get("checks")
            out_path = cfg.get("output")
            verbosity = int(cfg.get("verbosity", 0))
        result = run_suite(specs, checks, timings=args.timings)
    except Exception as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = json.dumps(result, indent=2)
    if out_path:
        Path(out_path).write_text(text + "\n")
    if verbosity >= 1:
        for rep in result["suite"]:
            print(f"{rep['algebra']}: {'PASS' if rep['ok'] else 'FAIL'}", file=sys.stderr)
    if args.plain:
        for rep in result["suite"]:
            print(f"{rep['algebra']}: {'PASS' if rep['ok'] else 'FAIL'}")
            for name, entry in rep["checks"].items():
                print(f"  {name:<24} {entry['status']}")
    else:
        print(text)
    return EXIT_OK if result["ok"] else EXIT_FAIL


def cmd_line(args) -> int:
    if not is_prime(args.p) or args.p < 3:
        print(f"input error: p must be an odd prime, got {args.p}", file=sys.stderr)
        return EXIT_INPUT
    if args.max_degree < 1:
        print("input error: max-degree must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    law = galoisline.ADDITIVE if args.law == "add" else galoisline.MULTIPLICATIVE
    report = galoisline.crosscheck(args.p, law, args.max_degree)
    doc = report.to_json()
    lines = [
        f"p={args.p} law={law} max_degree={args.max_degree}: "
        f"{'AGREE' if report.ok else 'DISAGREE'} on {len(report.pairs)} pairs",
        f"  identity={report.identity_ok} antipode={report.antipode_ok} "
        f"reversibility={report.reversibility_ok} commutativity={report.commutativity_ok}",
        f"  associativity: checked={report.associativity_checked} skipped={report.associativity_skipped} "
        f"pass={report.associativity_ok}",
    ]
    _emit(doc, "\n".join(lines), args.plain)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperspec",
        description="Exact hyperstructure checks for spectra of Hopf algebras over odd prime fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_laws = sub.add_parser("laws", help="check hypergroup/hyperring axioms of a table")
    p_laws.add_argument("table", help="JSON file, builtin:K, or builtin:S")
    p_laws.add_argument("--mode", choices=["strong", "marty", "canonical"], default="canonical")
    p_laws.add_argument("--plain", action="store_true", help="text output instead of JSON")
    p_laws.set_defaults(func=cmd_laws)

    p_hop = sub.add_parser("hyperop", help="hyperoperation table of an algebra's spectrum")
    p_hop.add_argument("algebra", help="builtin spec like mu:5:4 / addetale:3:2, or a JSON file")
    p_hop.add_argument("--pair", nargs=2, metavar=("F", "G"), help="two point labels, e.g. '(T^2+1)' '(T^2+1)'")
    p_hop.add_argument("--json", action="store_true", help="JSON output (the default)")
    p_hop.add_argument("--plain", action="store_true", help="text output instead of JSON")
    p_hop.set_defaults(func=cmd_hyperop)

    p_ver = sub.add_parser("verify", help="run the per-statement traceability suite")
    p_ver.add_argument("--suite", help="JSON config with algebras/checks/output")
    p_ver.add_argument("--timings", action="store_true", help="include runtimes (breaks byte-determinism)")
    p_ver.add_argument("--plain", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_line = sub.add_parser("line", help="cross-check the two line/torus engines")
    p_line.add_argument("--p", type=int, required=True)
    p_line.add_argument("--law", choices=["add", "mul"], required=True)
    p_line.add_argument("--max-degree", type=int, required=True)
    p_line.add_argument("--plain", action="store_true")
    p_line.set_defaults(func=cmd_line)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

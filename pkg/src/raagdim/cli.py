"""Command-line frontend.

Commands: analyze, generate, verify, lemma-suite, homology, octahedralize.
All file I/O is UTF-8 JSON with versioned schemas.  Exit codes: 0 success,
1 bad input or failed verification, 2 undetermined quantities under
--strict.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io_json
from .bounds import analyze
from .complexes import is_flag
from .homology import mod2_betti, rational_betti
from .octa import octahedralize
from .suite import run_suite
from .verify import verify_certificate
from .zoo import build_named


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise io_json.MalformedInput(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise io_json.MalformedInput(f"invalid JSON at line {exc.lineno}, column {exc.colno}", path)


def _write(path: str | None, payload: dict) -> None:
    text = io_json.dumps(payload)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _span(label: str, span) -> str:
    if span is None:
        return f"{label}: not applicable"
    lo, hi = span
    if lo == hi:
        return f"{label} = {lo}"
    return f"{label} in [{lo}, {hi}] (undetermined)"


def _analyze_one(path: str, args) -> int:
    data = _load_json(path)
    L = io_json.complex_from_json(data)
    if L.dim < 0:
        print("error: empty complex", file=sys.stderr)
        return 1
    w = is_flag(L)
    if not w.flag and not args.allow_non_flag:
        print(f"error: complex is not flag (missing clique {w.missing_clique}); "
              "rerun with --allow-non-flag for octahedralization bounds only", file=sys.stderr)
        return 1
    report = analyze(
        L,
        allow_non_flag=args.allow_non_flag,
        search_budget=args.search_budget,
        integral=args.integral,
        max_cells=args.max_cells,
    )
    print(f"complex: {report.vertices} vertices, dimension {report.dim}, "
          f"{'flag' if report.flag else 'NOT flag'}")
    print(f"gd = {report.gd}")
    print(f"l2dim = {report.l2dim if report.l2dim is not None else 'undefined (all reduced Betti numbers vanish)'}")
    print(_span("vkdim(OL)", report.vkdim))
    print(_span("embdim(OL)", report.embdim))
    print(_span("actdim(A_L)", report.actdim))
    if report.conjecture_status:
        print(f"dimension conjecture: {report.conjecture_status}")
    for warning in report.warnings:
        print(f"warning: {warning}")
    if args.out:
        _write(args.out, io_json.report_to_json(report))
    if args.certificate and report.certificate is not None:
        _write(args.certificate, io_json.certificate_to_json(report.certificate))
    elif args.certificate:
        print("note: no nonvanishing certificate to write", file=sys.stderr)
    if args.strict and not report.determined:
        return 2
    return 0


def cmd_analyze(args) -> int:
    # Batch mode: inputs are independent; the exit code is the worst one.
    if len(args.inputs) > 1 and (args.out or args.certificate):
        print("error: --out and --certificate need a single input", file=sys.stderr)
        return 1
    worst = 0
    for i, path in enumerate(args.inputs):
        if i:
            print()
        if len(args.inputs) > 1:
            print(f"== {path}")
        try:
            code = _analyze_one(path, args)
        except io_json.MalformedInput as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = 1
        worst = max(worst, code)
    return worst


def cmd_generate(args) -> int:
    params = list(args.params)
    # Seeded generators take the seed as their final parameter.
    if args.name == "tree" and len(params) == 1:
        params.append(str(args.seed))
    if args.name == "random_flag" and len(params) == 2:
        params.append(str(args.seed))
    expr = args.name if not params else f"{args.name}({','.join(params)})"
    if "(" in args.name:
        expr = args.name
    try:
        K = build_named(expr)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write(args.out, io_json.complex_to_json(K))
    return 0


def cmd_verify(args) -> int:
    cert = io_json.certificate_from_json(_load_json(args.certificate))
    L = io_json.complex_from_json(_load_json(args.complex))
    outcome = verify_certificate(L, cert)
    for check in outcome.checks_run[:-1]:
        print(f"PASS {check}")
    last = outcome.checks_run[-1]
    if outcome.ok:
        print(f"PASS {last}")
        print("certificate verified")
        return 0
    print(f"FAIL {last}: {outcome.detail}")
    return 1


def cmd_lemma_suite(args) -> int:
    result = run_suite(args.seed, args.count, inject=args.inject)
    print(f"complexes: {result.complexes}  checks: {result.checks}  "
          f"failures: {len(result.failures)}")
    if result.failures:
        for f in result.failures:
            print(f"FAIL {f.check}: {f.detail}")
            print(f"  minimized complex (maximal faces): {list(f.complex_maximal)}")
        return 1
    if result.complexes < args.count:
        print(f"warning: only {result.complexes} of {args.count} samples generated", file=sys.stderr)
    print("all identities hold")
    return 0


def cmd_homology(args) -> int:
    L = io_json.complex_from_json(_load_json(args.input))
    betti2 = mod2_betti(L)
    bettiq = rational_betti(L)
    print(f"reduced mod-2 Betti numbers: {list(betti2)}")
    print(f"reduced rational Betti numbers: {list(bettiq)}")
    if args.out:
        _write(args.out, {
            "schema": "homology/1",
            "mod2_reduced_betti": list(betti2),
            "rational_reduced_betti": list(bettiq),
        })
    return 0


def cmd_octahedralize(args) -> int:
    L = io_json.complex_from_json(_load_json(args.input))
    octa = octahedralize(L)
    _write(args.out, io_json.complex_to_json(octa.complex))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="raagdim",
                                     description="dimension bounds for right-angled Artin groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full dimension report for one or more complexes")
    p.add_argument("inputs", nargs="+", metavar="input")
    p.add_argument("--out", help="write the report JSON here (single input only)")
    p.add_argument("--certificate", help="write the nonvanishing certificate JSON here")
    p.add_argument("--strict", action="store_true",
                   help="exit 2 when any quantity is undetermined")
    p.add_argument("--allow-non-flag", action="store_true")
    p.add_argument("--integral", action="store_true",
                   help="also run the integer coboundary solve")
    p.add_argument("--max-cells", type=int, default=10**6)
    p.add_argument("--search-budget", type=int, default=2,
                   help="max number of cycle basis elements to sum in the search")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("generate", help="emit a zoo complex as JSON")
    p.add_argument("name", help="generator, e.g. cycle or join(points(2),points(2))")
    p.add_argument("params", nargs="*", help="positional parameters, e.g. 4")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("verify", help="re-check a stored certificate from scratch")
    p.add_argument("certificate")
    p.add_argument("complex")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("lemma-suite", help="randomized identity checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--inject", choices=["transfer-drop", "mesh-flip"],
                   help="deliberately break one ingredient (self-test)")
    p.set_defaults(fn=cmd_lemma_suite)

    p = sub.add_parser("homology", help="reduced Betti numbers")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("octahedralize", help="emit the doubled complex as JSON")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_octahedralize)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except io_json.MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

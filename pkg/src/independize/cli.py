"""Command-line entry point.

Exit codes: 0 success, 2 parse error, 3 resource limit, 4 certification or
check failure, 5 size error with the fallback disabled.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time

from . import __version__
from .errors import (
    CertificationError,
    HypothesisViolationError,
    IndependizeError,
    NotEntailedError,
    ParseError,
    ResourceLimitError,
    SizeError,
)
from .formula import Theory, to_text
from .genfuzz import GenConfig, gen_theory, shrink
from .interpolation import interpolate
from .oracle import DEFAULT_MAX_VARS, Oracle
from .parser import parse, parse_theory
from .partition import build_partition, build_transformed
from .pipelines import CertifiedResult, certify, independize
from .starify import DEFAULT_STARIFY_CAP, check_star, starify

EXIT_OK, EXIT_PARSE, EXIT_RESOURCE, EXIT_CERT, EXIT_SIZE = 0, 2, 3, 4, 5


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def read_theory(path: str) -> Theory:
    with open(path, encoding="utf-8") as fh:
        return parse_theory(fh.read(), source=path)


def run_report(result: CertifiedResult, input_path: str, inputs, options: dict, elapsed: float | None = None) -> dict:
    forward, backward = result.equivalence
    out = result.output
    report = {
        "version": __version__,
        "mode": result.mode,
        "input_path": input_path,
        "options": options,
        "output": [to_text(f) for f in out],
        "fallback_used": result.fallback_used,
        "certificates": {
            "equivalence": {
                "input_entails_output": [
                    {"formula": to_text(f), **c.to_json()} for f, c in zip(out, forward)
                ],
                "output_entails_input": [
                    {"formula": to_text(f), **c.to_json()}
                    for f, c in zip(inputs, backward)
                ],
            },
            "independence": [
                {"formula": to_text(f), "witness": dict(sorted(w.items()))}
                for f, w in zip(out, result.independence)
            ],
        },
        "stats": dict(result.stats),
    }
    if elapsed is not None:
        report["stats"]["elapsed_seconds"] = round(elapsed, 6)
    return report


def _emit(text: str, path: str | None) -> None:
    if path:
        write_atomic(path, text)
    else:
        sys.stdout.write(text)


def cmd_independize(args) -> int:
    theory = read_theory(args.input)
    oracle = Oracle(max_vars=args.max_vars)
    start = time.perf_counter()
    result = independize(
        theory,
        args.mode,
        collapse=args.collapse,
        fallback=not args.no_fallback,
        paranoid=args.paranoid,
        oracle=oracle,
        starify_cap=args.starify_cap,
    )
    elapsed = time.perf_counter() - start
    text = result.output.to_text()
    if not args.certify:
        _emit(text, args.output)
        return EXIT_OK
    options = {
        "mode": args.mode,
        "collapse": args.collapse,
        "fallback": not args.no_fallback,
        "paranoid": args.paranoid,
        "max_vars": args.max_vars,
        "starify_cap": args.starify_cap,
    }
    report = dump_json(run_report(result, args.input, theory, options, elapsed if args.timing else None))
    report_path = args.report or (args.output + ".report.json" if args.output else None)
    if args.output:
        write_atomic(args.output, text)
    _emit(report, report_path)
    return EXIT_OK


def cmd_verify(args) -> int:
    source, output = read_theory(args.input), read_theory(args.candidate)
    oracle = Oracle(max_vars=args.max_vars)
    try:
        result = certify(source, output, oracle)
    except CertificationError as exc:
        failure = {
            "certified": False,
            "direction": exc.direction,
            "formula": to_text(exc.formula),
            "countermodel": dict(sorted(exc.countermodel.items())) if exc.countermodel else None,
        }
        sys.stdout.write(dump_json(failure))
        return EXIT_CERT
    result.mode = "verify"
    result.stats = {"oracle_calls": oracle.calls}
    report = run_report(result, args.input, source, {})
    report["certified"] = True
    _emit(dump_json(report), args.report)
    return EXIT_OK


def cmd_interpolate(args) -> int:
    left, right = parse(args.left, "<left>"), parse(args.right, "<right>")
    try:
        result = interpolate(left, right, args.mode, Oracle(max_vars=args.max_vars))
    except NotEntailedError as exc:
        sys.stderr.write(f"error: {exc}; countermodel {json.dumps(dict(sorted(exc.countermodel.items())))}\n")
        return EXIT_CERT
    sys.stdout.write(to_text(result.tau) + "\n")
    return EXIT_OK


def cmd_starify(args) -> int:
    theory = read_theory(args.input)
    _emit(starify(theory, args.starify_cap).to_text(), args.output)
    return EXIT_OK


def cmd_star_check(args) -> int:
    theory = read_theory(args.input)
    violation = check_star(theory, oracle=Oracle(max_vars=args.max_vars))
    if violation is None:
        sys.stdout.write(dump_json({"star": "ok"}))
        return EXIT_OK
    sys.stdout.write(dump_json({
        "star": "violation",
        "formula": to_text(violation.formula),
        "position": violation.index,
        "premises": [to_text(f) for f in violation.premises],
        "premise_positions": list(violation.premise_indices),
    }))
    return EXIT_CERT


def cmd_partition(args) -> int:
    theory = read_theory(args.input)
    state = build_partition(theory)
    sets = build_transformed(state)
    data = state.to_json()
    data["C"] = [{"alpha": a, "formula": to_text(f)} for a, f in sets.C]
    data["D"] = [{"alpha": a, "source": to_text(s), "formula": to_text(f)} for a, s, f in sets.D]
    _emit(dump_json(data), args.output)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    chunks = []
    status = EXIT_OK
    for k in range(args.count):
        cfg = GenConfig(args.seed + k, args.max_symbols, args.max_formulas, args.max_depth)
        theory = gen_theory(cfg)
        chunks.append(f"# seed {cfg.seed}\n" + theory.to_text())
        if not args.check:
            continue
        for mode in ("tarski", "reznikoff"):
            def fails(t, mode=mode):
                try:
                    independize(t, mode, oracle=Oracle(max_vars=args.max_vars))
                except CertificationError:
                    return True
                return False

            if fails(theory):
                status = EXIT_CERT
                small = shrink(theory, fails)
                chunks.append(f"# FAILURE seed {cfg.seed} mode {mode}; shrunk:\n" + small.to_text())
    _emit("\n".join(chunks), args.output)
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS,
                        help="symbol limit for a single oracle query (default: %(default)s)")
    common.add_argument("--starify-cap", type=int, default=DEFAULT_STARIFY_CAP,
                        help="symbol limit for layering (default: %(default)s)")

    parser = argparse.ArgumentParser(prog="independize", description="Independent axiomatizations of propositional theories.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("independize", parents=[common], help="rewrite a theory as an equivalent independent one")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--mode", choices=("tarski", "reznikoff"), default="reznikoff")
    p.add_argument("--collapse", action="store_true", help="tarski mode: emit one conjunction")
    p.add_argument("--no-fallback", action="store_true")
    p.add_argument("--paranoid", action="store_true", help="check the merge hypothesis before merging")
    p.add_argument("--certify", action="store_true", help="write the JSON run report")
    p.add_argument("--report", help="report path (default: OUTPUT.report.json, or stdout)")
    p.add_argument("--timing", action="store_true", help="include elapsed time in the report")
    p.add_argument("--seed", type=int, default=0, help="accepted for reproducibility; the pipelines are deterministic")
    p.set_defaults(func=cmd_independize)

    p = sub.add_parser("verify", parents=[common], help="certify CANDIDATE as an independent equivalent of INPUT")
    p.add_argument("input")
    p.add_argument("candidate")
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("interpolate", parents=[common], help="interpolant between two formulas")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--mode", choices=("strongest", "weakest"), default="strongest")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("starify", parents=[common], help="equivalent theory with the star property")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_starify)

    p = sub.add_parser("star-check", parents=[common], help="check the star property")
    p.add_argument("input")
    p.set_defaults(func=cmd_star_check)

    p = sub.add_parser("partition", parents=[common], help="dump anchors, blocks and transformed sets")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("fuzz", parents=[common], help="generate random theories, optionally checking both pipelines")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-symbols", type=int, default=4)
    p.add_argument("--max-formulas", type=int, default=6)
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--check", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (CertificationError, HypothesisViolationError) as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    except SizeError as exc:
        print(f"size error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except IndependizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Three subcommands: `run` evaluates a script file, `repro` replays a
built-in scenario, and `check-suite` exercises the randomized property
suites.  Exit codes: 0 success, 1 failed check or property, 2 usage or
parse error, 3 evaluation error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import IcalcError, ScriptError
from .scenarios import SCENARIOS, run_scenario
from .script import RunOptions, parse_script, run_script

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_EVALUATION = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icalc",
        description="exact ideal calculus and closure diagnostics over prime fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="evaluate a script file")
    run.add_argument("file", help="script file to evaluate")
    run.add_argument(
        "--json",
        nargs="?",
        const="-",
        default=None,
        metavar="OUT",
        help="emit the JSON report (to OUT, or stdout when no path is given)",
    )
    run.add_argument("--order", choices=("lex", "grevlex"), default="grevlex")
    run.add_argument("--emax", type=int, default=5)
    run.add_argument("--seed", type=int, default=0)

    repro = sub.add_parser("repro", help="replay a built-in scenario")
    repro.add_argument("name", help="scenario name: " + ", ".join(sorted(SCENARIOS)))
    repro.add_argument(
        "--json",
        nargs="?",
        const="-",
        default=None,
        metavar="OUT",
        help="emit the JSON report (to OUT, or stdout when no path is given)",
    )

    sub.add_parser("check-suite", help="run every randomized property suite")
    return parser


def _emit(doc, json_target) -> int:
    if json_target == "-":
        sys.stdout.write(doc.to_json())
    elif json_target is not None:
        with open(json_target, "w", encoding="utf-8") as handle:
            handle.write(doc.to_json())
        sys.stdout.write(doc.to_text())
    else:
        sys.stdout.write(doc.to_text())
    return EXIT_OK if doc.all_checks_pass else EXIT_CHECK_FAILED


def _cmd_run(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as handle:
            source = handle.read()
    except OSError as exc:
        print(f"icalc: cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        script = parse_script(source)
    except ScriptError as exc:
        print(f"icalc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    options = RunOptions(order=args.order, emax=args.emax, seed=args.seed)
    try:
        doc = run_script(script, options, scenario=args.file)
    except IcalcError as exc:
        print(f"icalc: {exc}", file=sys.stderr)
        return EXIT_EVALUATION
    return _emit(doc, args.json)


def _cmd_repro(args) -> int:
    if args.name not in SCENARIOS:
        known = ", ".join(sorted(SCENARIOS))
        print(f"icalc: unknown scenario {args.name!r}; available: {known}", file=sys.stderr)
        return EXIT_USAGE
    try:
        doc = run_scenario(args.name)
    except IcalcError as exc:
        print(f"icalc: {exc}", file=sys.stderr)
        return EXIT_EVALUATION
    return _emit(doc, args.json)


def _cmd_check_suite() -> int:
    from .properties import ALL_SUITES

    failed = 0
    for suite in ALL_SUITES:
        result = suite()
        status = "ok" if not result.failures else f"{len(result.failures)} FAILED"
        print(f"{result.name}: {result.cases} cases, {status}")
        for message in result.failures[:5]:
            print(f"  {message}")
        failed += len(result.failures)
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "repro":
        return _cmd_repro(args)
    return _cmd_check_suite()


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

JSON goes to stdout (and to ``--out`` when given); a short human summary
goes to stderr.  Exit codes: 0 all checks pass, 1 some check failed,
2 malformed input, 3 size guard.

Report JSON (schema version 1)::

    {"schema": 1, "command": "...", "results": [VerificationReport, ...]}

``multiplier`` and ``build`` emit a single object instead of a result list.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .catalog import SpecError, load_spec
from .groups import GroupError, SizeGuardError

REPORT_SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_SPEC, EXIT_SIZE = 0, 1, 2, 3


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schurlab", description="Schur multipliers of finite groups and central products.")
    ap.add_argument("--modulus", type=_positive, default=None, help="coefficient modulus (default |G|)")
    ap.add_argument("--slow", action="store_true", help="enable the slow tier (orders above 100)")
    ap.add_argument("--jobs", type=_positive, default=1, help="worker processes for verify")
    ap.add_argument("--out", default=None, help="also write the JSON report here")
    sub = ap.add_subparsers(dest="command", required=True)
    b = sub.add_parser("build", help="build a group from a spec and print its fingerprint")
    b.add_argument("spec")
    m = sub.add_parser("multiplier", help="invariants of M(G) for a group spec")
    m.add_argument("spec")
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=["paper", "oracle", "all"], default="paper")
    r = sub.add_parser("report", help="summarize saved report files")
    r.add_argument("paths", nargs="+")
    # accept global flags after the subcommand as well
    for p in (b, m, v, r):
        p.add_argument("--modulus", type=_positive, default=argparse.SUPPRESS)
        p.add_argument("--slow", action="store_true", default=argparse.SUPPRESS)
        p.add_argument("--jobs", type=_positive, default=argparse.SUPPRESS)
        p.add_argument("--out", default=argparse.SUPPRESS)
    return ap


def exit_code(verdicts: Sequence[str]) -> int:
    """0 unless some verdict is ``fail``."""
    return EXIT_FAIL if any(v == "fail" for v in verdicts) else EXIT_OK


def _emit(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, sort_keys=True)
    print(text)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def cmd_build(args) -> int:
    G = load_spec(args.spec)
    _emit({"schema": REPORT_SCHEMA, "command": "build", "name": G.name, **G.fingerprint()}, args.out)
    print(f"built {G.name or 'group'} of order {G.order}", file=sys.stderr)
    return EXIT_OK


def cmd_multiplier(args) -> int:
    from .cohomology import schur_multiplier

    t0 = time.perf_counter()
    G = load_spec(args.spec)
    M = schur_multiplier(G, args.modulus)
    ms = round((time.perf_counter() - t0) * 1000.0, 1)
    _emit({"schema": REPORT_SCHEMA, "command": "multiplier", "order": G.order,
           "multiplier": M.invariants, "ms": ms}, args.out)
    print(f"M({G.name or 'G'}) = {M}  [{ms:.0f} ms]", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .theorems import run_task, suite_tasks

    tasks = suite_tasks(args.suite, args.slow)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(run_task, tasks))
    else:
        chunks = [run_task(t) for t in tasks]
    results = [r for chunk in chunks for r in chunk]
    for r in results:
        print(r.summary(), file=sys.stderr)
    failed = [f"{r.claim}:{r.instance}" for r in results if r.verdict == "fail"]
    _emit({"schema": REPORT_SCHEMA, "command": f"verify {args.suite}", "results": [r.to_dict() for r in results],
           "failed": failed}, args.out)
    n_pass = sum(r.verdict == "pass" for r in results)
    n_skip = sum(r.verdict == "skipped" for r in results)
    print(f"{n_pass} passed, {len(failed)} failed, {n_skip} skipped", file=sys.stderr)
    if failed:
        print("failing: " + ", ".join(failed), file=sys.stderr)
    return exit_code([r.verdict for r in results])


def cmd_report(args) -> int:
    from .theorems import VerificationReport

    results = []
    for path in args.paths:
        try:
            with open(path) as fh:
                doc = json.load(fh)
            results += [VerificationReport.from_dict(d) for d in doc["results"]]
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
            raise SpecError(f"{path}: not a report file ({exc})") from exc
    for r in results:
        print(r.summary(), file=sys.stderr)
    failed = [f"{r.claim}:{r.instance}" for r in results if r.verdict == "fail"]
    _emit({"schema": REPORT_SCHEMA, "command": "report", "results": [r.to_dict() for r in results],
           "failed": failed}, args.out)
    return exit_code([r.verdict for r in results])


COMMANDS = {"build": cmd_build, "multiplier": cmd_multiplier, "verify": cmd_verify, "report": cmd_report}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (SpecError, GroupError, OSError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())

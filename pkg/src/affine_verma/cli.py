"""Command line front end: algebra dumps and machine-checkable verdicts.

Every subcommand prints one JSON document (sorted keys, rational numbers as
normalized "p/q" strings) so that repeated runs are byte-identical.  Exit
status is 0 when the requested checks pass, 1 when a mathematical check
fails, and 2 for usage errors.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import conformal
from . import embedding
from . import liealg
from . import singular
from . import triality
from . import verma
from . import weights
from . import zero_modes

CHECKS = ("singular", "embedding", "conformal", "admissible", "triality",
          "appendix", "all")


def to_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _oracle_section(kind, l):
    """Independent cross-check: enumerate and solve for the singular space."""
    module = verma.vacuum_module(kind, l)
    expected = singular.singular_vector(module)
    degree, weight = singular.expected_profile(module.alg)
    space = singular.solve_singular_space(module, degree, weight)
    contains = any(expected.multiple_of(s) is not None for s in space)
    return {
        "degree": degree,
        "dimension": len(space),
        "contains_vector": contains,
        "passed": len(space) == 1 and contains,
    }


def run_check(check, kind, l, mode_bound=None, strict=False):
    if check == "singular":
        rep = singular.report(kind, l)
        if strict:
            rep["oracle"] = _oracle_section(kind, l)
            rep["passed"] = rep["passed"] and rep["oracle"]["passed"]
        return rep
    if check == "embedding":
        return embedding.report(l)
    if check == "conformal":
        return conformal.report(l)
    if check == "admissible":
        return weights.report(l, kind or "D", mode_bound)
    if check == "triality":
        return triality.report(l)
    if check == "appendix":
        return zero_modes.report(l)
    raise ValueError("unknown check: %r" % (check,))


def _run_task(task):
    check, kind, l, mode_bound = task
    return run_check(check, kind, l, mode_bound)


def _all_tasks(l_values):
    tasks = []
    for l in l_values:
        tasks.append(("singular", "B", l, None))
        tasks.append(("singular", "D", l, None))
        tasks.append(("embedding", None, l, None))
        tasks.append(("conformal", None, l, None))
        tasks.append(("admissible", "D", l, None))
        tasks.append(("appendix", None, l, None))
        if l == 4:
            tasks.append(("triality", None, l, None))
    return tasks


def run_all(l_values, jobs):
    tasks = _all_tasks(l_values)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_task, tasks))
    else:
        reports = [_run_task(t) for t in tasks]
    summary = []
    for task, rep in zip(tasks, reports):
        summary.append({
            "check": task[0],
            "type": rep.get("type"),
            "l": task[2],
            "passed": rep["passed"],
        })
    return {
        "check": "all",
        "l_values": list(l_values),
        "reports": reports,
        "summary": summary,
        "passed": all(r["passed"] for r in reports),
    }


def _human_lines(report):
    lines = []
    if report["check"] == "all":
        rows = [("check", "type", "l", "result")]
        for s in report["summary"]:
            rows.append((s["check"], s["type"] or "-", str(s["l"]),
                         "pass" if s["passed"] else "FAIL"))
        widths = [max(len(r[c]) for r in rows) for c in range(4)]
        for r in rows:
            lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
        lines.append("overall: %s" % ("pass" if report["passed"] else "FAIL"))
        return lines
    for key in sorted(report):
        value = report[key]
        if isinstance(value, (list, dict)):
            value = json.dumps(value, sort_keys=True)
            if len(value) > 100:
                value = value[:97] + "..."
        lines.append("%s: %s" % (key, value))
    return lines


def _emit(report, args):
    text = to_json(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    elif args.human:
        sys.stdout.write("\n".join(_human_lines(report)) + "\n")
    else:
        sys.stdout.write(text)


def _parse_l_range(raw):
    lo, sep, hi = raw.partition("..")
    if not sep:
        lo = hi = raw
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("expected N..M, got %r" % (raw,))
    if lo > hi:
        raise argparse.ArgumentTypeError("empty range %r" % (raw,))
    return lo, hi


def build_parser():
    parser = argparse.ArgumentParser(
        prog="affine-verma",
        description="Exact verification of singular vectors, embeddings and "
                    "conformal structure for type B and D affine vacuum "
                    "modules at level -l + 3/2.")
    sub = parser.add_subparsers(dest="command", required=True)

    dump = sub.add_parser("dump-algebra",
                          help="emit basis, brackets, form and root data")
    dump.add_argument("--type", required=True, choices=("B", "D"))
    dump.add_argument("--l", required=True, type=int)
    dump.add_argument("--format", choices=("json",), default="json")
    dump.add_argument("--out")
    dump.add_argument("--human", action="store_true")

    ver = sub.add_parser("verify", help="run a verification check")
    ver.add_argument("check", choices=CHECKS)
    ver.add_argument("--type", choices=("B", "D"),
                     help="algebra type (singular; admissible defaults to D)")
    ver.add_argument("--l", type=int)
    ver.add_argument("--l-range", type=_parse_l_range, metavar="N..M",
                     help="range of ranks for 'verify all'")
    ver.add_argument("--mode-bound", type=int,
                     help="admissibility scan depth (else env %s, else %d)"
                     % (weights.MODE_BOUND_ENV, weights.DEFAULT_MODE_BOUND))
    ver.add_argument("--strict", action="store_true",
                     help="singular only: also solve for the full singular "
                          "space independently and require dimension one")
    ver.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                     help="parallel workers for 'verify all'")
    ver.add_argument("--out")
    ver.add_argument("--human", action="store_true")
    return parser


def _validate(parser, args):
    if args.command == "dump-algebra":
        if args.l < 4:
            parser.error("--l must be at least 4")
        return
    check = args.check
    if check == "all":
        if args.l_range is None:
            args.l_range = (args.l, args.l) if args.l is not None else (4, 6)
    else:
        if args.l is None:
            args.l = 4 if check == "triality" else None
        if args.l is None:
            parser.error("--l is required for 'verify %s'" % check)
    if args.jobs is not None and args.jobs < 1:
        parser.error("--jobs must be positive")
    if args.mode_bound is not None and args.mode_bound < 1:
        parser.error("--mode-bound must be positive")
    if check == "singular" and args.type is None:
        parser.error("'verify singular' needs --type B or --type D")
    if check == "triality" and args.l != 4:
        parser.error("triality is specific to l = 4")
    if check != "all" and args.l < 4:
        parser.error("--l must be at least 4")
    if check == "all" and args.l_range[0] < 4:
        parser.error("--l-range must start at 4 or above")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    if args.command == "dump-algebra":
        report = liealg.algebra(args.type, args.l).to_dump()
        _emit(report, args)
        return 0

    if args.check == "all":
        lo, hi = args.l_range
        report = run_all(range(lo, hi + 1), args.jobs)
    else:
        report = run_check(args.check, args.type, args.l,
                           mode_bound=args.mode_bound, strict=args.strict)
    _emit(report, args)
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())

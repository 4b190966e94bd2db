"""Command-line entry point.

    wsdalg verify {relations|table1|bases|appendix|structure|closure|all} [options]
    wsdalg closure [--block hw0..hw3|all] [--field exact|modular] [options]
    wsdalg report [--out PATH] [options]

Exit codes: 0 when every selected check passes, 1 on a failed check,
2 on usage errors.  Reports are written atomically; the ``results``
object is deterministic for a fixed configuration, volatile fields live
under ``meta``.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import suites
from . import closure as cl

_BLOCK_CHOICES = {"hw0": (0,), "hw1": (1,), "hw2": (2,), "hw3": (3,), "all": (0, 1, 2, 3)}


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="write the report to this path (atomic)")
    p.add_argument(
        "--prime",
        type=int,
        action="append",
        help="modular prime = 1 (mod 4); repeatable (default: built-in pair)",
    )
    p.add_argument("--threads", type=int, default=1, help="worker thread budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wsdalg",
        description="exact verification suites for the rank-three structure algebra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run named verification suites")
    pv.add_argument(
        "suite",
        choices=suites.SUITE_ORDER + ("all",),
        help="suite to run ('all' runs every suite in dependency order)",
    )
    _add_common(pv)

    pc = sub.add_parser("closure", help="run the algebra closure")
    pc.add_argument("--block", choices=sorted(_BLOCK_CHOICES), default="all")
    pc.add_argument("--field", choices=("exact", "modular"), default="modular")
    _add_common(pc)

    pr = sub.add_parser("report", help="run every suite and emit the full report")
    _add_common(pr)
    return parser


def _validate_primes(primes):
    if not primes:
        return None
    for p in primes:
        if p % 4 != 1:
            raise SystemExit(2)
    return tuple(primes)


def _emit(text: str, out: str | None):
    if out:
        d = os.path.dirname(os.path.abspath(out))
        fd, tmp = tempfile.mkstemp(dir=d, prefix=".wsdalg-")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, out)
        except BaseException:
            os.unlink(tmp)
            raise
    else:
        sys.stdout.write(text)


def _format_text(report: dict) -> str:
    lines = []
    for name, res in report["results"].items():
        status = "PASS" if res.get("pass") else "FAIL"
        lines.append(f"[{status}] {name}")
        for f in res.get("failures", []) or []:
            lines.append(f"    failure: {f}")
        if name == "table1" and res.get("pass") is False:
            lines.append(f"    rows: {res['rows']}")
        if name == "appendix":
            for tname, tr in res.get("tables", {}).items():
                lines.append(
                    f"    table {tname}: "
                    f"{'ok' if tr['pass'] else 'MISMATCH'} "
                    f"({tr['marked_cells']} marked, {tr['unmarked_cells']} blank)"
                )
                for mm in tr["mismatches"]:
                    lines.append(f"        {mm}")
        if name == "closure":
            for run in res.get("runs", []):
                lines.append(
                    f"    field={run['field']} prime={run['prime']} dim={run['dim']} "
                    f"blocks={run['block_dims']}"
                )
            if res.get("complexified"):
                c = res["complexified"]
                lines.append(
                    f"    complexified: dim={c['dim']} (real dimension {2 * c['dim']})"
                )
            if "bound_gap" in res:
                lines.append(f"    gap to invariant bound: {res['bound_gap']}")
    lines.append("overall: " + ("PASS" if report["pass"] else "FAIL"))
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    primes = _validate_primes(args.prime)
    config = {"primes": primes, "threads": args.threads}

    if args.command == "verify":
        report = suites.run_suites(args.suite, config)
    elif args.command == "report":
        report = suites.run_suites("all", config)
    else:  # closure
        config["blocks"] = _BLOCK_CHOICES[args.block]
        config["field"] = args.field
        res = suites._SUITES["closure"](config)
        extra = res.pop("_meta", {})
        report = {
            "schema": "wsdalg-report/1",
            "results": {"closure": res},
            "meta": {
                "primes": list(primes or suites.default_primes_from_env()),
                "suites": {"closure": extra},
            },
        }
        report["pass"] = report["results"]["closure"]["pass"]

    if args.format == "json" or args.command == "report":
        text = suites.report_json(report)
    elif args.format == "csv":
        if "table1" not in report["results"]:
            parser.error("csv output is only defined for the table1 suite")
        from .reptheory import isotypical_table

        text = isotypical_table().as_csv()
    else:
        text = _format_text(report)
    _emit(text, args.out)
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface.

Subcommands:

  verify         run one verification suite (or all of them) and emit a
                 deterministic JSON/CSV report; exit 0 only if every case passed
  qexp           print the q-expansion of the smoothed theta unit as JSON
  residue-table  tabulate closed residues of weight-k classes at level N
  dir            evaluate the boundary formula for a weight function, by the
                 direct route, the smoothed-unit route, or both

Exit codes: 0 success / all checks passed; 1 a verification comparison
failed; 2 invalid input or configuration; 3 the residue-zero precondition of
the boundary formula was violated (the report carries the residue).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .formal import ResiduePreconditionError, dir_closed, dir_via_me, residue_table
from .numutil import rat_str
from .serialize import formal_to_json, psi_from_json, series_to_json
from .units import theta_qexp
from .verify import SUITE_NAMES, run_suites

__all__ = ["build_parser", "main"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellsoule",
        description="exact arithmetic of smoothed theta units, their measures, "
        "moments and boundary formulas",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run self-verification suites")
    p_verify.add_argument(
        "--suite",
        choices=SUITE_NAMES + ("all",),
        default="all",
        help="which suite to run (default: all)",
    )
    p_verify.add_argument("--ell", type=int, default=2, help="prime ell (default 2)")
    p_verify.add_argument("--N", type=int, default=3, help="tame level N (default 3)")
    p_verify.add_argument("--c", type=int, default=5, help="smoothing factor (default 5)")
    p_verify.add_argument("--rmax", type=int, default=2, help="largest level r (default 2)")
    p_verify.add_argument("--kmax", type=int, default=4, help="largest weight k (default 4)")
    p_verify.add_argument(
        "--trunc", type=int, default=40, help="q-expansion window (default 40)"
    )
    p_verify.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p_verify.add_argument("--out", metavar="FILE", help="write the report to FILE")
    p_verify.add_argument(
        "--format", choices=("json", "csv"), default="json", help="report format"
    )
    p_verify.add_argument(
        "--timing",
        action="store_true",
        help="include wall-clock time in the report (off by default so reports "
        "are byte-reproducible)",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_qexp = sub.add_parser("qexp", help="q-expansion of the smoothed theta unit")
    p_qexp.add_argument("--ell", type=int, default=2)
    p_qexp.add_argument("--r", type=int, default=1)
    p_qexp.add_argument("--N", type=int, default=3)
    p_qexp.add_argument("--c", type=int, default=5)
    p_qexp.add_argument("--x", type=int, default=1)
    p_qexp.add_argument("--y", type=int, default=0)
    p_qexp.add_argument("--trunc", type=int, default=40)
    p_qexp.add_argument("--out", metavar="FILE")
    p_qexp.set_defaults(func=_cmd_qexp)

    p_table = sub.add_parser(
        "residue-table",
        aliases=["residue_table"],
        help="closed residues of all weight-k classes at level N",
    )
    p_table.add_argument("--N", type=int, default=3)
    p_table.add_argument("--k", type=int, default=2)
    p_table.add_argument("--format", choices=("json", "csv"), default="json")
    p_table.add_argument("--out", metavar="FILE")
    p_table.set_defaults(func=_cmd_table)

    p_dir = sub.add_parser(
        "dir", help="boundary value of a weight function (requires residue zero)"
    )
    p_dir.add_argument(
        "--psi", required=True, metavar="FILE", help="weight function as JSON"
    )
    p_dir.add_argument("--c", type=int, default=5, help="smoothing factor for the me route")
    p_dir.add_argument("--route", choices=("closed", "me", "both"), default="both")
    p_dir.add_argument("--out", metavar="FILE")
    p_dir.set_defaults(func=_cmd_dir)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _verify_csv(report: dict) -> str:
    buf = io.StringIO()
    if report["suite"] == "bernoulli":
        writer = csv.writer(buf)
        writer.writerow(
            ["ell", "r", "N", "c", "t", "k", "finite_sum", "closed_value", "congruent"]
        )
        for row in report["cases"]:
            writer.writerow(
                [
                    row["ell"],
                    row["r"],
                    row["N"],
                    row["c"],
                    row["t"],
                    row["k"],
                    row["finite_sum"],
                    row["closed_value"],
                    row["congruent"],
                ]
            )
        return buf.getvalue().rstrip("\n")
    writer = csv.writer(buf)
    writer.writerow(["suite", "case", "pass", "details"])
    blocks = report["suites"] if report["suite"] == "all" else [report]
    for block in blocks:
        for row in block["cases"]:
            extra = {
                k: v for k, v in row.items() if k not in ("case", "pass")
            }
            writer.writerow(
                [
                    block["suite"],
                    row["case"],
                    row["pass"],
                    json.dumps(extra, sort_keys=True),
                ]
            )
    return buf.getvalue().rstrip("\n")


def _cmd_verify(args) -> int:
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    started = time.perf_counter()
    report = run_suites(
        names,
        ell=args.ell,
        N=args.N,
        c=args.c,
        rmax=args.rmax,
        kmax=args.kmax,
        trunc=args.trunc,
        seed=args.seed,
    )
    if args.timing:
        report["timing"] = {"elapsed_s": round(time.perf_counter() - started, 3)}
    if args.format == "csv":
        _emit(_verify_csv(report), args.out)
    else:
        _emit(json.dumps(report, indent=2), args.out)
    return 0 if report["all_pass"] else 1


def _cmd_qexp(args) -> int:
    f = theta_qexp(args.ell, args.r, args.N, args.c, (args.x, args.y), args.trunc)
    obj = series_to_json(f)
    obj["valuation"] = f"{min(f.terms)}/{f.M}"
    _emit(json.dumps(obj, indent=2), args.out)
    return 0


def _cmd_table(args) -> int:
    rows = residue_table(args.N, args.k)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["a", "b", "value"])
        for a, b, v in rows:
            writer.writerow([a, b, rat_str(v)])
        _emit(buf.getvalue().rstrip("\n"), args.out)
    else:
        obj = {
            "N": args.N,
            "k": args.k,
            "rows": [{"a": a, "b": b, "value": rat_str(v)} for a, b, v in rows],
        }
        _emit(json.dumps(obj, indent=2), args.out)
    return 0


def _cmd_dir(args) -> int:
    with open(args.psi) as fh:
        psi = psi_from_json(json.load(fh))
    out: dict = {"k": psi.k, "N": psi.N, "route": args.route}
    if args.route in ("closed", "both"):
        out["closed"] = formal_to_json(dir_closed(psi))
    if args.route in ("me", "both"):
        out["me"] = formal_to_json(dir_via_me(psi, args.c))
        out["c"] = args.c
    ok = True
    if args.route == "both":
        out["match"] = out["closed"] == out["me"]
        ok = out["match"]
    _emit(json.dumps(out, indent=2), args.out)
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResiduePreconditionError as e:
        print(
            json.dumps(
                {"error": "nonzero residue", "residue": rat_str(e.residue)}, indent=2
            )
        )
        return 3
    except (ValueError, ArithmeticError, KeyError, TypeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface: run the inequality search, test membership,
and tabulate run reports.

Exit codes: 0 success, 1 usage or runtime error, 2 empty-interior failure,
3 internal inconsistency between seeds.
"""

import argparse
import json
import os
import sys

from .pipeline import (InteriorError, RepSpec, RunConfig, SeedDisagreement,
                       emit_table, membership, read_inequalities, run)


def _parse_spec(tokens):
    kind, nums = tokens[0], [int(t) for t in tokens[1:]]
    if kind in ("kron", "kronecker"):
        return RepSpec("kronecker", tuple(sorted(nums, reverse=True)))
    if kind in ("fermion", "boson"):
        if len(nums) != 2:
            raise ValueError("%s takes two integers: d r" % kind)
        return RepSpec(kind, (nums[0],), nums[1])
    raise ValueError("unknown representation kind %r" % kind)


def _parse_stages(text):
    if "-" in text:
        lo, hi = text.split("-")
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(t) for t in text.split(","))


def _parse_lambda(text):
    blocks = text.replace("|", ";").split(";")
    return tuple(tuple(int(c) for c in b.split(",") if c.strip()) for b in blocks)


def _cmd_run(args):
    spec = _parse_spec(args.spec)
    seeds = args.seed or [0]
    config = RunConfig(spec,
                       stages=_parse_stages(args.stages),
                       filters=tuple(f for f in args.filters.split(",") if f),
                       seed=seeds[0],
                       verify_seeds=tuple(seeds[1:]),
                       symbolic=args.symbolic,
                       symmetry=not args.no_symmetry,
                       output=args.out,
                       fmt=args.format,
                       jobs=args.jobs,
                       budget_ms=args.budget_ms,
                       checkpoint=args.checkpoint)
    report = run(config)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report, fh, sort_keys=True, default=str)
    counts = " / ".join(str(report["stages"][k]["count"])
                        for k in sorted(report["stages"]))
    print("stages %s: %s" % (",".join(map(str, sorted(report["stages"]))), counts))
    if "records" in report:
        print("%d facet inequalities, %d dominance inequalities"
              % (len(report["records"]), len(report["dominance"])))
    if report.get("c0_note"):
        print("warning: %s" % report["c0_note"])
    return 0


def _cmd_member(args):
    spec, records, dominance = read_inequalities(args.file)
    lam = _parse_lambda(args.weight)
    ok, violated = membership(spec, records, dominance, lam)
    print("inside" if ok else "outside")
    for n in violated:
        print("violated: " + " ".join(str(c) for c in n))
    return 0


def _cmd_table(args):
    reports = []
    for path in args.reports:
        with open(path) as fh:
            reports.append(json.load(fh))
    print(emit_table(reports))
    return 0


def main(argv=None):
    top = argparse.ArgumentParser(prog="momentcone")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="compute the inequality list")
    p.add_argument("spec", nargs="+",
                   help="kron d1 d2 ... | fermion d r | boson d r")
    p.add_argument("--stages", default="1-5")
    p.add_argument("--filters", default="",
                   help="comma list from lin-tri,bkr,grobner")
    p.add_argument("--seed", type=int, action="append",
                   help="root seed; repeat to cross-check stages 4-5")
    p.add_argument("--budget-ms", type=int, default=60000)
    p.add_argument("--jobs", type=int,
                   default=int(os.environ.get("MOMENTCONE_JOBS", "1")))
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--symbolic", choices=("never", "on-reject", "always"),
                   default="never")
    p.add_argument("--checkpoint", metavar="DIR")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="inequality file path")
    p.add_argument("--report", help="write the JSON run report here")
    p.set_defaults(fn=_cmd_run)

    p = sub.add_parser("member", help="test cone membership")
    p.add_argument("file", help="inequality file from `run --out`")
    p.add_argument("weight", help="partitions like '2,1;1,1;2'")
    p.set_defaults(fn=_cmd_member)

    p = sub.add_parser("table", help="tabulate run reports")
    p.add_argument("reports", nargs="*")
    p.set_defaults(fn=_cmd_table)

    args = top.parse_args(argv)
    try:
        return args.fn(args)
    except InteriorError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except SeedDisagreement as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

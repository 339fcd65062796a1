"""Command line front end.

Subcommands: verify (run suites or a manifest), phi (evaluate a terminating
series spec), delannoy (tables), congruence and positivity (module-specific
grids).  Exit codes: 0 all checks passed, 1 at least one mathematical check
failed, 2 usage or configuration error.  Reports are emitted in canonical case
order and are byte-identical for identical configurations, with or without
--parallel.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import congruence, delannoy, hyperg, suites
from .exactalg import TermBudgetExceeded

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass
class SuiteConfig:
    """Validated configuration for one verify run."""

    suite: str = "all"
    bounds: dict = field(default_factory=dict)
    format: str = "text"
    parallel: bool = False
    seed: int = 0
    out: str = None
    manifest: str = None
    unsafe_bounds: bool = False

    def check_caps(self):
        if self.unsafe_bounds:
            return
        for key, cap in suites.HARD_CAPS.items():
            value = self.bounds.get(key)
            if value is not None and value > cap:
                raise ValueError(
                    f"--{key} {value} above hard cap {cap}; pass --unsafe-bounds to override")
        p = self.bounds.get("p")
        if p is not None and p > suites.HARD_CAPS["pmax"]:
            raise ValueError(
                f"--p {p} above hard cap {suites.HARD_CAPS['pmax']}; pass --unsafe-bounds to override")


def _emit(records, fmt: str, out_path) -> str:
    if fmt == "json":
        text = json.dumps(records, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "params", "passed", "difference"])
        for r in records:
            params = ";".join(f"{k}={v}" for k, v in sorted(r["params"].items()))
            writer.writerow([r["name"], params, r["passed"], r["difference"]])
        text = buf.getvalue()
    else:
        lines = []
        for r in records:
            params = ",".join(f"{k}={v}" for k, v in sorted(r["params"].items()))
            label = f"{r['name']}({params})"
            if r["passed"]:
                lines.append(f"PASS {label}")
            else:
                lines.append(f"FAIL {label} difference={r['difference']}")
        failed = sum(1 for r in records if not r["passed"])
        lines.append(f"{len(records)} cases, {failed} failed")
        text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return text


def _finish(records, fmt, out) -> int:
    _emit(records, fmt, out)
    failures = [r for r in records if not r["passed"]]
    if failures:
        first = failures[0]
        params = ",".join(f"{k}={v}" for k, v in sorted(first["params"].items()))
        print(f"FAILED: {first['name']}({params}) difference={first['difference']}",
              file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    config = SuiteConfig(
        suite=args.suite, format=args.format, parallel=args.parallel,
        seed=args.seed, out=args.out, manifest=args.manifest,
        unsafe_bounds=args.unsafe_bounds,
        bounds={"nmax": args.nmax, "mmax": args.mmax, "pmax": args.pmax,
                "rmax": args.rmax, "p": args.p, "seed": args.seed},
    )
    try:
        config.check_caps()
        if config.manifest:
            with open(config.manifest) as fh:
                cases = suites.manifest_cases(json.load(fh))
        else:
            cases = suites.suite_cases(config.suite, config.bounds)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    records = suites.run_cases(cases, parallel=config.parallel)
    return _finish(records, config.format, config.out)


def cmd_phi(args) -> int:
    try:
        spec = hyperg.parse_phi(args.expr)
    except hyperg.PhiParseError as exc:
        print(f"parse error: line 1, column {exc.offset + 1}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except hyperg.PhiSpecError as exc:
        print(f"invalid series: {exc}", file=sys.stderr)
        return EXIT_USAGE
    num, den = hyperg.phi_sum_cleared(spec)
    from .exactalg import exact_divide
    whole = exact_divide(num, den)
    if whole is not None:
        print(whole)
    else:
        print(f"({num}) / ({den})")
    return EXIT_OK


def cmd_delannoy(args) -> int:
    try:
        table = delannoy.build_table(args.q_analogue, args.m, args.n)
    except (ValueError, delannoy.DelannoyMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m\\n"] + list(range(args.n + 1)))
        for m in range(args.m + 1):
            writer.writerow([m] + [str(table.cell(m, n)) for n in range(args.n + 1)])
        text = buf.getvalue()
    elif args.format == "json":
        text = json.dumps({
            "kind": table.kind, "max_m": table.max_m, "max_n": table.max_n,
            "entries": [[str(v) for v in row] for row in table.entries],
        }, indent=2, sort_keys=True) + "\n"
    else:
        text = f"{table.cell(args.m, args.n)}\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_congruence(args) -> int:
    if args.p not in (3, 5, 7, 11, 13) and not args.unsafe_bounds:
        print(f"error: --p {args.p} must be an odd prime <= 13 "
              "(pass --unsafe-bounds for larger primes)", file=sys.stderr)
        return EXIT_USAGE
    records = []
    try:
        for m in range(1, args.mmax + 1):
            report = congruence.verify_thm2(args.p, m)
            records.append({
                "p": args.p, "m": m,
                "case": congruence.thm2_case(args.p, m),
                "passed": report.passed,
            })
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "text":
        lines = [f"{'PASS' if r['passed'] else 'FAIL'} thm2(p={r['p']},m={r['m']}) "
                 f"case={r['case']}" for r in records]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(records, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(r["passed"] for r in records) else EXIT_FAILED


def cmd_positivity(args) -> int:
    from .positivity import thm3_record
    records = []
    for m in range(1, args.mmax + 1):
        for n in range(1, args.nmax + 1):
            records.append(thm3_record("thm3-1", m, n))
            for r in range(1, args.rmax + 1):
                records.append(thm3_record("thm3-2", m, n, r))
                records.append(thm3_record("thm3-3", m, n, r))
    if args.format == "text":
        lines = []
        for rec in records:
            ok = rec["divisible"] and rec["nonneg"]
            lines.append(f"{'PASS' if ok else 'FAIL'} "
                         f"{rec['claim']}(m={rec['m']},n={rec['n']},r={rec['r']}) "
                         f"min_coeff={rec['min_coeff']} degree_range={rec['degree_range']}")
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(records, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    ok = all(r["divisible"] and r["nonneg"] for r in records)
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qck",
        description="Exact verification of q-series identities, congruences, and positivity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", default=None, help="write the report to this path")
        p.add_argument("--parallel", action="store_true",
                       help="fan cases out to a process pool (report unchanged)")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized property sampling")
        p.add_argument("--unsafe-bounds", action="store_true",
                       help="lift the hard caps on grid bounds")

    pv = sub.add_parser("verify", help="run a verification suite or manifest")
    pv.add_argument("--suite", choices=suites.SUITE_NAMES, default="all")
    pv.add_argument("--manifest", default=None, help="JSON case list to run instead")
    pv.add_argument("--nmax", type=int, default=None)
    pv.add_argument("--mmax", type=int, default=None)
    pv.add_argument("--pmax", type=int, default=None)
    pv.add_argument("--rmax", type=int, default=None)
    pv.add_argument("--p", type=int, default=None,
                    help="restrict the congruence suite to a single prime")
    common(pv)
    pv.set_defaults(fn=cmd_verify)

    pp = sub.add_parser("phi", help="evaluate a terminating series spec")
    pp.add_argument("expr", help='e.g. "phi[2,1]{a, q^-2 ; c ; q}"')
    pp.set_defaults(fn=cmd_phi)

    pd = sub.add_parser("delannoy", help="Delannoy tables and q-analogues")
    pd.add_argument("--m", type=int, required=True)
    pd.add_argument("--n", type=int, required=True)
    pd.add_argument("--q-analogue", dest="q_analogue", default="plain",
                    choices=("plain", "dq", "dqstar", "product-rhs"))
    common(pd)
    pd.set_defaults(fn=cmd_delannoy)

    pc = sub.add_parser("congruence", help="bracket congruences for one prime")
    pc.add_argument("--p", type=int, required=True)
    pc.add_argument("--mmax", type=int, default=9)
    common(pc)
    pc.set_defaults(fn=cmd_congruence)

    pq = sub.add_parser("positivity", help="positivity certificates over a grid")
    pq.add_argument("--mmax", type=int, default=3)
    pq.add_argument("--nmax", type=int, default=3)
    pq.add_argument("--rmax", type=int, default=1)
    common(pq)
    pq.set_defaults(fn=cmd_positivity)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "delannoy" and (args.m < 0 or args.n < 0):
        print("error: --m and --n must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "delannoy" and max(args.m, args.n) > 12 and not args.unsafe_bounds:
        print("error: table bound above 12; pass --unsafe-bounds to override", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except TermBudgetExceeded as exc:
        print(f"aborted: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

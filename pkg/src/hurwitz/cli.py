"""Command-line interface: compute numbers, emit rational forms, verify.

Exit codes: 0 success, 1 a verification check failed, 2 unsupported
range/usage (the message names the violated bound).  All numeric output
is exact; rationals serialize as "num/den" strings.  Output is
byte-identical across runs unless --timing is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .closedforms import (
    classical_genus0,
    classical_genus1,
    mn_single_cycle,
    monotone_genus0,
    monotone_genus1,
)
from .inversion import (
    classical_from_rational_form,
    monotone_from_log_form,
    monotone_from_rational_form,
)
from .joincut import solve_classical, solve_monotone
from .oracle import (
    ResourceLimitError,
    count_classical_transitive,
    count_monotone_transitive,
)
from .partitions import Partition
from .pipeline import GENUS_CAP, genus1_closed, rational_form
from .tables import paper_form
from .verify import SUITES, run_suite

METHODS = ("auto", "oracle", "joincut", "closed-form", "pipeline", "lagrange")


class RangeError(Exception):
    """Query outside the supported range of the requested method."""


def fmt_fraction(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_partition(text: str) -> Partition:
    try:
        parts = [int(p) for p in text.split(",") if p.strip()]
        return Partition(parts)
    except ValueError as exc:
        raise RangeError(f"invalid partition {text!r}: {exc}") from exc


def _auto_method(genus: int, classical: bool) -> str:
    if genus <= 1:
        return "closed-form"
    if genus in (2, 3):
        return "lagrange"
    return "joincut" if classical else "pipeline"


def compute_value(genus: int, alpha: Partition, classical: bool, method: str) -> tuple[str, Fraction]:
    if genus < 0:
        raise RangeError("genus must be >= 0")
    if alpha.size < 1:
        raise RangeError("the partition must be nonempty")
    if method == "auto":
        method = _auto_method(genus, classical)
    r = 2 * genus - 2 + alpha.length + alpha.size
    if r < 0:
        return method, Fraction(0)

    if method == "oracle":
        fn = count_classical_transitive if classical else count_monotone_transitive
        return method, Fraction(fn(alpha, r))

    if method == "joincut":
        if alpha.size > 9:
            raise RangeError(f"join-cut path caps |alpha| at 9, got {alpha.size}")
        solver = solve_classical if classical else solve_monotone
        return method, Fraction(solver(alpha.size, r)[alpha, r])

    if method == "closed-form":
        if classical:
            if genus == 0:
                return method, classical_genus0(alpha)
            if genus == 1:
                return method, classical_genus1(alpha)
            raise RangeError("classical closed formulas cover genus 0 and 1 only")
        if genus == 0:
            return method, monotone_genus0(alpha)
        if genus == 1:
            return method, monotone_genus1(alpha)
        if alpha.length == 1:
            return method, mn_single_cycle(genus, alpha.size)
        raise RangeError(
            "monotone closed formulas cover genus <= 1, or single-part partitions"
        )

    if method == "pipeline":
        if classical:
            raise RangeError("the operator pipeline computes monotone numbers only")
        if genus < 1:
            raise RangeError("the pipeline starts at genus 1; use closed-form")
        if genus > GENUS_CAP:
            raise RangeError(f"pipeline genus cap is {GENUS_CAP}")
        if alpha.size > 12:
            raise RangeError(f"pipeline extraction caps |alpha| at 12, got {alpha.size}")
        if genus == 1:
            return method, monotone_from_log_form(genus1_closed(), alpha)
        return method, monotone_from_rational_form(rational_form(genus), alpha)

    if method == "lagrange":
        if genus not in (2, 3):
            raise RangeError("checked-in tables exist for genus 2 and 3 only")
        if alpha.size > 12:
            raise RangeError(f"table extraction caps |alpha| at 12, got {alpha.size}")
        form = paper_form(genus, classical=classical)
        if classical:
            return method, classical_from_rational_form(form, alpha)
        return method, monotone_from_rational_form(form, alpha)

    raise RangeError(f"unknown method {method!r}")


def cmd_compute(args) -> int:
    alpha = parse_partition(args.partition)
    if args.max_degree is not None and alpha.size > args.max_degree:
        raise RangeError(
            f"|alpha| = {alpha.size} exceeds --max-degree {args.max_degree}"
        )
    start = time.perf_counter()
    method, value = compute_value(args.genus, alpha, args.classical, args.method)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    record = {
        "method": method,
        "query": {
            "genus": args.genus,
            "partition": list(alpha),
            "classical": args.classical,
        },
        "value": fmt_fraction(value),
    }
    if args.timing:
        record["elapsed_ms"] = round(elapsed_ms, 3)
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
    elif args.format == "csv":
        print("method,genus,partition,classical,value")
        print(
            f"{method},{args.genus},{'+'.join(map(str, alpha))},"
            f"{str(args.classical).lower()},{record['value']}"
        )
    else:
        print(record["value"])
    return 0


def cmd_rational_form(args) -> int:
    g = args.genus
    if g < 1:
        raise RangeError("rational forms exist for genus >= 1")
    if g > GENUS_CAP:
        raise RangeError(f"pipeline genus cap is {GENUS_CAP}")
    if g == 1:
        log_form = genus1_closed()
        record = {
            "genus": 1,
            "log_eta": fmt_fraction(log_form.coeff_eta),
            "log_gamma": fmt_fraction(log_form.coeff_gamma),
        }
    else:
        form = rational_form(g)
        record = {
            "genus": g,
            "constant": fmt_fraction(form.constant),
            "terms": [
                {
                    "alpha": list(a),
                    "coeff": fmt_fraction(c),
                    "denominator_power": form.denominator_power(a),
                }
                for a, c in form.sorted_terms()
            ],
        }
    if args.format == "text":
        if g == 1:
            print(f"({record['log_eta']}) log 1/(1-eta) + ({record['log_gamma']}) log 1/(1-gamma)")
        else:
            print(f"constant {record['constant']}")
            for t in record["terms"]:
                alpha = ",".join(map(str, t["alpha"])) or "-"
                print(f"eta[{alpha}] / (1-eta)^{t['denominator_power']}: {t['coeff']}")
    else:
        print(json.dumps(record, sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite, jobs=args.jobs)
    if args.format == "json":
        payload = [
            {
                "check": r.name,
                "passed": r.passed,
                "detail": r.detail,
                **({"elapsed_s": round(r.elapsed, 3)} if args.timing else {}),
            }
            for r in results
        ]
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            stamp = f" ({r.elapsed:.2f}s)" if args.timing else ""
            print(f"{status} {r.name}{stamp}: {r.detail}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz",
        description="Exact monotone and classical single Hurwitz numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute a single Hurwitz number")
    p_compute.add_argument("--genus", type=int, required=True)
    p_compute.add_argument(
        "--partition", required=True, help="comma-separated parts, e.g. 3,1,1"
    )
    p_compute.add_argument("--classical", action="store_true")
    p_compute.add_argument("--method", choices=METHODS, default="auto")
    p_compute.add_argument("--max-degree", type=int, default=None)
    p_compute.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p_compute.add_argument("--timing", action="store_true")
    p_compute.set_defaults(func=cmd_compute)

    p_form = sub.add_parser("rational-form", help="emit a genus generating function")
    p_form.add_argument("--genus", type=int, required=True)
    p_form.add_argument("--format", choices=("json", "text"), default="json")
    p_form.set_defaults(func=cmd_rational_form)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=sorted(SUITES), default="all")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--format", choices=("json", "text"), default="text")
    p_verify.add_argument("--timing", action="store_true")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RangeError, ResourceLimitError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

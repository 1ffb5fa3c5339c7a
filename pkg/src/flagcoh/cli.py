"""
Command-line front end.

Every command prints one JSON record ``{"schema_version", "command",
"payload"}`` unless ``--format csv|svg`` is chosen. Exit status: 0 on
success, 1 when verify-paper finds a mismatch, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import bwb, cones, counterexample, lefschetz, projective, render
from .errors import InputError
from .roots import RankedRootSystem, Weight

SCHEMA_VERSION = "1"

# flags whose values may start with '-' (e.g. --weight -1,0)
VALUE_FLAGS = {"--rank", "--weight", "--range", "--format", "--n", "--d", "--dim",
               "--betti", "--oracle-box", "--oracle-mmin", "--oracle-mmax", "--example"}


class UsageError(Exception):
    pass


def parse_int_list(text: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    try:
        return [int(p, 10) for p in parts]
    except ValueError:
        raise UsageError(f"cannot parse integer list {text!r}") from None


def parse_weight(rank: int, text: str) -> Weight:
    coords = parse_int_list(text)
    if len(coords) != rank:
        raise UsageError(f"--weight has {len(coords)} coordinates, rank is {rank}")
    return Weight(tuple(coords))


def record(command: str, payload: Any) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, "command": command,
                       "payload": payload}, indent=2, sort_keys=True) + "\n"


def cohomology_payload(lam: Weight) -> dict:
    res = bwb.bwb_cohomology(lam)
    return {
        "rank": lam.rank,
        "weight": list(lam),
        "verdict": "all cohomology vanishes" if res.vanishes else "nonvanishing",
        "degree": res.degree,
        "highest_weight": None if res.vanishes else list(res.highest_weight),
        "dimension": res.dimension,
        "h": res.h_vector(),
    }


def cmd_cohomology(args) -> tuple[str, int]:
    lam = parse_weight(args.rank, args.weight)
    return record("cohomology", cohomology_payload(lam)), 0


def cmd_qample(args) -> tuple[str, int]:
    lam = parse_weight(args.rank, args.weight)
    payload = {
        "rank": lam.rank,
        "weight": list(lam),
        "qmin": cones.q_ample_index(lam),
        "num_positive_roots": RankedRootSystem(lam.rank).num_positive_roots,
    }
    if args.oracle:
        payload["oracle"] = {
            "box": args.oracle_box, "m_min": args.oracle_mmin, "m_max": args.oracle_mmax,
            "qmin": cones.q_ample_index_oracle(lam, args.oracle_box, args.oracle_mmin,
                                               args.oracle_mmax),
        }
    return record("qample", payload), 0


def cmd_chambers(args) -> tuple[str, int]:
    if args.range < 1:
        raise UsageError("--range must be >= 1")
    recs = cones.chamber_map(args.rank, args.range)
    if args.format == "csv":
        return render.to_csv(recs), 0
    if args.format == "svg":
        if args.rank != 2:
            raise UsageError("--format svg needs --rank 2")
        return render.to_svg(recs, args.range), 0
    payload = {
        "rank": args.rank,
        "range": args.range,
        "records": [{"weight": list(r.weight), "qmin": r.qmin, "regular": r.regular,
                     "weyl_length": r.weyl_length} for r in recs],
    }
    return record("chambers", payload), 0


def cmd_verify_paper(args) -> tuple[str, int]:
    if args.oracle_box < 1 or not 0 < args.oracle_mmin < args.oracle_mmax:
        raise UsageError("need --oracle-box >= 1 and 0 < --oracle-mmin < --oracle-mmax")
    report = counterexample.check(args.oracle_box, args.oracle_mmin, args.oracle_mmax)
    payload = {
        "status": "PASS" if report.passed else "FAIL",
        "line_bundle": list(counterexample.L_WEIGHT),
        "canonical": list(counterexample.CANONICAL),
        "oracle": {"box": args.oracle_box, "m_min": args.oracle_mmin, "m_max": args.oracle_mmax},
        "computed": report.computed,
        "expected": report.expected,
        "diff": {k: {"expected": e, "computed": c} for k, (e, c) in report.mismatches.items()},
    }
    return record("verify-paper", payload), 0 if report.passed else 1


def cmd_pn(args) -> tuple[str, int]:
    spec = projective.TwistSpec(args.n, args.d)
    payload = {"n": spec.n, "d": spec.d, "h": projective.bott_vector(spec),
               "qmin": projective.pn_q_ample_index(spec)}
    return record("pn", payload), 0


def cmd_lefschetz(args) -> tuple[str, int]:
    if args.example:
        if args.example not in lefschetz.CORPUS:
            raise UsageError(f"unknown example {args.example!r}; "
                             f"choose from {', '.join(sorted(lefschetz.CORPUS))}")
        profile = lefschetz.CORPUS[args.example][0]
    else:
        if args.n is None or args.dim is None or args.betti is None:
            raise UsageError("lefschetz needs --n, --dim and --betti (or --example)")
        profile = lefschetz.BettiProfile(args.n, args.dim, tuple(parse_int_list(args.betti)))
    verdict = lefschetz.ampleness_verdict(profile, smooth=args.smooth)
    payload = {"n": profile.ambient_n, "dim": profile.dim_y, "betti": list(profile.betti),
               "verdict": "Ample" if verdict.ample else "NotAmple",
               "first_failing_degree": verdict.first_failing_degree}
    if args.example:
        payload["example"] = args.example
    return record("lefschetz", payload), 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagcoh",
        description="Line-bundle cohomology and q-ampleness on SL_{r+1}/B and P^n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def oracle_flags(p):
        p.add_argument("--oracle-box", type=int, default=cones.ORACLE_BOX)
        p.add_argument("--oracle-mmin", type=int, default=cones.ORACLE_M_MIN)
        p.add_argument("--oracle-mmax", type=int, default=cones.ORACLE_M_MAX)

    p = sub.add_parser("cohomology", help="Borel-Weil-Bott cohomology of L_lambda")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--weight", required=True, help="comma-separated, e.g. 0,-3")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("qample", help="minimal q with L_lambda q-ample")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force check")
    oracle_flags(p)
    p.set_defaults(func=cmd_qample)

    p = sub.add_parser("chambers", help="classify every lattice point of a box")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--range", type=int, required=True)
    p.add_argument("--format", choices=("structured", "csv", "svg"), default="structured")
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("verify-paper", help="recheck the 1-ample L_(2,-1) counterexample")
    oracle_flags(p)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("pn", help="cohomology and q-ampleness of O(d) on P^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_pn)

    p = sub.add_parser("lefschetz", help="ampleness of smooth Y in P^n from Betti numbers")
    p.add_argument("--n", type=int)
    p.add_argument("--dim", type=int)
    p.add_argument("--betti", help="b_0,...,b_{dim-1}")
    p.add_argument("--example", help=f"one of: {', '.join(sorted(lefschetz.CORPUS))}")
    p.add_argument("--smooth", action=argparse.BooleanOptionalAction, default=True,
                   help="attest that Y is smooth (required for a verdict)")
    p.set_defaults(func=cmd_lefschetz)
    return parser


def _glue_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_glue_values(argv))
    try:
        text, status = args.func(args)
    except (UsageError, InputError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 analysis done (whatever the verdict), 2 malformed input,
3 structurally invalid subgroup data, 4 oracle size guard tripped.
"""
from __future__ import annotations

import argparse
import json
import sys

from .congruence import is_congruence
from .errors import InvalidSubgroup, OracleTooLarge
from .gen import enumerate_subgroups, random_subgroup
from .modgroup import SubgroupRep, canonicalize, cusp_data, intersect, validate
from .sl2zmod import gamma0, gamma1, gamma_full, oracle_factors_through

FORMAT = "sl2z-subgroup/1"
EXIT_OK, EXIT_MALFORMED, EXIT_INVALID, EXIT_ORACLE = 0, 2, 3, 4

BUILDERS = {"gamma0": gamma0, "gamma1": gamma1, "gamma": gamma_full}


class Malformed(ValueError):
    pass


def to_payload(g: SubgroupRep) -> dict:
    return {
        "format": FORMAT,
        "degree": g.degree,
        "L": list(g.sigma_l.images),
        "R": list(g.sigma_r.images),
    }


def from_payload(obj) -> SubgroupRep:
    """Decode a subgroup file; ``Malformed`` for bad shape, ``InvalidSubgroup`` for bad data."""
    if not isinstance(obj, dict) or obj.get("format") != FORMAT:
        raise Malformed(f"expected an object with format {FORMAT!r}")
    degree, sl, sr = obj.get("degree"), obj.get("L"), obj.get("R")
    if type(degree) is not int or degree < 1:
        raise Malformed("degree must be a positive integer")
    for name, arr in (("L", sl), ("R", sr)):
        if not isinstance(arr, list) or len(arr) != degree or any(type(x) is not int for x in arr):
            raise Malformed(f"{name} must be a list of {degree} integers")
        if sorted(arr) != list(range(degree)):
            raise Malformed(f"{name} is not a bijection on 0..{degree - 1}")
    return validate(degree, sl, sr)


def verdict_report(g: SubgroupRep) -> dict:
    v = is_congruence(g)
    return {
        "degree": g.degree,
        "even": v.even,
        "cusp_widths": list(cusp_data(g).widths),
        "d": v.d,
        "candidate_level": v.candidate_level,
        "congruence": v.congruence,
        "failed_relator": v.failed_relator,
        "exact_level": v.exact_level,
    }


def read_subgroup(path: str) -> SubgroupRep:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise Malformed(f"{path}: {exc}") from None
    return from_payload(obj)


def emit(obj: dict, out: str | None = None) -> None:
    text = json.dumps(obj) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def cmd_build(args):
    emit(to_payload(BUILDERS[args.kind](args.n)), args.out)


def cmd_check(args):
    emit(verdict_report(read_subgroup(args.input)))


def cmd_random(args):
    emit(to_payload(random_subgroup(args.degree, args.seed)), args.out)


def cmd_enumerate(args):
    for g in enumerate_subgroups(args.max_degree):
        emit({"subgroup": to_payload(g), "verdict": verdict_report(g)})


def cmd_oracle(args):
    g = read_subgroup(args.input)
    emit({"factors": oracle_factors_through(g, args.n)})


def cmd_intersect(args):
    g = intersect(read_subgroup(args.first), read_subgroup(args.second))
    emit(to_payload(canonicalize(g)), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modcong",
        description="Congruence testing for finite-index subgroups of SL2(Z).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a standard congruence subgroup")
    p.add_argument("kind", choices=sorted(BUILDERS))
    p.add_argument("n", type=positive_int)
    p.add_argument("-o", "--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="decide whether a subgroup is congruence")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("random", help="write a seeded random subgroup")
    p.add_argument("degree", type=positive_int)
    p.add_argument("seed", type=int)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("enumerate", help="all subgroups up to an index, one JSON line each")
    p.add_argument("max_degree", type=positive_int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", help="brute-force check that the action factors through SL2(Z/n)")
    p.add_argument("input")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("intersect", help="intersection of two subgroups")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_intersect)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except InvalidSubgroup as exc:
        print(f"modcong: invalid subgroup: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OracleTooLarge as exc:
        print(f"modcong: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (Malformed, ValueError) as exc:
        print(f"modcong: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

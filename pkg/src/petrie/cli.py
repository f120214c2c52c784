"""Command-line interface.

Subcommands: `gkm` (expand a Petrie function in any basis), `pet`
(k-Petrie numbers by one or all methods), `pieri` (Schur expansion of
G(k,m) * s_mu), `verify` (identity suites streaming JSON-line reports).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
consistency violation (disagreeing pet methods).
"""

import argparse
import json
import sys

from . import partitions
from .gkm import pet_alpha, pet_det, pet_explicit, pet_json_dict, petrie_g, pieri_expand
from .symfunc import pretty, to_basis, to_json_dict
from .verify import (
    check_gessel,
    check_genset,
    check_liu_polo,
    check_petriefication_known_cases,
    check_petriefication_one,
    scan_alexandersson,
)

SUITES = (
    "liu-polo",
    "gessel",
    "genset",
    "alexandersson",
    "petriefication",
    "invariants-all",
)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _partition(text: str) -> partitions.Partition:
    try:
        return partitions.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _emit_symfunc(f, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(to_json_dict(f)))
    else:
        print(pretty(f))


def _cmd_gkm(args, parser) -> int:
    f = petrie_g(args.k, args.m)
    _emit_symfunc(to_basis(f, args.basis), args.format)
    return 0


def _cmd_pet(args, parser) -> int:
    lam, mu = args.lam, args.mu
    if args.method == "explicit" and mu:
        parser.error("--method explicit requires an empty --mu")
    methods = ["det", "explicit", "alpha"] if args.method == "all" else [args.method]
    if args.method == "all" and mu:
        methods.remove("explicit")
    results = {}
    for method in methods:
        if method == "det":
            results[method] = pet_det(args.k, lam, mu)
        elif method == "alpha":
            results[method] = pet_alpha(args.k, lam, mu)
        else:
            results[method], _ = pet_explicit(args.k, lam)
    if len(set(results.values())) > 1:
        print(
            f"internal consistency violation: pet methods disagree: {results}",
            file=sys.stderr,
        )
        return 3
    for method in methods:
        if args.format == "json":
            print(json.dumps(pet_json_dict(args.k, lam, mu, results[method], method)))
        elif args.method == "all":
            print(f"{method}: {results[method]}")
        else:
            print(results[method])
    return 0


def _cmd_pieri(args, parser) -> int:
    _emit_symfunc(pieri_expand(args.k, args.m, args.mu), args.format)
    return 0


def _iter_suite_reports(args):
    suite = args.suite
    if suite == "liu-polo":
        for n in range(2, (args.n_max or 8) + 1):
            yield check_liu_polo(n)
    elif suite == "gessel":
        yield check_gessel(args.n_max or 8)
    elif suite == "genset":
        yield check_genset(args.k or 2, args.n_max or 7)
    elif suite == "alexandersson":
        yield scan_alexandersson(args.bound or 14)
    elif suite == "petriefication":
        if args.lam is not None:
            yield check_petriefication_one(args.k or 4, args.lam)
        else:
            yield check_petriefication_known_cases()
    elif suite == "invariants-all":
        for n in range(2, 9):
            yield check_liu_polo(n)
        yield check_gessel(8)
        for k in (2, 3, 4):
            yield check_genset(k, 7)
        yield scan_alexandersson(args.bound or 14)
        yield check_petriefication_known_cases()


def _cmd_verify(args, parser) -> int:
    all_passed = True
    try:
        for report in _iter_suite_reports(args):
            print(report.to_json_line(), flush=True)
            all_passed = all_passed and report.passed
    except ValueError as exc:
        parser.error(str(exc))
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="petrie",
        description="Exact computations with Petrie symmetric functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gkm = sub.add_parser("gkm", help="expand G(k,m) in a chosen basis")
    p_gkm.add_argument("--k", type=_positive_int, required=True)
    p_gkm.add_argument("--m", type=_nonnegative_int, required=True)
    p_gkm.add_argument("--basis", choices=["m", "h", "e", "p", "s"], default="m")
    p_gkm.add_argument("--format", choices=["json", "pretty"], default="pretty")
    p_gkm.set_defaults(func=_cmd_gkm)

    p_pet = sub.add_parser("pet", help="compute a k-Petrie number")
    p_pet.add_argument("--k", type=_positive_int, required=True)
    p_pet.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p_pet.add_argument("--mu", type=_partition, default=())
    p_pet.add_argument(
        "--method", choices=["det", "explicit", "alpha", "all"], default="det"
    )
    p_pet.add_argument("--format", choices=["json", "pretty"], default="pretty")
    p_pet.set_defaults(func=_cmd_pet)

    p_pieri = sub.add_parser("pieri", help="Schur expansion of G(k,m) * s_mu")
    p_pieri.add_argument("--k", type=_positive_int, required=True)
    p_pieri.add_argument("--m", type=_nonnegative_int, required=True)
    p_pieri.add_argument("--mu", type=_partition, default=())
    p_pieri.add_argument("--format", choices=["json", "pretty"], default="pretty")
    p_pieri.set_defaults(func=_cmd_pieri)

    p_verify = sub.add_parser("verify", help="run an identity suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--n-max", type=_positive_int, default=None)
    p_verify.add_argument("--bound", type=_positive_int, default=None)
    p_verify.add_argument("--k", type=_positive_int, default=None)
    p_verify.add_argument("--lambda", dest="lam", type=_partition, default=None)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())

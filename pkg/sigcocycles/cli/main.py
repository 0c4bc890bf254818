"""
Filename: main.py
Author: William Bowley
Version: 2.0
Date: 2026-10-15

Description:
    Batch command line. Every subcommand reads JSON files,
    prints one JSON document (or CSV for order tables) to
    standard output and returns an exit status:

        0  success
        1  malformed input
        2  violated precondition (non-symplectic matrix,
           non-closed monodromy, unsupported modulus)
        3  selftest found a failing criterion
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Optional, Sequence, TextIO

from sigcocycles.bundle.signature import signature_mod, signature_report
from sigcocycles.circle.covering import covering_number
from sigcocycles.cli.codec import (
    decode_cocycle,
    decode_lagrangian,
    decode_matrix,
    decode_monodromy,
    decode_symplectic,
    dumps,
    encode_lagrangian,
    read_json
)
from sigcocycles.cli.selftest import SelfTest, load_config
from sigcocycles.congruence.export import order_row, rows_to_csv
from sigcocycles.congruence.membership import in_K, in_Y
from sigcocycles.congruence.modular import ModMat, in_principal_congruence
from sigcocycles.domain.constants import (
    DEFAULT_SEED,
    EXIT_CHECK_FAILED,
    EXIT_MALFORMED,
    EXIT_OK,
    EXIT_PRECONDITION
)
from sigcocycles.domain.definitions import GroupOrder, Membership
from sigcocycles.domain.errors import (
    InvalidInputError,
    NotSymplecticError,
    PreconditionError
)
from sigcocycles.maslov.index import radical_dimension, wall_maslov
from sigcocycles.meyer.cocycles import maslov_cocycle, meyer_cocycle


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as malformed input instead of exiting."""
    def error(self, message: str) -> None:
        raise InvalidInputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sigcocycles",
        description="Exact signature cocycles of symplectic groups.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    meyer = commands.add_parser("meyer", help="Meyer and Maslov cocycles")
    meyer.add_argument("--alpha", required=True, help="matrix JSON file")
    meyer.add_argument("--beta", required=True, help="matrix JSON file")

    maslov = commands.add_parser("maslov", help="Wall-Maslov index")
    for name in ("--l1", "--l2", "--l3"):
        maslov.add_argument(name, required=True, help="lagrangian JSON file")

    bundle = commands.add_parser("bundle", help="bundle signature")
    bundle.add_argument("--monodromy", required=True, help="monodromy JSON")
    bundle.add_argument("--mod", type=int, default=None, help="2, 4 or 8")
    bundle.add_argument(
        "--open", action="store_true", help="accept a non-closed monodromy"
    )

    member = commands.add_parser("member", help="subgroup membership")
    member.add_argument(
        "--which", required=True, choices=[kind.value for kind in Membership]
    )
    member.add_argument("--matrix", required=True, help="matrix JSON file")
    member.add_argument("--modulus", type=int, default=None)

    order = commands.add_parser("order", help="finite group orders")
    order.add_argument("--g", type=int, required=True)
    order.add_argument(
        "--which", required=True, choices=[kind.value for kind in GroupOrder]
    )
    order.add_argument("--enumerate", action="store_true")
    order.add_argument("--format", choices=("json", "csv"), default="json")

    covering = commands.add_parser("covering", help="circle covering number")
    covering.add_argument("--cocycle", required=True, help="cocycle JSON file")

    selftest = commands.add_parser("selftest", help="acceptance suite")
    selftest.add_argument("--seed", type=int, default=DEFAULT_SEED)
    selftest.add_argument("--quick", action="store_true")
    selftest.add_argument("--config", default=None, help="YAML file")

    return parser


def _meyer(args: argparse.Namespace) -> dict[str, Any]:
    alpha = decode_symplectic(read_json(args.alpha))
    beta = decode_symplectic(read_json(args.beta))
    return {
        "meyer": meyer_cocycle(alpha, beta),
        "maslov": maslov_cocycle(alpha, beta),
    }


def _maslov(args: argparse.Namespace) -> dict[str, Any]:
    lags = [decode_lagrangian(read_json(path)) for path in (
        args.l1, args.l2, args.l3
    )]
    return {
        "tau": wall_maslov(*lags),
        "radical_dimension": radical_dimension(*lags),
        "lagrangians": [encode_lagrangian(lag) for lag in lags],
    }


def _bundle(args: argparse.Namespace) -> dict[str, Any]:
    monodromy = decode_monodromy(read_json(args.monodromy))
    payload: dict[str, Any] = signature_report(
        monodromy, allow_open=args.open
    ).as_dict()
    payload["fiber_genus"] = monodromy.fiber_genus
    payload["base_genus"] = monodromy.base_genus
    if args.mod is not None:
        payload["residue"] = signature_mod(monodromy, args.mod).as_dict()
    return payload


def _member(args: argparse.Namespace) -> dict[str, Any]:
    which = Membership(args.which)
    data = read_json(args.matrix)

    match which:
        case Membership.GAMMA_N:
            if args.modulus is None:
                msg = "member --which gammaN needs --modulus"
                logging.error(msg)
                raise InvalidInputError(f"{__name__}: {msg}")
            member = in_principal_congruence(
                decode_symplectic(data), args.modulus
            )
        case Membership.K:
            member = in_K(decode_symplectic(data))
        case Membership.Y:
            mat = decode_matrix(data)
            if not mat.is_integral() or not mat.is_square or mat.nrows % 2:
                msg = "Y membership needs an even square integer matrix"
                logging.error(msg)
                raise InvalidInputError(f"{__name__}: {msg}")
            residues = ModMat(
                mat.nrows // 2, 4, tuple(int(x) for x in mat.entries)
            )
            if not residues.is_symplectic():
                msg = "Matrix is not symplectic mod 4"
                logging.error(msg)
                raise NotSymplecticError(f"{__name__}: {msg}")
            member = in_Y(residues)

    return {"which": which.value, "member": member}


def _order(args: argparse.Namespace) -> dict[str, Any] | str:
    row = order_row(args.g, args.which, enumerate_=args.enumerate)
    if args.format == "csv":
        return rows_to_csv([row])

    payload: dict[str, Any] = {
        "g": row.g,
        "which": row.which,
        "order": str(row.formula_order),
    }
    if row.enumerated_order is not None:
        payload["enumerated"] = str(row.enumerated_order)
        payload["matches"] = row.matches
    return payload


def _covering(args: argparse.Namespace) -> dict[str, Any]:
    cocycle = decode_cocycle(read_json(args.cocycle))
    return {"covering_number": covering_number(cocycle)}


def _selftest(args: argparse.Namespace) -> dict[str, Any]:
    config = load_config(args.config)
    return SelfTest(seed=args.seed, quick=args.quick, config=config).run()


HANDLERS = {
    "meyer": _meyer,
    "maslov": _maslov,
    "bundle": _bundle,
    "member": _member,
    "order": _order,
    "covering": _covering,
    "selftest": _selftest,
}


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None
) -> int:
    """
    Parses argv, runs one subcommand and returns the exit status.
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        result = HANDLERS[args.command](args)

    except SystemExit as exit_request:
        # --help
        return int(exit_request.code or 0)

    except PreconditionError as error:
        print(f"error: {error}", file=stderr)
        return EXIT_PRECONDITION

    except (ValueError, KeyError, RuntimeError) as error:
        logging.error("Command failed: %s", error)
        print(f"error: {error}", file=stderr)
        return EXIT_MALFORMED

    if isinstance(result, str):
        stdout.write(result)
    else:
        stdout.write(dumps(result) + "\n")

    if args.command == "selftest" and not result["passed"]:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def main() -> None:
    """Console entry point."""
    sys.exit(run(sys.argv[1:]))

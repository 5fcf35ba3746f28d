"""``basis`` 子命令：逐行输出上同调基元素。"""

from __future__ import annotations

import argparse

from wonderful_braid.cohomology.supermax import enumerate_supermax_basis
from wonderful_braid.cohomology.yuzvinsky import enumerate_yuz
from wonderful_braid.errors import DomainError
from wonderful_braid.harness._params import MODELS, add_n_param, bounded_n
from wonderful_braid.harness.helpers import basis_payload, emit, load_json_arg, parse_nested


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("basis", help="dump a cohomology basis as JSON lines")
    add_n_param(parser)
    parser.add_argument("--model", choices=MODELS, default="minimal")
    parser.add_argument(
        "--background",
        default=None,
        help="minimal model only: nested set S containing V (JSON) for the stratum D_S, or - for stdin",
    )
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    bounded_n(args.n, "basis")
    if args.model == "supermaximal":
        elements = enumerate_supermax_basis(args.n)
    else:
        background = None
        if args.background is not None:
            if args.model != "minimal":
                raise DomainError("--background is only supported for the minimal model")
            background = parse_nested(load_json_arg(args.background), args.n)
        elements = enumerate_yuz(args.model, background, args.n)
    for element in elements:
        emit(basis_payload(element))
    return 0

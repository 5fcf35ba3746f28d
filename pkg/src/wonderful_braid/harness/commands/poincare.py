"""``poincare`` 子命令：按基枚举给出 Poincaré 多项式。"""

from __future__ import annotations

import argparse

from wonderful_braid.cohomology.poincare import poincare
from wonderful_braid.harness._params import MODELS, add_format_param, add_n_param, bounded_n
from wonderful_braid.harness.helpers import emit, emit_frame, poly_frame, poly_payload


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("poincare", help="Poincare polynomial (q tracks H^{2i})")
    add_n_param(parser)
    parser.add_argument("--model", choices=MODELS, default="minimal")
    add_format_param(parser)
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    p = poincare(args.model, bounded_n(args.n, "poincare"))
    if args.format == "csv":
        emit_frame(poly_frame(p))
    else:
        emit(poly_payload(p))
    return 0

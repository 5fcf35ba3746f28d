"""``bijection`` 子命令：嵌套集与集合划分互转。"""

from __future__ import annotations

import argparse

from wonderful_braid.combinatorics.bijection import nested_to_partition, partition_to_nested
from wonderful_braid.errors import InvalidObjectError
from wonderful_braid.harness._params import add_n_param
from wonderful_braid.harness.helpers import (
    emit,
    load_json_arg,
    nested_payload,
    parse_nested,
    parse_partition,
    partition_payload,
)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bijection", help="map F^k(B(n-1)) <-> P_2(n+k, k+1)")
    add_n_param(parser)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--nested", help="nested set as JSON block list, or - for stdin")
    source.add_argument("--partition", help="partition as JSON block list, or - for stdin")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    if args.nested is not None:
        s = parse_nested(load_json_arg(args.nested), args.n)
        if not s.contains_root:
            raise InvalidObjectError("nested set must contain V")
        emit(partition_payload(nested_to_partition(s)))
    else:
        p = parse_partition(load_json_arg(args.partition))
        emit(nested_payload(partition_to_nested(p, args.n)))
    return 0

"""``nested`` 子命令：枚举 B(n−1)，可按层（--size）与深度（--depth）过滤。"""

from __future__ import annotations

import argparse
import json
import sys

from wonderful_braid.combinatorics.enumeration import enumerate_B
from wonderful_braid.combinatorics.trees import depth
from wonderful_braid.harness._params import add_format_param, add_n_param
from wonderful_braid.harness.helpers import emit, emit_frame, nested_frame, nested_payload


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("nested", help="enumerate B(n-1)")
    add_n_param(parser)
    parser.add_argument("--size", type=int, default=None, help="keep nested sets with exactly SIZE blocks (k+1)")
    parser.add_argument("--depth", type=int, default=None, help="keep nested sets of this depth")
    parser.add_argument("--count", action="store_true", help="print the number of matches only")
    add_format_param(parser)
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    found = enumerate_B(args.n, size=args.size)
    if args.depth is not None:
        found = [s for s in found if depth(s) == args.depth]
    if args.count:
        sys.stdout.write(json.dumps(len(found)) + "\n")
        return 0
    if args.format == "csv":
        emit_frame(nested_frame(found))
        return 0
    for s in found:
        emit(nested_payload(s))
    return 0

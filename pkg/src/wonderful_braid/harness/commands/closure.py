"""``closure`` 子命令：从 C-链种子出发计算建筑闭包并与 B(n−1) 比较。"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from wonderful_braid.action.closure import building_closure, closure_seed
from wonderful_braid.combinatorics.enumeration import enumerate_B
from wonderful_braid.harness._params import add_n_param, bounded_n
from wonderful_braid.harness.config import get_settings
from wonderful_braid.harness.helpers import emit, nested_payload

logger = logging.getLogger("wonderful_braid.closure")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("closure", help="building closure of the C-chain seed")
    add_n_param(parser)
    parser.add_argument(
        "--allow-trivial-meet",
        action="store_true",
        default=None,
        help="also apply the union rule to pairs meeting only in {V}",
    )
    parser.add_argument("--count", action="store_true", help="print the closure size only")
    parser.add_argument("--compare", action="store_true", help="exit 1 unless the closure is all of B(n-1)")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    bounded_n(args.n, "closure")
    trivial = get_settings().allow_trivial_meet if args.allow_trivial_meet is None else args.allow_trivial_meet
    members = building_closure(closure_seed(args.n), args.n, allow_trivial_meet=trivial)
    ordered = sorted(members, key=lambda s: s.sort_key)
    if args.count:
        sys.stdout.write(json.dumps(len(ordered)) + "\n")
    else:
        for s in ordered:
            emit(nested_payload(s))
    if args.compare:
        expected = enumerate_B(args.n)
        if set(expected) != members:
            logger.error("闭包与 B(%d) 不一致: %d vs %d", args.n - 1, len(members), len(expected))
            return 1
    return 0

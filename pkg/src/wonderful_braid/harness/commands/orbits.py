"""``orbits`` 子命令：F^k(B(n−1)) 上的轨道计数。"""

from __future__ import annotations

import argparse
import json
import sys

from wonderful_braid.action.orbits import OrbitMode, orbit_count, orbit_representatives
from wonderful_braid.combinatorics.blocks import NestedSet
from wonderful_braid.harness._params import add_n_param, bounded_n
from wonderful_braid.harness.helpers import emit, nested_payload, partition_payload


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("orbits", help="count orbits on F^k(B(n-1))")
    add_n_param(parser)
    parser.add_argument("--k", type=int, required=True, help="layer index k (nested sets with k+1 blocks)")
    parser.add_argument("--mode", choices=[m.value for m in OrbitMode], default="natural")
    parser.add_argument("--representatives", action="store_true", help="print one representative per orbit")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    bounded_n(args.n + args.k, "orbits")
    if args.representatives:
        for rep in orbit_representatives(args.k, args.n, args.mode):
            emit(nested_payload(rep) if isinstance(rep, NestedSet) else partition_payload(rep))
    else:
        sys.stdout.write(json.dumps(orbit_count(args.k, args.n, args.mode)) + "\n")
    return 0

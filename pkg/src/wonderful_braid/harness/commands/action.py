"""``action`` 子命令：扩展 S_{n+1} 作用在嵌套集上，或置换作用在带标号划分上。"""

from __future__ import annotations

import argparse

from wonderful_braid.action.extended import act_nested
from wonderful_braid.action.labelled import LabelledPartition, act_labelled_partition
from wonderful_braid.action.permutation import ExtPermutation
from wonderful_braid.errors import InvalidObjectError
from wonderful_braid.harness._params import add_n_param
from wonderful_braid.harness.helpers import emit, load_json_arg, nested_payload, parse_nested, partition_payload


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("action", help="apply a permutation of {0..n}")
    add_n_param(parser, required=False)
    parser.add_argument("--perm", required=True, help='image list over {0..n}, e.g. "1 0 2 3 4"')
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--nested", help="nested set containing V (JSON), or - for stdin")
    source.add_argument(
        "--labelled",
        help='labelled partition as JSON [{"block": [...], "label": k}, ...], or - for stdin',
    )
    parser.set_defaults(func=run)


def _parse_labelled(data) -> LabelledPartition:
    if not isinstance(data, list) or not all(isinstance(item, dict) for item in data):
        raise InvalidObjectError("labelled partition must be a list of {block, label} objects")
    try:
        pairs = [(item["block"], int(item["label"])) for item in data]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidObjectError("each entry needs a block and an integer label") from exc
    ground = max((x for block, _ in pairs for x in block), default=0)
    return LabelledPartition.from_pairs(pairs, ground)


def run(args: argparse.Namespace) -> int:
    sigma = ExtPermutation.parse(args.perm)
    if args.nested is not None:
        n = args.n if args.n is not None else sigma.n
        s = parse_nested(load_json_arg(args.nested), n)
        emit(nested_payload(act_nested(sigma, s)))
    else:
        lp = _parse_labelled(load_json_arg(args.labelled))
        emit(partition_payload(act_labelled_partition(sigma, lp)))
    return 0

"""子命令共用的参数定义与解析。"""

from __future__ import annotations

import argparse

from wonderful_braid.errors import DomainError
from wonderful_braid.harness.config import get_settings

MODELS = ("minimal", "maximal", "supermaximal")
FORMATS = ("json", "csv")


def add_n_param(parser: argparse.ArgumentParser, *, required: bool = True) -> None:
    parser.add_argument("--n", type=int, required=required, help="ground set size n (>= 2)")


def add_format_param(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="json", help="output format (default: json)")


def add_order_param(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--order",
        type=int,
        default=None,
        help="truncation order T (default: settings truncation_order)",
    )


def order_param(args: argparse.Namespace) -> int:
    """解析 ``--order``，缺省时取配置中的 truncation_order。"""
    order = args.order if args.order is not None else get_settings().truncation_order
    if order < 1:
        raise DomainError("--order must be at least 1")
    return order


def bounded_n(n: int, what: str) -> int:
    """穷举型对照只接受不超过 enumeration_bound 的 n。"""
    bound = get_settings().enumeration_bound
    if n > bound:
        raise DomainError(f"{what} is bounded by enumeration_bound={bound}, got n={n}")
    return n

"""``verify`` 子命令：运行全部检查并输出 VerificationReport。"""

from __future__ import annotations

import argparse

from wonderful_braid.harness.config import get_settings
from wonderful_braid.harness.helpers import emit
from wonderful_braid.harness.verify import CHECKS, run_checks


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="run the verification suite")
    parser.add_argument("--n-max", type=int, default=None, help="largest n (default: settings verify_n_max)")
    parser.add_argument("--order", type=int, default=None, help="series order (default: settings verify_order)")
    parser.add_argument("--check", action="append", choices=sorted(CHECKS), help="run only this check (repeatable)")
    parser.add_argument("--no-progress", action="store_true", help="hide the progress bar")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    settings = get_settings()
    report = run_checks(
        args.n_max if args.n_max is not None else settings.verify_n_max,
        args.order if args.order is not None else settings.verify_order,
        names=args.check,
        workers=settings.workers,
        progress=not args.no_progress,
    )
    emit(report)
    return 0 if report.overall else 1

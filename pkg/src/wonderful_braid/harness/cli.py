"""命令行入口模块 ── ``wonderful-braid`` 命令。

子命令：nested / bijection / action / closure / basis / poincare / series /
verify / orbits。标准输出只写数据（JSON 行或 CSV），日志写到标准错误。

退出码：
    - 0：成功；
    - 1：验证失败或 ``--compare`` 发现不一致；
    - 2：用法错误或输入对象不合法。

典型用法::

    wonderful-braid poincare --model minimal --n 5
    wonderful-braid series --name xi --order 5 --compare
    wonderful-braid verify --n-max 3 --log-level warning
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from wonderful_braid._version import __version__
from wonderful_braid.errors import WonderfulBraidError
from wonderful_braid.harness.commands import MODULES
from wonderful_braid.harness.config import Settings, reset_settings

logger = logging.getLogger("wonderful_braid")

LOG_LEVELS = ["critical", "error", "warning", "info", "debug"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wonderful-braid",
        description="Wonderful models of the braid arrangement: bases, actions and generating functions",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", default=None, help="settings file with WONDERFUL_BRAID_* keys")
    parser.add_argument("--log-level", choices=LOG_LEVELS, default=None, help="log level (default: info)")
    parser.add_argument("--workers", type=int, default=None, help="worker processes for verify (default: 1)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in MODULES:
        module.register(subparsers)
    return parser


def _configure_logging(level: str) -> None:
    """给包 logger 挂一个 stderr handler（只挂一次）。"""
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s:     %(name)s - %(message)s"))
        logger.addHandler(handler)


def main(argv: Sequence[str] | None = None) -> int:
    """解析参数、建立配置单例并分派到子命令。

    启动流程：
    1. 解析命令行参数（argparse 的用法错误直接以退出码 2 结束）
    2. 读取 ``--config`` 设置文件，再用命令行参数覆盖
    3. 设置全局配置单例与日志
    4. 执行子命令，领域错误映射为退出码 2
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = Settings.from_file(args.config)
    except WonderfulBraidError as exc:
        _configure_logging("error")
        logger.error("%s", exc)
        return 2
    if args.log_level is not None:
        settings.log_level = args.log_level
    if args.workers is not None:
        settings.workers = args.workers
    reset_settings(settings)
    _configure_logging(settings.log_level)

    try:
        return args.func(args)
    except WonderfulBraidError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""命令行子命令包。

每个模块对应一个子命令，提供 ``register(subparsers)``，并把执行函数
登记为 ``func``；执行函数返回进程退出码。
"""

from wonderful_braid.harness.commands import (
    action,
    basis,
    bijection,
    closure,
    nested,
    orbits,
    poincare,
    series,
    verify,
)

MODULES = (nested, bijection, action, closure, basis, poincare, series, verify, orbits)

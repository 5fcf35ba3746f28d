"""异常层次定义。

所有子包抛出的异常都继承自 :class:`WonderfulBraidError`，CLI 据此区分
用户输入错误（退出码 2）与内部不变量被破坏的情况。
"""

from __future__ import annotations


class WonderfulBraidError(Exception):
    """本包所有异常的基类。"""


class InvalidObjectError(WonderfulBraidError, ValueError):
    """对象本身不合法（Block 越界、划分不覆盖、置换不是双射等）。"""


class DomainError(WonderfulBraidError, ValueError):
    """输入合法但不满足操作的前置条件。"""


class IntegralityError(DomainError):
    """按 EGF 读取系数时 n!·c_n 不是整系数多项式。"""


class BijectionViolation(WonderfulBraidError, RuntimeError):
    """划分 → 嵌套集的重建过程出现不一致。"""


class ActionInvariantError(WonderfulBraidError, RuntimeError):
    """扩展作用的像不再是 laminar 族。"""

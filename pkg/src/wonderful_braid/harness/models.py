"""Pydantic 输出模型定义模块。

命令行的每种输出都对应一个模型，统一用 ``model_dump_json()`` 序列化，
保证同样的参数得到逐字节相同的输出。精确整数与有理数一律写成十进制字符串。
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field


# ---------------------------------------------------------------------------
# 多项式与级数
# ---------------------------------------------------------------------------

class PolyTerm(BaseModel):
    """一项 q^a y^b z^c · num/den。"""
    exp: list[int]
    num: str
    den: str


class PolyPayload(BaseModel):
    """QQ[q, y, z] 中的多项式，项按指数三元组字典序升序。"""
    vars: list[str] = Field(default_factory=lambda: ["q", "y", "z"])
    terms: list[PolyTerm] = Field(default_factory=list)


class SeriesPayload(BaseModel):
    """截断级数；``coeffs[n]`` 是 t^n 的普通系数。"""
    truncation_order: int
    coeffs: list[PolyPayload]
    convention: str = "ordinary"


# ---------------------------------------------------------------------------
# 组合对象
# ---------------------------------------------------------------------------

class NestedPayload(BaseModel):
    """嵌套集：块按规范序排列。"""
    n: int
    blocks: list[list[int]]


class PartitionPayload(BaseModel):
    """集合划分，可附带每块的标号。"""
    ground: int
    blocks: list[list[int]]
    labels: list[int] | None = None


class BasisPayload(BaseModel):
    """一个上同调基元素。"""
    support: list[Any]
    exponents: list[int]
    chain: list[list[list[int]]] = Field(default_factory=list)
    deltas: list[int] = Field(default_factory=list)
    qdeg: int


# ---------------------------------------------------------------------------
# 验证报告
# ---------------------------------------------------------------------------

class CheckResult(BaseModel):
    """一条检查的结果。"""
    name: str
    parameters: dict[str, Any] = Field(default_factory=dict)
    status: str
    expected: str = ""
    actual: str = ""


class VerificationReport(BaseModel):
    """全部检查按名称排序；``overall`` 当且仅当全部通过时为真。"""
    checks: list[CheckResult]
    overall: bool

    @classmethod
    def from_checks(cls, checks: list[CheckResult]) -> "VerificationReport":
        ordered = sorted(checks, key=lambda c: (c.name, sorted(c.parameters.items())))
        return cls(checks=ordered, overall=all(c.status == "pass" for c in ordered))

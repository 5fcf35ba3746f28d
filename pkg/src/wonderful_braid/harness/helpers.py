"""数据转换辅助函数模块。

本模块把领域对象（多项式、级数、嵌套集、划分、基元素）转换为
:mod:`wonderful_braid.harness.models` 中的输出模型或 pandas 表格，
并负责解析命令行传入的 JSON 对象（``-`` 表示从标准输入读取）。
"""

from __future__ import annotations

import json
import sys
from collections.abc import Iterable
from typing import Any, TextIO

import pandas as pd
from pydantic import BaseModel

from wonderful_braid.action.labelled import LabelledPartition
from wonderful_braid.cohomology.supermax import SupermaxBasisElement
from wonderful_braid.cohomology.yuzvinsky import AdmissibleMonomial
from wonderful_braid.combinatorics.blocks import Block, NestedSet, SetPartition
from wonderful_braid.errors import InvalidObjectError
from wonderful_braid.harness.models import (
    BasisPayload,
    NestedPayload,
    PartitionPayload,
    PolyPayload,
    PolyTerm,
    SeriesPayload,
)
from wonderful_braid.series.egf import EgfSeries
from wonderful_braid.series.poly import VAR_NAMES, MultiPoly, sorted_terms


# ---------------------------------------------------------------------------
# 领域对象 → 输出模型
# ---------------------------------------------------------------------------

def poly_payload(p: MultiPoly) -> PolyPayload:
    """多项式 → PolyPayload，系数写成 num/den 十进制字符串。

    示例::

        1 + 5q + q²  →  {"vars": ["q","y","z"], "terms": [
            {"exp": [0,0,0], "num": "1", "den": "1"},
            {"exp": [1,0,0], "num": "5", "den": "1"},
            {"exp": [2,0,0], "num": "1", "den": "1"}]}
    """
    terms = [
        PolyTerm(exp=list(exp), num=str(coeff.numerator), den=str(coeff.denominator))
        for exp, coeff in sorted_terms(p)
    ]
    return PolyPayload(vars=list(VAR_NAMES), terms=terms)


def series_payload(s: EgfSeries) -> SeriesPayload:
    return SeriesPayload(
        truncation_order=s.order,
        coeffs=[poly_payload(c) for c in s.coeffs],
        convention="ordinary",
    )


def nested_payload(s: NestedSet) -> NestedPayload:
    return NestedPayload(n=s.n, blocks=s.to_lists())


def partition_payload(p: SetPartition | LabelledPartition) -> PartitionPayload:
    if isinstance(p, LabelledPartition):
        return PartitionPayload(ground=p.ground, blocks=p.partition.to_lists(), labels=list(p.labels))
    return PartitionPayload(ground=p.ground, blocks=p.to_lists())


def _key_lists(key: Block | SetPartition) -> list:
    if isinstance(key, Block):
        return list(key.elements)
    return key.to_lists()


def basis_payload(element: AdmissibleMonomial | SupermaxBasisElement) -> BasisPayload:
    if isinstance(element, SupermaxBasisElement):
        eta = element.eta
        return BasisPayload(
            support=[_key_lists(k) for k in eta.support],
            exponents=[e for _, e in eta.exponents],
            chain=[link.to_lists() for link in element.chain],
            deltas=list(element.deltas),
            qdeg=element.degree,
        )
    return BasisPayload(
        support=[_key_lists(k) for k in element.support],
        exponents=[e for _, e in element.exponents],
        qdeg=element.degree,
    )


# ---------------------------------------------------------------------------
# 表格输出（--format csv）
# ---------------------------------------------------------------------------

def series_frame(s: EgfSeries) -> pd.DataFrame:
    """级数 → 每行一个 (n, 指数三元组) 的表格。"""
    rows = []
    for n, c in enumerate(s.coeffs):
        for (a, b, d), coeff in sorted_terms(c):
            rows.append({
                "n": n, "q": a, "y": b, "z": d,
                "num": str(coeff.numerator), "den": str(coeff.denominator),
            })
    return pd.DataFrame(rows, columns=["n", "q", "y", "z", "num", "den"])


def poly_frame(p: MultiPoly) -> pd.DataFrame:
    rows = [
        {"q": a, "y": b, "z": d, "num": str(c.numerator), "den": str(c.denominator)}
        for (a, b, d), c in sorted_terms(p)
    ]
    return pd.DataFrame(rows, columns=["q", "y", "z", "num", "den"])


def nested_frame(sets: Iterable[NestedSet]) -> pd.DataFrame:
    """每行一个嵌套集，块写成 JSON 数组。"""
    rows = [
        {"n": s.n, "size": len(s), "blocks": json.dumps(s.to_lists(), separators=(",", ":"))}
        for s in sets
    ]
    return pd.DataFrame(rows, columns=["n", "size", "blocks"])


# ---------------------------------------------------------------------------
# 输出与输入
# ---------------------------------------------------------------------------

def emit(model: BaseModel, out: TextIO | None = None) -> None:
    """输出一行 JSON。"""
    (out or sys.stdout).write(model.model_dump_json() + "\n")


def emit_frame(frame: pd.DataFrame, out: TextIO | None = None) -> None:
    (out or sys.stdout).write(frame.to_csv(index=False))


def load_json_arg(text: str, stdin: TextIO | None = None) -> Any:
    """解析命令行 JSON 参数；``-`` 表示从标准输入读取。"""
    if text == "-":
        text = (stdin or sys.stdin).read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidObjectError(f"cannot parse JSON input: {exc.msg}") from exc


def parse_nested(data: Any, n: int | None = None) -> NestedSet:
    """接受 ``[[...], ...]`` 或 ``{"n": n, "blocks": [[...], ...]}``。"""
    if isinstance(data, dict):
        n = data.get("n", n)
        data = data.get("blocks")
    if not isinstance(data, list) or n is None:
        raise InvalidObjectError("a nested set needs a block list and the ambient n")
    return NestedSet.of(data, n)


def parse_partition(data: Any, ground: int | None = None) -> SetPartition:
    """接受 ``[[...], ...]`` 或 ``{"ground": m, "blocks": [[...], ...]}``。"""
    if isinstance(data, dict):
        ground = data.get("ground", ground)
        data = data.get("blocks")
    if not isinstance(data, list):
        raise InvalidObjectError("a partition needs a block list")
    if ground is None:
        ground = max((x for b in data for x in b), default=0)
    return SetPartition.of(data, ground)

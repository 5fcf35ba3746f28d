"""三种模型的半次数 Poincaré 多项式（q 记录 H^{2i}）与 Euler 示性数。"""

from __future__ import annotations

from enum import Enum

from wonderful_braid.cohomology.supermax import iter_supermax_basis
from wonderful_braid.cohomology.yuzvinsky import BuildingSet, iter_yuz
from wonderful_braid.errors import DomainError
from wonderful_braid.series.poly import MultiPoly, as_integer, evaluate_q, q_poly_from_degrees


class Model(str, Enum):
    MINIMAL = "minimal"
    MAXIMAL = "maximal"
    SUPERMAXIMAL = "supermaximal"


def poincare(model: Model | str, n: int) -> MultiPoly:
    """按基枚举求 Poincaré 多项式；极大模型取背景 {V}。

    示例:
        ``poincare("minimal", 5)`` → q³ + 16q² + 16q + 1
    """
    model = Model(model)
    if n < 2:
        raise DomainError("n must be at least 2")
    if model is Model.SUPERMAXIMAL:
        return q_poly_from_degrees(e.degree for e in iter_supermax_basis(n))
    return q_poly_from_degrees(m.degree for m in iter_yuz(BuildingSet(model.value), None, n))


def euler_characteristic(model: Model | str, n: int, *, real: bool = False) -> int:
    """Poincaré 多项式在 q = 1（复 Euler 示性数）或 q = −1（实点）处的值。"""
    return as_integer(evaluate_q(poincare(model, n), -1 if real else 1))

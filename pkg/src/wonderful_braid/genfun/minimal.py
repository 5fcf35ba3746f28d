"""极小模型的 Poincaré 级数 Φ、ψ 与 2-相伴 Stirling 多项式 w_n。

Φ(t, q) = Σ_{n>=1} p_n(q) t^n/n!，p_n 为极小模型的 Poincaré 多项式（p_1 = 1 对应单点）。
Φ = e^λ − 1，其中 λ 满足 λ′ = 1 + λ′·R(λ)，
R(λ) = Σ_{m>=2} q[m−1]_q λ^m/m!（q[j]_q 指 q + ... + q^j，已约去 q − 1）。
把 λ′ 写成 1/(1 − R(λ)) 后逐阶迭代即可，全程在 ℤ[q] 中精确计算。
"""

from __future__ import annotations

import math
from functools import lru_cache

from sympy import QQ

from wonderful_braid.combinatorics.enumeration import stirling2_assoc
from wonderful_braid.errors import DomainError
from wonderful_braid.series.egf import (
    EgfSeries,
    series_add,
    series_exp,
    series_integrate,
    series_inverse,
    series_mul,
)
from wonderful_braid.series.poly import POLY_RING, MultiPoly, poly_from_terms, q_shifted_bracket


def _r_of(lam: EgfSeries) -> EgfSeries:
    acc = EgfSeries.zero(lam.order)
    power = lam
    for m in range(2, lam.order + 1):
        power = series_mul(power, lam)
        weight = q_shifted_bracket(m - 1) * QQ(1, math.factorial(m))
        acc = series_add(acc, power.scale(weight))
    return acc


@lru_cache(maxsize=None)
def lambda_series(order: int) -> EgfSeries:
    """λ(t, q)，截断到 t^order。"""
    if order < 1:
        raise DomainError("truncation order must be at least 1")
    lam = EgfSeries.zero(order)
    # 每轮迭代至少多确定一阶
    for _ in range(order):
        head = lam.truncate(order - 1)
        derivative = series_inverse(EgfSeries.one(order - 1) - _r_of(head))
        lam = series_integrate(derivative)
    return lam


@lru_cache(maxsize=None)
def phi_series(order: int) -> EgfSeries:
    """Φ = e^λ − 1。

    示例:
        t³/3! 的系数为 1 + q，t⁵/5! 的系数为 q³ + 16q² + 16q + 1。
    """
    lam = lambda_series(order)
    return series_exp(lam) - EgfSeries.one(order)


def w_poly(n: int) -> MultiPoly:
    """w_n(z) = Σ_{j=1}^{n−1} S₂(n+j−1, j) z^{j−1}。"""
    if n < 2:
        raise DomainError("w_n is defined for n >= 2")
    return poly_from_terms({(0, 0, j - 1): stirling2_assoc(n + j - 1, j) for j in range(1, n)})


def w_series(order: int) -> EgfSeries:
    """W(t, z) = Σ_{n>=2} w_n(z) t^n（普通生成函数）。"""
    coeffs = [POLY_RING.zero, POLY_RING.zero]
    coeffs.extend(w_poly(n) for n in range(2, order + 1))
    return EgfSeries.from_coefficients(coeffs, order)


@lru_cache(maxsize=None)
def psi_series(order: int) -> EgfSeries:
    """ψ(t, q, z) = Σ_{n>=2} p_n(q) w_n(z) t^n/n!。"""
    if order < 2:
        raise DomainError("psi needs truncation order >= 2")
    phi = phi_series(order)
    coeffs = [POLY_RING.zero, POLY_RING.zero]
    coeffs.extend(phi.coefficient(n) * w_poly(n) for n in range(2, order + 1))
    return EgfSeries.from_coefficients(coeffs, order)

"""四变量级数 ξ(t, q, y, z)：闭式公式与按边界层的直接枚举。

闭式：
    Γ = Σ_{ℓ>=1} y^ℓ (ψ^ℓ)^{(ℓ−1)} / ℓ!
    ξ = Φ + Σ_{ν>=1} ψ^{(ν)} Γ^ν / ν!

直接枚举：对 B(n−1) 中每个 |S| >= 2 的 S，累加
P(D_S)(q) · y^{|S|−1} · Σ_r N_{r,S} z^r，其中 N_{r,S} 是 B(n−1) 中包含 S
且基数为 |S| + r 的元素个数；再加上 Φ 的部分（S = {V}）。
q 一律按半次数记。
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from sympy import QQ

from wonderful_braid.cohomology.poincare import poincare
from wonderful_braid.cohomology.yuzvinsky import BuildingSet, iter_yuz
from wonderful_braid.combinatorics.blocks import NestedSet
from wonderful_braid.combinatorics.enumeration import enumerate_B, supersets
from wonderful_braid.errors import DomainError
from wonderful_braid.genfun.minimal import phi_series, psi_series
from wonderful_braid.series.egf import EgfSeries, series_add, series_ddt, series_mul, series_pow
from wonderful_braid.series.poly import POLY_RING, MultiPoly, poly_from_terms, q_poly_from_degrees

logger = logging.getLogger("wonderful_braid.genfun")


@lru_cache(maxsize=None)
def gamma_series(order: int) -> EgfSeries:
    """Γ(t, q, y, z)，截断到 t^order。"""
    psi = psi_series(order)
    acc = EgfSeries.zero(order)
    for l in range(1, order):
        # ψ^ℓ 在 t^{order+ℓ−1} 处仍精确（ψ 的赋值为 2），求导 ℓ−1 次后恰到 t^order
        power = series_pow(psi, l, order=order + l - 1)
        term = series_ddt(power, l - 1)
        weight = poly_from_terms({(0, l, 0): QQ(1, math.factorial(l))})
        acc = series_add(acc, term.scale(weight))
    return acc


@lru_cache(maxsize=None)
def xi_series(order: int) -> EgfSeries:
    """ξ 的闭式计算。

    示例:
        t³/3! 的系数为 3y + q + 1。
    """
    if order < 2:
        raise DomainError("xi needs truncation order >= 2")
    psi = psi_series(order)
    gamma = gamma_series(order)
    acc = phi_series(order)
    for nu in range(1, order // 2 + 1):
        gamma_power = series_pow(gamma, nu)
        term = series_mul(series_ddt(psi, nu), gamma_power, order=order)
        acc = series_add(acc, term.scale(QQ(1, math.factorial(nu))))
    return acc


# ---------------------------------------------------------------------------
# 直接枚举
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class XiTermRecord:
    """ξ 中 (S, r) 的一项：P(D_S) · N_{r,S} · y^{|S|−1} z^r。"""

    S: NestedSet
    r: int
    poincare_DS: MultiPoly
    N_rS: int

    @property
    def ell(self) -> int:
        return len(self.S) - 1

    def contribution(self) -> MultiPoly:
        return self.poincare_DS * self.N_rS * poly_from_terms({(0, self.ell, self.r): 1})


def stratum_poincare(s: NestedSet) -> MultiPoly:
    """边界层 D_S 的 Poincaré 多项式（以 S 为背景的 Yuzvinsky 基）。"""
    return q_poly_from_degrees(m.degree for m in iter_yuz(BuildingSet.MINIMAL, s, s.n))


def xi_terms(n: int) -> Iterator[XiTermRecord]:
    """B(n−1) 中所有 |S| >= 2 的 S 给出的 (S, r) 记录，按 S 的规范序。"""
    for s in enumerate_B(n):
        if len(s) < 2:
            continue
        sizes = Counter(len(x) - len(s) for x in supersets(s))
        p = stratum_poincare(s)
        for r in sorted(sizes):
            yield XiTermRecord(s, r, p, sizes[r])


def xi_direct_coefficient(n: int) -> MultiPoly:
    """ξ 中 t^n/n! 的系数（直接枚举）；n = 1 对应单点。"""
    if n < 1:
        raise DomainError("n must be positive")
    if n == 1:
        return POLY_RING.one
    acc = poincare("minimal", n)
    for record in xi_terms(n):
        acc += record.contribution()
    logger.debug("xi_direct n=%d 完成", n)
    return acc


def xi_direct(n_max: int) -> EgfSeries:
    """直接枚举得到的 ξ，截断到 t^{n_max}。"""
    coeffs = [POLY_RING.zero]
    coeffs.extend(xi_direct_coefficient(n) for n in range(1, n_max + 1))
    return EgfSeries.from_egf(coeffs, n_max)

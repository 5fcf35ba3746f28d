"""生成函数 Ψ(t, q, z)：乘积公式、按支撑分组的直接枚举，以及从 Ψ 读出 p_n。

Ψ 中 z^s t^k/k! 的系数汇总了所有支撑大小为 s、且 k − s = n − 1 的极小模型
基单项式；对固定 n 按 s 求和就得到 p_n(q)。
"""

from __future__ import annotations

import math
from collections import defaultdict
from functools import lru_cache

from sympy import QQ

from wonderful_braid.cohomology.yuzvinsky import BuildingSet, iter_yuz
from wonderful_braid.errors import DomainError
from wonderful_braid.series.egf import EgfSeries, series_exp
from wonderful_braid.series.poly import POLY_RING, MultiPoly, poly_from_terms, q_shifted_bracket, z_slice


@lru_cache(maxsize=None)
def bigpsi_formula(order: int) -> EgfSeries:
    """Ψ = e^t · Π_{i=3}^{order} exp(z (q + ... + q^{i−2}) t^i/i!)。"""
    if order < 1:
        raise DomainError("truncation order must be at least 1")
    exponent = [POLY_RING.zero, POLY_RING.one]
    for i in range(2, order + 1):
        weight = q_shifted_bracket(i - 2) * poly_from_terms({(0, 0, 1): 1})
        exponent.append(weight * QQ(1, math.factorial(i)))
    return series_exp(EgfSeries.from_coefficients(exponent, order))


def bigpsi_direct(order: int) -> EgfSeries:
    """逐个 n 枚举基单项式，按支撑大小 s 放到 z^s t^{n−1+s}/(n−1+s)! 上。"""
    if order < 1:
        raise DomainError("truncation order must be at least 1")
    egf: dict[int, MultiPoly] = defaultdict(lambda: POLY_RING.zero)
    egf[0] = POLY_RING.one
    for n in range(2, order + 2):
        budget = order - n + 1
        for m in iter_yuz(BuildingSet.MINIMAL, None, n, max_support=budget):
            s = len(m.exponents)
            egf[n - 1 + s] += poly_from_terms({(m.degree, 0, s): 1})
    return EgfSeries.from_egf([egf[k] for k in range(order + 1)], order)


def extract_poincare_from_bigpsi(n: int, psi: EgfSeries | None = None) -> MultiPoly:
    """p_n = Σ_s [z^s t^{n−1+s}/(n−1+s)!] Ψ。

    支撑最多 n − 1 个块，所以 Ψ 至少要截断到 t^{2n−2}。
    """
    if n < 2:
        raise DomainError("n must be at least 2")
    need = 2 * n - 2
    if psi is None:
        psi = bigpsi_formula(need)
    if psi.order < need:
        raise DomainError(f"Psi must be truncated at t^{need} or beyond, got t^{psi.order}")
    acc = POLY_RING.zero
    for s in range(n):
        acc += z_slice(psi.egf_coefficient(n - 1 + s), s)
    return acc

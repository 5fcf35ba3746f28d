"""由 ξ 通过单项式代换得到超极大模型的 Poincaré 级数与实点 Euler 示性数级数。"""

from __future__ import annotations

import math
from functools import lru_cache

from sympy import QQ

from wonderful_braid.errors import DomainError
from wonderful_braid.genfun.xi import xi_series
from wonderful_braid.series.egf import (
    EgfSeries,
    euler_secant,
    series_evaluate_q,
    substitute_monomials,
)
from wonderful_braid.series.poly import POLY_RING, MultiPoly, q_shifted_bracket


def y_substitution(l: int) -> MultiPoly:
    """y^ℓ ↦ (q^ℓ − q)/(q − 1) = q + ... + q^{ℓ−1}；y⁰ ↦ 1。"""
    if l == 0:
        return POLY_RING.one
    return q_shifted_bracket(l - 1)


def _compositions(r: int, smallest: int):
    """r 的全部有序分拆（各部分 >= smallest）。"""
    if r == 0:
        yield ()
        return
    for first in range(smallest, r + 1):
        for rest in _compositions(r - first, smallest):
            yield (first, *rest)


@lru_cache(maxsize=None)
def z_substitution(r: int) -> MultiPoly:
    """z^r ↦ Σ_{d_1+...+d_s=r} r!/(d_1!⋯d_s!) Π (q + ... + q^{d_i−1})。

    含 d_i = 1 的有序分拆贡献为零，故只取各部分 >= 2 的分拆。
    """
    if r < 0:
        raise DomainError("z exponent must be non-negative")
    acc = POLY_RING.zero
    for parts in _compositions(r, 2):
        term = POLY_RING(math.factorial(r))
        for d in parts:
            term = term * q_shifted_bracket(d - 1) * QQ(1, math.factorial(d))
        acc += term
    return acc


def z_substitution_chain(r: int) -> MultiPoly:
    """同一代换的链形式：对 0 = j_0 < j_1 < ... < j_s = r 求和
    Π C(r − j_{i−1}, j_i − j_{i−1}) · (q + ... + q^{j_i − j_{i−1} − 1})。"""
    if r < 0:
        raise DomainError("z exponent must be non-negative")

    @lru_cache(maxsize=None)
    def from_point(j: int) -> MultiPoly:
        if j == r:
            return POLY_RING.one
        acc = POLY_RING.zero
        for nxt in range(j + 1, r + 1):
            step = nxt - j
            acc += math.comb(r - j, step) * q_shifted_bracket(step - 1) * from_point(nxt)
        return acc

    return from_point(0)


def supermax_tables(order: int) -> tuple[dict[int, MultiPoly], dict[int, MultiPoly]]:
    return (
        {l: y_substitution(l) for l in range(order + 1)},
        {r: z_substitution(r) for r in range(order + 1)},
    )


def phi_super_series(order: int) -> EgfSeries:
    """超极大模型的 Poincaré 级数：对 ξ 施加 y、z 代换。

    示例:
        t⁴/4! 的系数为 q² + 20q + 1。
    """
    sub_y, sub_z = supermax_tables(order)
    return substitute_monomials(xi_series(order), sub_y, sub_z)


# ---------------------------------------------------------------------------
# 实点 Euler 示性数
# ---------------------------------------------------------------------------

def _reject_bare_z(s: EgfSeries) -> None:
    for n, c in enumerate(s.coeffs):
        for (_, l, r) in c.keys():
            if l == 0 and r > 0:
                raise DomainError(f"monomial y^0 z^{r} at t^{n} has no Euler substitution")


def euler_tables(order: int) -> tuple[dict[int, MultiPoly], dict[int, MultiPoly]]:
    sub_y = {0: POLY_RING.one}
    for k in range(1, order + 1):
        sub_y[k] = POLY_RING(-1 if k % 2 == 0 else 0)
    sub_z = {r: POLY_RING(euler_secant(r)) for r in range(order + 1)}
    return sub_y, sub_z


@lru_cache(maxsize=None)
def euler_real_series(order: int) -> EgfSeries:
    """令 q = −1，y^k ↦ −1（k 偶）或 0（k 奇），z^r ↦ E_r。"""
    xi = xi_series(order)
    _reject_bare_z(xi)
    sub_y, sub_z = euler_tables(order)
    return substitute_monomials(series_evaluate_q(xi, -1), sub_y, sub_z)

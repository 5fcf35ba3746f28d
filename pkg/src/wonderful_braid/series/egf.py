"""t 的截断幂级数，系数为 QQ[q, y, z] 中的多项式。

内部一律存储普通系数 c_n（t^n 的系数），EGF 约定只体现在读取接口
:meth:`EgfSeries.egf_coefficient` 上：返回 n!·c_n 并断言其为整系数。

截断语义：
    - 加减法、默认乘法的结果截断阶取两个操作数截断阶的较小值；
    - 乘法 / 乘方可以显式要求更高的阶，只要操作数的赋值（最低非零次数）
      保证该阶仍然精确，否则抛出 :class:`DomainError`；
    - 求导使截断阶减 1，积分使其加 1。
"""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass

from sympy import QQ

from wonderful_braid.errors import DomainError, IntegralityError
from wonderful_braid.series.poly import (
    POLY_RING,
    MultiPoly,
    as_integer,
    evaluate_q,
    is_integral,
    poly_from_terms,
)

DEFAULT_TRUNCATION_ORDER = 12


@dataclass(frozen=True)
class EgfSeries:
    """截断阶为 ``order`` 的级数 c_0 + c_1 t + ... + c_T t^T。"""

    coeffs: tuple[MultiPoly, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise DomainError("series needs at least the constant coefficient")

    # ---- 构造 ----

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[object], order: int) -> "EgfSeries":
        """按普通系数构造，不足 ``order`` 的部分补零，超出的部分截掉。"""
        out = []
        for n in range(order + 1):
            c = coeffs[n] if n < len(coeffs) else POLY_RING.zero
            out.append(POLY_RING(c))
        return cls(tuple(out))

    @classmethod
    def from_egf(cls, coeffs: Sequence[object], order: int) -> "EgfSeries":
        """按 EGF 系数构造：第 n 项为 ``coeffs[n]`` · t^n / n!。"""
        out = []
        for n in range(order + 1):
            c = coeffs[n] if n < len(coeffs) else 0
            out.append(POLY_RING(c) * QQ(1, math.factorial(n)))
        return cls(tuple(out))

    @classmethod
    def zero(cls, order: int) -> "EgfSeries":
        return cls.from_coefficients([], order)

    @classmethod
    def one(cls, order: int) -> "EgfSeries":
        return cls.from_coefficients([1], order)

    @classmethod
    def t(cls, order: int) -> "EgfSeries":
        return cls.from_coefficients([0, 1], order)

    # ---- 读取 ----

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """最低非零系数的次数；全零时为 ``order + 1``。"""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.order + 1

    def coefficient(self, n: int) -> MultiPoly:
        if n < 0 or n > self.order:
            raise DomainError(f"coefficient t^{n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def egf_coefficient(self, n: int) -> MultiPoly:
        """t^n/n! 的系数 n!·c_n，并断言整系数。"""
        value = self.coefficient(n) * math.factorial(n)
        if not is_integral(value):
            raise IntegralityError(f"n!*c_n is not integral at n={n}")
        return value

    def truncate(self, order: int) -> "EgfSeries":
        if order > self.order:
            raise DomainError(f"cannot raise truncation order {self.order} to {order}")
        return EgfSeries(self.coeffs[: order + 1])

    def map_coefficients(self, func: Callable[[MultiPoly], MultiPoly]) -> "EgfSeries":
        return EgfSeries(tuple(func(c) for c in self.coeffs))

    # ---- 运算符 ----

    def __add__(self, other: "EgfSeries") -> "EgfSeries":
        return series_add(self, other)

    def __sub__(self, other: "EgfSeries") -> "EgfSeries":
        return series_add(self, -other)

    def __neg__(self) -> "EgfSeries":
        return self.map_coefficients(lambda c: -c)

    def __mul__(self, other: "EgfSeries") -> "EgfSeries":
        return series_mul(self, other)

    def scale(self, factor: object) -> "EgfSeries":
        """乘以一个常数或多项式（不含 t）。"""
        return self.map_coefficients(lambda c: c * factor)


# ---------------------------------------------------------------------------
# 基本运算
# ---------------------------------------------------------------------------

def series_add(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    order = min(a.order, b.order)
    return EgfSeries(tuple(a.coeffs[n] + b.coeffs[n] for n in range(order + 1)))


def _max_product_order(a: EgfSeries, b: EgfSeries) -> int:
    return min(a.order + b.valuation, b.order + a.valuation)


def series_mul(a: EgfSeries, b: EgfSeries, order: int | None = None) -> EgfSeries:
    """截断乘法；``order`` 缺省时取 ``min(a.order, b.order)``。"""
    if order is None:
        order = min(a.order, b.order)
    elif order > _max_product_order(a, b):
        raise DomainError(f"product is not determined up to t^{order}")
    out = []
    for n in range(order + 1):
        acc = POLY_RING.zero
        for i in range(max(0, n - b.order), min(n, a.order) + 1):
            ai = a.coeffs[i]
            if ai:
                bj = b.coeffs[n - i]
                if bj:
                    acc += ai * bj
        out.append(acc)
    return EgfSeries(tuple(out))


def series_pow(s: EgfSeries, k: int, order: int | None = None) -> EgfSeries:
    """s^k，k >= 0；可用 ``order`` 请求高于 s.order 的精确阶。"""
    if k < 0:
        raise DomainError("negative powers are not supported")
    if order is None:
        order = s.order
    if k == 0:
        return EgfSeries.one(order)
    if order > s.order + (k - 1) * s.valuation:
        raise DomainError(f"power is not determined up to t^{order}")
    result = s
    for j in range(2, k + 1):
        # result = s^{j-1}，其精确阶至少为 s.order + (j-2)·val
        result = series_mul(result, s, min(order, s.order + (j - 1) * s.valuation))
    if result.order > order:
        result = result.truncate(order)
    return result


def series_exp(s: EgfSeries) -> EgfSeries:
    """exp(s)，要求常数项为零；递推 n·g_n = Σ_k k·s_k·g_{n-k}。"""
    if s.coeffs[0]:
        raise DomainError("exp needs a series with zero constant term")
    g = [POLY_RING.one]
    for n in range(1, s.order + 1):
        acc = POLY_RING.zero
        for k in range(1, n + 1):
            if s.coeffs[k]:
                acc += s.coeffs[k] * g[n - k] * k
        g.append(acc * QQ(1, n))
    return EgfSeries(tuple(g))


def series_ddt(s: EgfSeries, times: int = 1) -> EgfSeries:
    """逐项对 t 求导 ``times`` 次，每次截断阶减 1。"""
    out = s
    for _ in range(times):
        if out.order == 0:
            out = EgfSeries.zero(0)
            continue
        out = EgfSeries(tuple(out.coeffs[n + 1] * (n + 1) for n in range(out.order)))
    return out


def series_integrate(s: EgfSeries) -> EgfSeries:
    """常数项为 0 的原函数，截断阶加 1。"""
    out = [POLY_RING.zero]
    out.extend(c * QQ(1, n + 1) for n, c in enumerate(s.coeffs))
    return EgfSeries(tuple(out))


def series_inverse(s: EgfSeries) -> EgfSeries:
    """1/s，要求常数项是非零有理数。"""
    c0 = s.coeffs[0]
    if not c0 or set(c0.keys()) != {(0, 0, 0)}:
        raise DomainError("inverse needs a nonzero rational constant term")
    inv0 = QQ(1) / c0[(0, 0, 0)]
    b = [POLY_RING(inv0)]
    for n in range(1, s.order + 1):
        acc = POLY_RING.zero
        for k in range(1, n + 1):
            if s.coeffs[k]:
                acc += s.coeffs[k] * b[n - k]
        b.append(-acc * inv0)
    return EgfSeries(tuple(b))


# ---------------------------------------------------------------------------
# 单项式代换
# ---------------------------------------------------------------------------

def substitute_monomials(
    s: EgfSeries,
    sub_y: Mapping[int, MultiPoly],
    sub_z: Mapping[int, MultiPoly],
) -> EgfSeries:
    """q^a y^l z^r ↦ q^a · sub_y[l] · sub_z[r]；y⁰、z⁰ 未给出时映为 1。"""

    def lookup(table: Mapping[int, MultiPoly], exponent: int, name: str) -> MultiPoly:
        if exponent in table:
            return POLY_RING(table[exponent])
        if exponent == 0:
            return POLY_RING.one
        raise DomainError(f"no substitution given for {name}^{exponent}")

    def apply(c: MultiPoly) -> MultiPoly:
        acc = POLY_RING.zero
        for (a, l, r), coeff in c.items():
            acc += (
                poly_from_terms({(a, 0, 0): coeff})
                * lookup(sub_y, l, "y")
                * lookup(sub_z, r, "z")
            )
        return acc

    return s.map_coefficients(apply)


def series_evaluate_q(s: EgfSeries, value: int) -> EgfSeries:
    return s.map_coefficients(lambda c: evaluate_q(c, value))


# ---------------------------------------------------------------------------
# Euler 正割数
# ---------------------------------------------------------------------------

def euler_secant_series(order: int) -> EgfSeries:
    """2/(e^t + e^{-t}) = 1/cosh(t) 的截断级数。"""
    cosh = EgfSeries.from_egf([1 if n % 2 == 0 else 0 for n in range(order + 1)], order)
    return series_inverse(cosh)


def euler_secant(r: int) -> int:
    """E_r：1/cosh(t) 的 EGF 系数（E_0=1, E_2=-1, E_4=5，奇数下标为 0）。"""
    if r < 0:
        raise DomainError("euler_secant needs r >= 0")
    return as_integer(euler_secant_series(r).egf_coefficient(r))

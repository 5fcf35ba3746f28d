"""q, y, z 上的精确稀疏多项式。

多项式直接使用 sympy 的稀疏多项式环 ``QQ[q, y, z]``（``PolyElement``），
系数为任意精度有理数，不存储零系数。本模块只补充本项目反复用到的构造与
读取函数：q-模拟、按指数三元组排序的项列表、单变量求值、回文判定等。
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from wonderful_braid.errors import DomainError

# ── 多项式环 ──────────────────────────────────────────────────

POLY_RING, Q, Y, Z = ring("q,y,z", QQ)

MultiPoly = PolyElement
ExpTriple = tuple[int, int, int]

VAR_NAMES = ("q", "y", "z")


def poly_from_terms(terms: Mapping[ExpTriple, object]) -> MultiPoly:
    """由 ``{(a_q, a_y, a_z): 系数}`` 构造多项式，零系数自动丢弃。"""
    return POLY_RING.from_dict({tuple(exp): coeff for exp, coeff in terms.items()})


def monomial(a_q: int = 0, a_y: int = 0, a_z: int = 0, coeff: object = 1) -> MultiPoly:
    return poly_from_terms({(a_q, a_y, a_z): coeff})


def q_bracket(j: int) -> MultiPoly:
    """q-模拟 [j]_q = 1 + q + ... + q^{j-1}；j <= 0 时为 0。"""
    return poly_from_terms({(i, 0, 0): 1 for i in range(max(j, 0))})


def q_shifted_bracket(j: int) -> MultiPoly:
    """q·[j]_q = q + q² + ... + q^j，即 (q^{j+1} − q)/(q − 1)。"""
    return poly_from_terms({(i, 0, 0): 1 for i in range(1, max(j, 0) + 1)})


def q_poly(coefficients: Iterable[int]) -> MultiPoly:
    """按升幂系数列表构造 q 的多项式，如 ``[1, 5, 1]`` → 1 + 5q + q²。"""
    return poly_from_terms({(i, 0, 0): c for i, c in enumerate(coefficients) if c})


def q_poly_from_degrees(degrees: Iterable[int]) -> MultiPoly:
    """把一串 q-次数计数为多项式 Σ q^d（基元素按次数求和）。"""
    counts: dict[int, int] = {}
    for d in degrees:
        counts[d] = counts.get(d, 0) + 1
    return poly_from_terms({(d, 0, 0): c for d, c in counts.items()})


def sorted_terms(p: MultiPoly) -> list[tuple[ExpTriple, object]]:
    """按指数三元组字典序升序返回 ``(exp, coeff)`` 列表。"""
    return sorted(p.items())


def is_integral(p: MultiPoly) -> bool:
    return all(int(c.denominator) == 1 for c in p.values())


def q_coefficients(p: MultiPoly) -> list[int]:
    """只含 q 的整系数多项式 → 升幂系数列表（零多项式返回 ``[]``）。"""
    if any(exp[1] or exp[2] for exp in p.keys()):
        raise DomainError("polynomial involves y or z")
    if not p:
        return []
    top = max(exp[0] for exp in p.keys())
    out = [0] * (top + 1)
    for exp, coeff in p.items():
        out[exp[0]] = int(coeff)
    return out


def q_degree(p: MultiPoly) -> int:
    return max((exp[0] for exp in p.keys()), default=-1)


def is_palindromic(p: MultiPoly, degree: int) -> bool:
    """q 多项式是否满足 c_i = c_{degree-i} 且次数恰为 ``degree``。"""
    coeffs = q_coefficients(p)
    if len(coeffs) != degree + 1:
        return False
    return coeffs == coeffs[::-1]


def evaluate_q(p: MultiPoly, value: int) -> MultiPoly:
    """令 q = value，结果仍在同一个环中（q 的指数归零）。"""
    out: dict[ExpTriple, object] = {}
    for (a, b, c), coeff in p.items():
        key = (0, b, c)
        out[key] = out.get(key, QQ(0)) + coeff * QQ(value) ** a
    return poly_from_terms(out)


def z_slice(p: MultiPoly, s: int) -> MultiPoly:
    """取 z^s 的系数（q、y 的多项式）。"""
    return poly_from_terms({(a, b, 0): coeff for (a, b, c), coeff in p.items() if c == s})


def as_integer(p: MultiPoly) -> int:
    """常数多项式 → 整数。"""
    if not p:
        return 0
    if set(p.keys()) != {(0, 0, 0)}:
        raise DomainError("polynomial is not a constant")
    coeff = p[(0, 0, 0)]
    if int(coeff.denominator) != 1:
        raise DomainError("constant is not an integer")
    return int(coeff.numerator)


def format_poly(p: MultiPoly) -> str:
    """人类可读形式，用于日志与报告（不参与比较）。"""
    if not p:
        return "0"
    return str(p.as_expr())

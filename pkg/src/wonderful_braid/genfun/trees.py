"""无标号有根树上的求和恒等式。

每棵树 T 的权 Q(T) = Π_v y^{ν_v} ψ^{(ν_v)}（ν_v 为顶点 v 的孩子数），
|Aut(T)| 由各顶点处相同子树的置换累乘得到。恒等式为
    Σ_T Q(T)/|Aut(T)| = Σ_{n>=1} y^{n−1} (ψ^n)^{(n−1)} / n!。
m 个顶点的树只影响 t^{m+1} 及更高阶，因此截断到 t^T 时取 m <= T 足够。

树用"孩子子树的有序元组"编码：叶子是 ()，孩子元组按规范序排列。
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from functools import lru_cache
from itertools import combinations_with_replacement, product

from sympy import QQ
from sympy.utilities.iterables import partitions

from wonderful_braid.errors import DomainError
from wonderful_braid.genfun.minimal import psi_series
from wonderful_braid.series.egf import EgfSeries, series_add, series_ddt, series_mul, series_pow
from wonderful_braid.series.poly import POLY_RING, poly_from_terms

logger = logging.getLogger("wonderful_braid.genfun")

RootedTree = tuple


@lru_cache(maxsize=None)
def rooted_trees(m: int) -> tuple[RootedTree, ...]:
    """恰有 m 个顶点的全部无标号有根树。"""
    if m < 1:
        return ()
    if m == 1:
        return ((),)
    found: set[RootedTree] = set()
    for sizes in partitions(m - 1):
        groups = []
        for size, count in sizes.items():
            groups.append([
                combo for combo in combinations_with_replacement(rooted_trees(size), count)
            ])
        for choice in product(*groups):
            children = tuple(sorted(child for combo in choice for child in combo))
            found.add(children)
    return tuple(sorted(found))


def vertex_count(tree: RootedTree) -> int:
    return 1 + sum(vertex_count(child) for child in tree)


@lru_cache(maxsize=None)
def automorphisms(tree: RootedTree) -> int:
    """|Aut(T)| = Π_v Π_{同构子树类} (重数)! · |Aut(子树)|^重数。"""
    total = 1
    for child, count in Counter(tree).items():
        total *= math.factorial(count) * automorphisms(child) ** count
    return total


def tree_weight(tree: RootedTree, psi: EgfSeries, order: int) -> EgfSeries:
    """Q(T)，截断到 t^order；``psi`` 的截断阶需不低于 order 加最大孩子数。"""
    nu = len(tree)
    factor = series_ddt(psi, nu).truncate(order)
    factor = factor.scale(poly_from_terms({(0, nu, 0): 1}))
    for child in tree:
        factor = series_mul(factor, tree_weight(child, psi, order))
    return factor


def tree_sum(order: int) -> EgfSeries:
    """Σ_T Q(T)/|Aut(T)|，T 取顶点数 <= order 的全部有根树。"""
    psi = psi_series(2 * order)
    acc = EgfSeries.zero(order)
    for m in range(1, order + 1):
        for tree in rooted_trees(m):
            weight = tree_weight(tree, psi, order)
            acc = series_add(acc, weight.scale(QQ(1, automorphisms(tree))))
    return acc


def tree_sum_target(order: int) -> EgfSeries:
    """Σ_{n>=1} y^{n−1} (ψ^n)^{(n−1)} / n!，截断到 t^order。"""
    psi = psi_series(2 * order)
    acc = EgfSeries.zero(order)
    for n in range(1, order + 1):
        power = series_pow(psi, n, order=order + n - 1)
        term = series_ddt(power, n - 1)
        weight = poly_from_terms({(0, n - 1, 0): QQ(1, math.factorial(n))})
        acc = series_add(acc, term.scale(weight))
    return acc


def tree_sum_check(order: int) -> bool:
    """树求和与闭式在 t^order 之内逐项相等。"""
    if order < 2:
        raise DomainError("tree sum check needs order >= 2")
    ok = tree_sum(order) == tree_sum_target(order)
    if not ok:
        logger.warning("树求和恒等式在 t^%d 之内不成立", order)
    return ok

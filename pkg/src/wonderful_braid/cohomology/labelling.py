"""极小模型基单项式与带标号划分之间的对应，以及两种作用下的轨道计数。

单项式 m_f（背景 {V}）对应嵌套集 X = supp f ∪ {V}；对 X 施加划分双射，
每块的标号取对应顶点的指数（c_V 不出现时 V 块标号为 0）。
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable

from wonderful_braid.action.extended import act_block
from wonderful_braid.action.labelled import LabelledPartition, act_labelled_partition
from wonderful_braid.action.orbits import OrbitMode, orbits
from wonderful_braid.action.permutation import ExtPermutation, adjacent_transpositions
from wonderful_braid.cohomology.yuzvinsky import AdmissibleMonomial, BuildingSet, key_order
from wonderful_braid.combinatorics.bijection import labelled_tree
from wonderful_braid.combinatorics.blocks import Block, NestedSet
from wonderful_braid.errors import DomainError

logger = logging.getLogger("wonderful_braid.cohomology")


def _require_minimal_root(m: AdmissibleMonomial) -> None:
    if m.tag is not BuildingSet.MINIMAL or len(m.background) != 1:
        raise DomainError("labelled partitions are defined for minimal monomials over {V}")


def monomial_to_labelled_partition(m: AdmissibleMonomial) -> LabelledPartition:
    """例：n=7 时 c_{1235}^2 c_{467} ↦ {1,2,3,5}^2 {4,6,7}^1 {8,9}^0。"""
    _require_minimal_root(m)
    x = NestedSet(frozenset(m.support) | {Block.full(m.n)}, m.n)
    tree = labelled_tree(x)
    pairs = [(vertex.children, m.exponent_of(block)) for block, vertex in tree.items()]
    return LabelledPartition.from_pairs(pairs, m.n + len(x) - 1)


def act_monomial(sigma: ExtPermutation, m: AdmissibleMonomial) -> AdmissibleMonomial:
    """固定 0 的置换对叶子重新标号，指数随块携带。"""
    _require_minimal_root(m)
    if not sigma.fixes(0):
        raise DomainError("the natural action uses permutations fixing 0")
    moved = sorted(((act_block(sigma, b), e) for b, e in m.exponents), key=lambda item: key_order(item[0]))
    return AdmissibleMonomial(tuple(moved), m.tag, m.background, m.n)


def basis_orbit_count(
    monomials: Iterable[AdmissibleMonomial],
    n: int,
    mode: OrbitMode | str,
) -> int:
    """一组（在相应作用下封闭的）基单项式的轨道数。

    Args:
        monomials: 极小模型、背景 {V} 的单项式。
        n: 基集大小。
        mode: ``natural`` 在单项式上重新标号叶子；``extended`` 让 S_n
            （固定 n+1.. 的子群）作用在带标号划分上；``full`` 让整个
            S_{n+k}（存在零标号时为固定 n+k 的 S_{n+k−1}）作用在带标号划分上。

    Returns:
        轨道个数。
    """
    mode = OrbitMode(mode)
    items = list(monomials)
    if any(m.n != n for m in items):
        raise DomainError(f"monomials do not all live over 1..{n}")

    if mode is OrbitMode.NATURAL:
        space = sorted(set(items), key=lambda m: m.sort_key)
        count = len(orbits(space, adjacent_transpositions(n, first=1), act_monomial))
        logger.debug("basis_orbit_count(n=%d, natural) = %d", n, count)
        return count

    by_ground: dict[int, set[LabelledPartition]] = defaultdict(set)
    for m in items:
        lp = monomial_to_labelled_partition(m)
        by_ground[lp.ground].add(lp)

    count = 0
    for ground, found in sorted(by_ground.items()):
        space = sorted(found, key=lambda lp: (lp.partition.blocks, lp.labels))
        # 存在零标号时 m 必须固定
        top = ground - 1 if any(lp.has_zero for lp in space) else ground
        last = min(n, top) if mode is OrbitMode.EXTENDED else top
        gens = adjacent_transpositions(ground, first=1, last=last)
        count += len(orbits(space, gens, act_labelled_partition))
    logger.debug("basis_orbit_count(n=%d, %s) = %d", n, mode.value, count)
    return count

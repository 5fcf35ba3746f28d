"""F^k(B(n−1)) 上的轨道计数。

三种模式：
    - ``natural``：S_n 在 {1..n} 上直接重新标号；
    - ``extended``：S_n 作为固定 n+1..n+k 的子群嵌入 S_{n+k}，经划分双射作用；
    - ``full``：整个 S_{n+k} 经划分双射作用，轨道恰由块大小的多重集区分。

轨道由生成元 BFS 得到；Burnside 引理（全群不动点平均数）作为独立核对。
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Hashable, Iterable, Sequence
from enum import Enum
from typing import TypeVar

from wonderful_braid.action.extended import act_nested
from wonderful_braid.action.permutation import ExtPermutation, adjacent_transpositions, symmetric_group
from wonderful_braid.combinatorics.blocks import NestedSet, SetPartition
from wonderful_braid.combinatorics.bijection import nested_to_partition
from wonderful_braid.combinatorics.enumeration import enumerate_B
from wonderful_braid.errors import ActionInvariantError, DomainError

logger = logging.getLogger("wonderful_braid.action")

T = TypeVar("T", bound=Hashable)


class OrbitMode(str, Enum):
    NATURAL = "natural"
    EXTENDED = "extended"
    FULL = "full"


def act_partition(pi: ExtPermutation, p: SetPartition) -> SetPartition:
    if pi.n != p.ground:
        pi = pi.extend(p.ground)
    return SetPartition.of(((pi(x) for x in b) for b in p.blocks), p.ground)


def orbits(
    space: Sequence[T],
    generators: Iterable[ExtPermutation],
    act: Callable[[ExtPermutation, T], T],
) -> list[list[T]]:
    """BFS 划分轨道；轨道内保持 ``space`` 中的相对顺序，代表元是第一个。"""
    gens = list(generators)
    position = {x: i for i, x in enumerate(space)}
    assigned: set[T] = set()
    out: list[list[T]] = []
    for x in space:
        if x in assigned:
            continue
        assigned.add(x)
        orbit = [x]
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = act(g, y)
                    if z not in position:
                        raise ActionInvariantError("group action leaves the given space")
                    if z not in assigned:
                        assigned.add(z)
                        orbit.append(z)
                        nxt.append(z)
            frontier = nxt
        orbit.sort(key=position.__getitem__)
        out.append(orbit)
    return out


def burnside_count(
    space: Iterable[T],
    group: Iterable[ExtPermutation],
    act: Callable[[ExtPermutation, T], T],
) -> int:
    """轨道数 = 群元素不动点个数的平均值。"""
    items = list(space)
    total = 0
    order = 0
    for g in group:
        order += 1
        total += sum(1 for x in items if act(g, x) == x)
    if total % order:
        raise ActionInvariantError("fixed point total is not divisible by the group order")
    return total // order


def _space(k: int, n: int, mode: OrbitMode):
    nested = enumerate_B(n, size=k + 1)
    if mode is OrbitMode.NATURAL:
        return nested, act_nested
    return [nested_to_partition(s) for s in nested], act_partition


def _generators(k: int, n: int, mode: OrbitMode) -> list[ExtPermutation]:
    if mode is OrbitMode.NATURAL:
        return adjacent_transpositions(n, first=1)
    if mode is OrbitMode.EXTENDED:
        return adjacent_transpositions(n + k, first=1, last=n)
    return adjacent_transpositions(n + k, first=1)


def orbit_representatives(k: int, n: int, mode: OrbitMode | str) -> list[NestedSet | SetPartition]:
    mode = OrbitMode(mode)
    if k < 1 or n < 2:
        raise DomainError("orbit counting needs k >= 1 and n >= 2")
    space, act = _space(k, n, mode)
    found = orbits(space, _generators(k, n, mode), act)
    return [orbit[0] for orbit in found]


def block_shape(p: SetPartition, n: int, mode: OrbitMode | str) -> tuple:
    """划分在给定模式下的完全轨道不变量。

    ``full`` 取块大小的多重集；``extended`` 取每块 (落在 1..n 的元素个数,
    大于 n 的元素) 的多重集，后者在固定 n+1.. 的 S_n 下恰好区分轨道。
    """
    mode = OrbitMode(mode)
    if mode is OrbitMode.FULL:
        return tuple(sorted(len(b) for b in p.blocks))
    if mode is OrbitMode.EXTENDED:
        return tuple(sorted((sum(1 for x in b if x <= n), tuple(x for x in b if x > n)) for b in p.blocks))
    raise DomainError("block shapes are defined for partitions only")


def orbit_count(k: int, n: int, mode: OrbitMode | str) -> int:
    mode = OrbitMode(mode)
    reps = orbit_representatives(k, n, mode)
    if mode is not OrbitMode.NATURAL:
        space, _ = _space(k, n, mode)
        shapes = {block_shape(p, n, mode) for p in space}
        if len(shapes) != len(reps):
            raise ActionInvariantError(
                f"{len(reps)} orbits but {len(shapes)} block shapes for k={k}, n={n}, {mode.value}"
            )
    logger.debug("orbit_count(k=%d, n=%d, %s) = %d", k, n, mode.value, len(reps))
    return len(reps)


def orbit_count_burnside(k: int, n: int, mode: OrbitMode | str) -> int:
    """用 Burnside 引理独立计算同一轨道数（仅适合 n+k 较小的情形）。"""
    mode = OrbitMode(mode)
    space, act = _space(k, n, mode)
    if mode is OrbitMode.NATURAL:
        group = symmetric_group(n, n)
    elif mode is OrbitMode.EXTENDED:
        group = symmetric_group(n, n + k)
    else:
        group = symmetric_group(n + k, n + k)
    return burnside_count(space, group, act)

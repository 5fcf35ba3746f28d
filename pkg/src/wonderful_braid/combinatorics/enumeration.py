"""B(n−1)、C-元素与链的枚举。

laminar 族通过"递归森林构造"生成：对一个基集取其集合划分（至少两部分），
大小 >= 2 的部分就是极大子块，再对每个子块递归。这样每个族恰好生成一次，
不会在反链上做指数级的无效过滤。

生成器支持两个剪枝参数：
    - ``max_blocks``：除 V 之外最多的块数；
    - ``min_children``：每个非 V 块在带叶子的树中至少要有的孩子数
      （Yuzvinsky 单项式要求 d_A >= 2，即至少 3 个孩子）。
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from functools import lru_cache

from sympy.utilities.iterables import multiset_partitions

from wonderful_braid.combinatorics.blocks import (
    Block,
    CChain,
    NestedSet,
    SetPartition,
)
from wonderful_braid.errors import DomainError

logger = logging.getLogger("wonderful_braid.combinatorics")

_UNBOUNDED = 1 << 30


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _mask_of(items) -> int:
    mask = 0
    for x in items:
        mask |= 1 << x
    return mask


@lru_cache(maxsize=None)
def _families_inside(
    ground: int, budget: int, root_min: int, min_children: int
) -> tuple[tuple[int, ...], ...]:
    """``ground`` 真子块构成的 laminar 族（位掩码元组）。

    ``ground`` 自身的孩子数 >= root_min，族内每块的孩子数 >= min_children，
    块数不超过 ``budget``。
    """
    elements = _bits(ground)
    need = max(2, root_min)
    if len(elements) < need:
        return ()
    out: list[tuple[int, ...]] = []
    for partition in multiset_partitions(elements):
        if len(partition) < need:
            continue
        big = [_mask_of(part) for part in partition if len(part) >= 2]
        if len(big) > budget:
            continue
        out.extend(_combine(tuple(big), budget, min_children))
    return tuple(out)


def _combine(big: tuple[int, ...], budget: int, min_children: int) -> Iterator[tuple[int, ...]]:
    if not big:
        yield ()
        return
    first, rest = big[0], big[1:]
    for inner in _families_inside(first, budget - len(big), min_children, min_children):
        for tail in _combine(rest, budget - 1 - len(inner), min_children):
            yield (first, *inner, *tail)


def iter_nested(
    n: int,
    *,
    max_blocks: int | None = None,
    min_children: int = 2,
    root_min_children: int = 2,
) -> Iterator[NestedSet]:
    """生成含 V 的 laminar 族（顺序不保证）。

    Args:
        n: 基集 {1..n} 的大小，n >= 2。
        max_blocks: 除 V 之外块数上限，None 表示不限。
        min_children: 非 V 块在带叶子树中的最少孩子数。
        root_min_children: V 的最少孩子数。
    """
    if n < 2:
        raise DomainError("n must be at least 2")
    budget = _UNBOUNDED if max_blocks is None else max_blocks
    full = Block.full(n)
    for family in _families_inside(full.mask, budget, root_min_children, min_children):
        yield NestedSet(frozenset({full, *(Block.from_mask(m, n) for m in family)}), n)


def enumerate_B(n: int, size: int | None = None) -> list[NestedSet]:
    """B(n−1) 全体（或 ``size`` = k+1 时的 F^k 层），按规范序排列。"""
    if n < 2:
        raise DomainError("n must be at least 2")
    if size is None:
        found = list(iter_nested(n))
    else:
        if size < 1:
            return []
        found = [s for s in iter_nested(n, max_blocks=size - 1) if len(s) == size]
    found.sort(key=lambda s: s.sort_key)
    logger.debug("enumerate_B(n=%d, size=%s) -> %d", n, size, len(found))
    return found


@lru_cache(maxsize=None)
def all_blocks(n: int) -> tuple[Block, ...]:
    """{1..n} 上除 V 以外的全部 Block，按规范序。"""
    full = (1 << (n + 1)) - 2
    blocks = [
        Block.from_mask(m << 1, n)
        for m in range(1, 1 << n)
        if bin(m).count("1") >= 2 and (m << 1) != full
    ]
    return tuple(sorted(blocks, key=lambda b: b.sort_key))


@lru_cache(maxsize=None)
def supersets(s: NestedSet) -> tuple[NestedSet, ...]:
    """B(n−1) 中包含 s 的全部元素（含 s 自身），按规范序。

    先取与 s 的每一块都相容的候选块，再在候选块上枚举两两相容的子集（团）。
    """
    s.require_root()
    n = s.n
    own = {b.mask for b in s.blocks}
    candidates = [
        b for b in all_blocks(n)
        if b.mask not in own and all(b.compatible(c) for c in s.blocks)
    ]
    found: list[NestedSet] = []

    def extend(start: int, chosen: list[Block]) -> None:
        found.append(NestedSet(s.blocks | frozenset(chosen), n))
        for i in range(start, len(candidates)):
            b = candidates[i]
            if all(b.compatible(c) for c in chosen):
                chosen.append(b)
                extend(i + 1, chosen)
                chosen.pop()

    extend(0, [])
    found.sort(key=lambda x: x.sort_key)
    return tuple(found)


# ---------------------------------------------------------------------------
# C-元素与 C-链
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def c_elements(n: int) -> tuple[SetPartition, ...]:
    """{1..n} 的全部 C-元素（至少一块大小 >= 2 的划分，含 V），按维数降序、再按块排序。"""
    if n < 2:
        raise DomainError("n must be at least 2")
    parts = [
        SetPartition.of(p, n)
        for p in multiset_partitions(list(range(1, n + 1)))
    ]
    parts = [p for p in parts if p.is_c_element]
    parts.sort(key=lambda p: (-p.dim, p.blocks))
    return tuple(parts)


def iter_cchains(n: int, max_length: int | None = None) -> Iterator[CChain]:
    """全部 C-链 V ⊋ B_1 ⊋ ... ⊋ B_r（r >= 0）。"""
    below_v = [p for p in c_elements(n) if not p.is_single_block]
    limit = _UNBOUNDED if max_length is None else max_length

    def walk(chain: tuple[SetPartition, ...]) -> Iterator[CChain]:
        yield CChain(chain, n)
        if len(chain) >= limit:
            return
        candidates = below_v if not chain else [p for p in below_v if p.strictly_refines(chain[-1])]
        for p in candidates:
            yield from walk((*chain, p))

    yield from walk(())


def stirling2_assoc(m: int, j: int) -> int:
    """|P_2(m, j)|：{1..m} 分成 j 块且每块大小 >= 2 的划分数。

    S(m, j) = j·S(m−1, j) + (m−1)·S(m−2, j−1)，S(0, 0) = 1。
    """
    if m < 0 or j < 0:
        return 0
    return _stirling2_assoc(m, j)


@lru_cache(maxsize=None)
def _stirling2_assoc(m: int, j: int) -> int:
    if m == 0 and j == 0:
        return 1
    if m <= 0 or j <= 0:
        return 0
    return j * _stirling2_assoc(m - 1, j) + (m - 1) * _stirling2_assoc(m - 2, j - 1)

"""B(n−1) 中建筑子集的闭包计算。

从种子出发反复应用两条规则直到不动点：
    1. 轨道规则：对每个元素施加 S_{n+1} 的相邻对换生成元；
    2. 并规则：X ∩ Y ⊋ {V} 且 X ∪ Y laminar 时加入 X ∪ Y。

最小元 {V} 始终属于闭包。``allow_trivial_meet=True`` 时并规则对
X ∩ Y = {V} 的对子也生效。
"""

from __future__ import annotations

import logging
from collections import defaultdict, deque
from collections.abc import Iterable

from wonderful_braid.action.extended import act_nested
from wonderful_braid.action.permutation import adjacent_transpositions
from wonderful_braid.combinatorics.blocks import Block, CChain, NestedSet, laminar_masks
from wonderful_braid.combinatorics.enumeration import c_elements
from wonderful_braid.combinatorics.trees import phi_embed

logger = logging.getLogger("wonderful_braid.closure")

# 每处理这么多个元素打一条进度日志
_PROGRESS_EVERY = 500


def closure_seed(n: int) -> frozenset[NestedSet]:
    """φ(F¹(N′(C)))：每个 C-元素 B ≠ V 给出 {V} ∪ (B 的不可约项)。"""
    seed = set()
    for part in c_elements(n):
        if part.is_single_block:
            continue
        seed.add(phi_embed(CChain((part,), n)).links[-1])
    return frozenset(seed)


def building_closure(
    seed: Iterable[NestedSet],
    n: int,
    *,
    allow_trivial_meet: bool = False,
) -> frozenset[NestedSet]:
    generators = adjacent_transpositions(n)
    members: set[NestedSet] = set()
    seen: set[frozenset[Block]] = set()
    by_block: dict[Block, set[NestedSet]] = defaultdict(set)
    queue: deque[NestedSet] = deque()

    def add(x: NestedSet) -> None:
        if x.blocks in seen:
            return
        seen.add(x.blocks)
        members.add(x)
        for b in x.blocks:
            if not b.is_full:
                by_block[b].add(x)
        queue.append(x)

    add(NestedSet.root(n))
    for s in seed:
        s.require_root()
        add(s)

    processed = 0
    while queue:
        x = queue.popleft()
        for g in generators:
            add(act_nested(g, x))

        if allow_trivial_meet:
            partners = list(members)
        else:
            partners = list(set().union(*(by_block[b] for b in x.blocks if not b.is_full)))
        for y in partners:
            union = x.blocks | y.blocks
            if union in seen:
                continue
            own = x.blocks - y.blocks
            other = y.blocks - x.blocks
            if all(laminar_masks((a.mask, b.mask)) for a in own for b in other):
                add(NestedSet(union, n))

        processed += 1
        if processed % _PROGRESS_EVERY == 0:
            logger.info("闭包计算中: 已处理 %d, 当前 %d, 待处理 %d", processed, len(members), len(queue))

    logger.info("闭包完成: n=%d, 共 %d 个嵌套集", n, len(members))
    return frozenset(members)

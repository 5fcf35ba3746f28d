"""嵌套集的 Hasse 树：孩子关系、层级、深度，以及 C-链到嵌套链的嵌入。

两种层级约定并存：
    - 无叶约定（用于 depth）：极小块位于第 0 层；
    - 带叶约定（用于标号双射）：叶子 1..n 位于第 0 层，内部顶点层级 =
      1 + 孩子层级最大值。两者恰好相差 1。
"""

from __future__ import annotations

from wonderful_braid.combinatorics.blocks import (
    Block,
    CChain,
    ChainNested,
    NestedSet,
    decompose_irreducibles,
)


def forest(s: NestedSet) -> dict[Block, tuple[Block, ...]]:
    """每个块的孩子块（严格包含于它的极大块），孩子按规范序。"""
    ordered = sorted(s.blocks, key=lambda b: (b.size, b.sort_key))
    parent: dict[Block, Block | None] = {}
    for i, b in enumerate(ordered):
        # 按大小升序，第一个严格包含 b 的块就是最小的上界
        parent[b] = next((c for c in ordered[i + 1:] if b.is_proper_subset(c)), None)
    children: dict[Block, list[Block]] = {b: [] for b in ordered}
    for b, p in parent.items():
        if p is not None:
            children[p].append(b)
    return {b: tuple(sorted(cs, key=lambda c: c.sort_key)) for b, cs in children.items()}


def uncovered_leaves(block: Block, kids: tuple[Block, ...]) -> tuple[int, ...]:
    """块中不属于任何孩子块的元素（带叶树中的叶子孩子）。"""
    covered = 0
    for c in kids:
        covered |= c.mask
    return tuple(x for x in block.elements if not covered >> x & 1)


def child_count(block: Block, kids: tuple[Block, ...]) -> int:
    """带叶树中的孩子数。"""
    return len(kids) + len(uncovered_leaves(block, kids))


def levels(s: NestedSet) -> dict[Block, int]:
    """无叶约定的层级：极小块为 0。"""
    kids = forest(s)
    out: dict[Block, int] = {}
    for b in sorted(s.blocks, key=lambda x: x.size):
        out[b] = 1 + max((out[c] for c in kids[b]), default=-1)
    return out


def depth(s: NestedSet) -> int:
    """V 所在的层级（无叶约定）；{V} 的深度为 0。"""
    s.require_root()
    return levels(s)[Block.full(s.n)]


def phi_embed(c: CChain) -> ChainNested:
    """C-链 V ⊋ B_1 ⊋ ... ⊋ B_r ↦ {V} ∪ (B_r, ..., B_{r−i+1} 的不可约项) 组成的链。"""
    n = c.n
    root = Block.full(n)
    links: list[NestedSet] = []
    acc: set[Block] = {root}
    for part in reversed(c.links):
        acc |= decompose_irreducibles(part)
        links.append(NestedSet(frozenset(acc), n))
    return ChainNested(tuple(links), n)

"""F^k(B(n−1)) 与 P_2(n+k, k+1) 之间的标号树双射。

正向：把叶子 1..n 接到 Hasse 树上，按带叶层级逐层给内部顶点编号
n+1, n+2, ...（同层按块的最小元排序），根 V 得到最后一个标号 n+k+1；
每个内部顶点输出其孩子标号组成的集合，得到 k+1 块的划分。

逆向：逐层重建。一个划分块在其全部成员都已有标号时"可放置"；可放置块中
孩子层级最大值最小的那些构成下一层，按所代表顶点的最小叶子后代排序后依次
取得下一批标号。
"""

from __future__ import annotations

from dataclasses import dataclass

from wonderful_braid.combinatorics.blocks import Block, NestedSet, SetPartition
from wonderful_braid.combinatorics.trees import forest, uncovered_leaves
from wonderful_braid.errors import BijectionViolation, DomainError, InvalidObjectError


@dataclass(frozen=True)
class LabelledVertex:
    """标号树中的内部顶点：自身标号与孩子标号集合。"""

    label: int
    children: tuple[int, ...]


def labelled_tree(s: NestedSet) -> dict[Block, LabelledVertex]:
    """给 s 的每个块分配标号及孩子标号（带叶约定）。"""
    s.require_root()
    n = s.n
    kids = forest(s)
    level: dict[Block, int] = {}
    for b in sorted(s.blocks, key=lambda x: x.size):
        level[b] = 1 + max((level[c] for c in kids[b]), default=0)
    order = sorted(s.blocks, key=lambda b: (level[b], b.elements[0]))
    label = {b: n + 1 + i for i, b in enumerate(order)}
    return {
        b: LabelledVertex(
            label[b],
            tuple(sorted([label[c] for c in kids[b]] + list(uncovered_leaves(b, kids[b])))),
        )
        for b in order
    }


def nested_to_partition(s: NestedSet) -> SetPartition:
    """s ∈ F^k(B(n−1)) ↦ {1..n+k} 的 k+1 块划分。"""
    tree = labelled_tree(s)
    return SetPartition.of((v.children for v in tree.values()), s.n + len(s) - 1)


def partition_to_nested(p: SetPartition, n: int) -> NestedSet:
    """nested_to_partition 的逆映射。"""
    if n < 2:
        raise DomainError("n must be at least 2")
    if not p.blocks:
        raise DomainError("partition has no blocks")
    k = len(p.blocks) - 1
    if p.ground != n + k:
        raise DomainError(f"ground {p.ground} differs from n+k = {n + k}")
    if any(len(b) < 2 for b in p.blocks):
        raise DomainError("every block must have at least 2 elements")

    # 标号 → (叶子集合位掩码, 带叶层级)
    known: dict[int, tuple[int, int]] = {x: (1 << x, 0) for x in range(1, n + 1)}
    remaining = list(p.blocks)
    leaf_sets: list[int] = []
    next_label = n + 1
    while remaining:
        placeable = [b for b in remaining if all(x in known for x in b)]
        if not placeable:
            raise BijectionViolation(f"no placeable block among {remaining}")
        block_level = {b: 1 + max(known[x][1] for x in b) for b in placeable}
        lowest = min(block_level.values())
        layer = []
        for b in placeable:
            if block_level[b] == lowest:
                leaves = 0
                for x in b:
                    leaves |= known[x][0]
                layer.append((leaves, b))
        layer.sort(key=lambda item: (item[0] & -item[0]).bit_length())
        for leaves, b in layer:
            known[next_label] = (leaves, lowest)
            leaf_sets.append(leaves)
            next_label += 1
            remaining.remove(b)

    full = (1 << (n + 1)) - 2
    if leaf_sets[-1] != full:
        raise BijectionViolation("last reconstructed vertex is not V")
    try:
        s = NestedSet(frozenset(Block.from_mask(m, n) for m in leaf_sets), n)
    except InvalidObjectError as exc:
        raise BijectionViolation(f"reconstruction is not laminar: {exc}") from exc
    if len(s) != k + 1 or nested_to_partition(s) != p:
        raise BijectionViolation(f"reconstruction of {p.to_lists()} does not round-trip")
    return s

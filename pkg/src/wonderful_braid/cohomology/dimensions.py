"""子空间维数与 Yuzvinsky 上界 d_{H,B}^S。

Block A 对应的子空间维数是 |A| − 1；C-元素（划分）的维数是 Σ(|块| − 1)。
若干子空间之和由根系的连通性决定：把有交的块合并为连通分支，
dim = Σ_分支 (|分支| − 1)。
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable

from wonderful_braid.combinatorics.blocks import Block, CChain, NestedSet, SetPartition
from wonderful_braid.errors import DomainError

Key = Block | SetPartition


class UnionFind:
    def __init__(self, items: Iterable[Hashable] = ()):
        self.parent: dict[Hashable, Hashable] = {}
        self.rank: dict[Hashable, int] = {}
        for x in items:
            self.add(x)

    def add(self, x: Hashable) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.rank[x] = 0

    def find(self, x: Hashable) -> Hashable:
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x: Hashable, y: Hashable) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def reps(self) -> set[Hashable]:
        return {x for x in self.parent if self.parent[x] == x}

    def __len__(self) -> int:
        return len(self.reps())


def _groups(key: Key) -> list[tuple[int, ...]]:
    if isinstance(key, Block):
        return [key.elements]
    return [b for b in key.blocks if len(b) >= 2]


def dim_sum(blocks: Iterable[Key]) -> int:
    """Σ A 的维数：有交的块合并成连通分支后 Σ(|分支| − 1)。"""
    uf = UnionFind()
    for key in blocks:
        for group in _groups(key):
            for x in group:
                uf.add(x)
            for x in group[1:]:
                uf.union(group[0], x)
    return len(uf.parent) - len(uf)


def dim_of(key: Key) -> int:
    return key.dim


def strictly_below(a: Key, b: Key) -> bool:
    """a ⊊ b（Block 为真包含，划分为严格加细）。"""
    if isinstance(a, Block) and isinstance(b, Block):
        return a.is_proper_subset(b)
    if isinstance(a, SetPartition) and isinstance(b, SetPartition):
        return a.strictly_refines(b)
    raise DomainError("cannot compare a block with a partition")


def background_members(s: NestedSet | CChain) -> tuple[Key, ...]:
    """背景嵌套集的全部成员；C-链补上 V。"""
    if isinstance(s, NestedSet):
        return tuple(s.blocks)
    return (SetPartition.single(s.n), *s.links)


def d_HBS(h: Iterable[Key], b: Key, s: NestedSet | CChain) -> int:
    """d_{H,B}^S = dim B − dim(Σ (H ∪ S_B))，S_B 为 S 中严格低于 B 的成员。"""
    members = list(h)
    for a in members:
        if not strictly_below(a, b):
            raise DomainError("every member of H must lie strictly below B")
    below = [a for a in background_members(s) if strictly_below(a, b)]
    return dim_of(b) - dim_sum([*members, *below])

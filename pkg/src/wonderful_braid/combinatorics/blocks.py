"""辫子排列的组合骨架：Block、嵌套集、集合划分与链。

约定：
    - ``Block`` 是 {1..n} 中大小 >= 2 的子集，对应不可约子空间，维数为 |A| − 1；
      全集 {1..n} 即 V。
    - ``NestedSet`` 是 Block 的 laminar 族（任两块不交或互相包含）。
    - ``SetPartition`` 同时承担 C-元素（{1..n} 的划分）和双射像
      （{1..n+k} 的 k+1 块划分，每块大小 >= 2）两种角色。

所有类型都是不可变值，可直接做 dict/set 的键。Block 内部另存一个位掩码
``mask`` 供 laminar 判定等热点使用，不参与比较与哈希。
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property

from wonderful_braid.errors import DomainError, InvalidObjectError


# ---------------------------------------------------------------------------
# Block
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Block:
    """{1..n} 中大小至少为 2 的子集。"""

    elements: tuple[int, ...]
    n: int
    mask: int = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        els = self.elements
        if len(els) < 2:
            raise InvalidObjectError(f"block {list(els)} has fewer than 2 elements")
        if any(b <= a for a, b in zip(els, els[1:])):
            raise InvalidObjectError(f"block {list(els)} is not strictly increasing")
        if els[0] < 1 or els[-1] > self.n:
            raise InvalidObjectError(f"block {list(els)} leaves the range 1..{self.n}")
        mask = 0
        for e in els:
            mask |= 1 << e
        object.__setattr__(self, "mask", mask)

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> "Block":
        items = sorted(elements)
        if len(set(items)) != len(items):
            raise InvalidObjectError(f"block {items} repeats an element")
        return cls(tuple(items), n)

    @classmethod
    def full(cls, n: int) -> "Block":
        """V = {1..n}。"""
        return cls(tuple(range(1, n + 1)), n)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "Block":
        return cls(tuple(i for i in range(1, n + 1) if mask >> i & 1), n)

    @property
    def is_full(self) -> bool:
        return len(self.elements) == self.n

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return len(self.elements) - 1

    @property
    def sort_key(self) -> tuple:
        return (self.elements[0], len(self.elements), self.elements)

    def issubset(self, other: "Block") -> bool:
        return self.mask & other.mask == self.mask

    def is_proper_subset(self, other: "Block") -> bool:
        return self.mask != other.mask and self.issubset(other)

    def isdisjoint(self, other: "Block") -> bool:
        return not self.mask & other.mask

    def compatible(self, other: "Block") -> bool:
        """不交或可比较。"""
        meet = self.mask & other.mask
        return meet == 0 or meet == self.mask or meet == other.mask

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        return isinstance(item, int) and 0 < item <= self.n and bool(self.mask >> item & 1)


def laminar_masks(masks: Iterable[int]) -> bool:
    items = list(masks)
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            meet = a & b
            if meet and meet != a and meet != b:
                return False
    return True


def is_nested(blocks: Iterable[Block]) -> bool:
    """Block 族是否 laminar（不可约建筑集 F 下嵌套等价于 laminar）。"""
    items = list(blocks)
    ambients = {b.n for b in items}
    if len(ambients) > 1:
        raise InvalidObjectError(f"blocks use different ambients {sorted(ambients)}")
    return laminar_masks(b.mask for b in items)


# ---------------------------------------------------------------------------
# NestedSet
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NestedSet:
    """{1..n} 上 Block 的 laminar 族；B(n−1) 的元素是含 V 的 NestedSet。"""

    blocks: frozenset[Block]
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidObjectError("ambient n must be positive")
        if any(b.n != self.n for b in self.blocks):
            raise InvalidObjectError(f"blocks do not all live over 1..{self.n}")
        if not laminar_masks(b.mask for b in self.blocks):
            raise InvalidObjectError("family is not laminar")

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], n: int) -> "NestedSet":
        return cls(frozenset(b if isinstance(b, Block) else Block.of(b, n) for b in blocks), n)

    @classmethod
    def root(cls, n: int) -> "NestedSet":
        """{V}。"""
        return cls(frozenset({Block.full(n)}), n)

    @cached_property
    def sorted_blocks(self) -> tuple[Block, ...]:
        return tuple(sorted(self.blocks, key=lambda b: b.sort_key))

    @cached_property
    def sort_key(self) -> tuple:
        return tuple(b.sort_key for b in self.sorted_blocks)

    @property
    def contains_root(self) -> bool:
        return any(b.is_full for b in self.blocks)

    def require_root(self) -> None:
        if not self.contains_root:
            raise DomainError("nested set does not contain V")

    def with_root(self) -> "NestedSet":
        return NestedSet(self.blocks | {Block.full(self.n)}, self.n)

    def without_root(self) -> "NestedSet":
        return NestedSet(frozenset(b for b in self.blocks if not b.is_full), self.n)

    def below(self, block: Block) -> frozenset[Block]:
        """严格包含于 ``block`` 的成员 S_B。"""
        return frozenset(b for b in self.blocks if b.is_proper_subset(block))

    def issubset(self, other: "NestedSet") -> bool:
        return self.blocks <= other.blocks

    def to_lists(self) -> list[list[int]]:
        return [list(b.elements) for b in self.sorted_blocks]

    def __iter__(self) -> Iterator[Block]:
        return iter(self.sorted_blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __contains__(self, item: object) -> bool:
        return item in self.blocks


# ---------------------------------------------------------------------------
# SetPartition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SetPartition:
    """{1..ground} 的集合划分，块内升序、块按最小元排序。"""

    blocks: tuple[tuple[int, ...], ...]
    ground: int

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for part in self.blocks:
            if not part:
                raise InvalidObjectError("partition has an empty block")
            if list(part) != sorted(set(part)):
                raise InvalidObjectError(f"block {list(part)} is not strictly increasing")
            if seen.intersection(part):
                raise InvalidObjectError("partition blocks overlap")
            seen.update(part)
        if seen != set(range(1, self.ground + 1)):
            raise InvalidObjectError(f"blocks do not cover 1..{self.ground}")
        if list(self.blocks) != sorted(self.blocks):
            raise InvalidObjectError("blocks are not in canonical order")

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], ground: int) -> "SetPartition":
        parts = [tuple(sorted(b)) for b in blocks]
        for part in parts:
            if len(set(part)) != len(part):
                raise InvalidObjectError(f"block {list(part)} repeats an element")
        return cls(tuple(sorted(parts)), ground)

    @classmethod
    def single(cls, ground: int) -> "SetPartition":
        return cls((tuple(range(1, ground + 1)),), ground)

    @property
    def is_c_element(self) -> bool:
        return any(len(b) >= 2 for b in self.blocks)

    @property
    def is_single_block(self) -> bool:
        return len(self.blocks) == 1

    @property
    def dim(self) -> int:
        """对应子空间维数 Σ(|块| − 1)。"""
        return sum(len(b) - 1 for b in self.blocks)

    @cached_property
    def _owner(self) -> dict[int, int]:
        return {x: i for i, part in enumerate(self.blocks) for x in part}

    def block_of(self, x: int) -> tuple[int, ...]:
        return self.blocks[self._owner[x]]

    def refines(self, other: "SetPartition") -> bool:
        """self 的每一块都含于 other 的某一块。"""
        if self.ground != other.ground:
            return False
        owner = other._owner
        return all(len({owner[x] for x in part}) == 1 for part in self.blocks)

    def strictly_refines(self, other: "SetPartition") -> bool:
        return self != other and self.refines(other)

    def nontrivial_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in self.blocks if len(b) >= 2)

    def to_lists(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def decompose_irreducibles(p: SetPartition) -> frozenset[Block]:
    """C-元素的不可约直和项：大小 >= 2 的块。"""
    summands = p.nontrivial_blocks()
    if not summands:
        raise DomainError("partition has no block of size >= 2")
    return frozenset(Block(b, p.ground) for b in summands)


# ---------------------------------------------------------------------------
# 链
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainNested:
    """B(n−1) 中严格递增的链 T_1 ⊊ ... ⊊ T_r；空链代表 {V}。"""

    links: tuple[NestedSet, ...]
    n: int

    def __post_init__(self) -> None:
        for link in self.links:
            if link.n != self.n:
                raise InvalidObjectError("chain links use different ambients")
            if not link.contains_root:
                raise InvalidObjectError("chain link does not contain V")
        if self.links and len(self.links[0]) < 2:
            raise InvalidObjectError("first chain link must strictly contain {V}")
        for lo, hi in zip(self.links, self.links[1:]):
            if not (lo.blocks < hi.blocks):
                raise InvalidObjectError("chain links are not strictly increasing")

    def __len__(self) -> int:
        return len(self.links)

    def __iter__(self) -> Iterator[NestedSet]:
        return iter(self.links)


@dataclass(frozen=True)
class CChain:
    """C-元素的严格下降链 V ⊋ B_1 ⊋ ... ⊋ B_r（V 本身不列出）。"""

    links: tuple[SetPartition, ...]
    n: int

    def __post_init__(self) -> None:
        for link in self.links:
            if link.ground != self.n or not link.is_c_element:
                raise InvalidObjectError("chain link is not a C-element over 1..n")
            if link.is_single_block:
                raise InvalidObjectError("V itself is not listed in a C-chain")
        for hi, lo in zip(self.links, self.links[1:]):
            if not lo.strictly_refines(hi):
                raise InvalidObjectError("C-chain is not strictly decreasing")

    def __len__(self) -> int:
        return len(self.links)

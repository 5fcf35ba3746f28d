"""带标号的集合划分及其上的对称群作用。

每块 I 带一个标号 0 <= α_I <= |I| − 2；标号 0 只允许出现在包含 m 的块上
（m 为基集大小）。这正是最小模型 Yuzvinsky 单项式经划分双射后的指数数据。
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import product

from sympy.utilities.iterables import multiset_partitions

from wonderful_braid.action.permutation import ExtPermutation
from wonderful_braid.combinatorics.blocks import SetPartition
from wonderful_braid.errors import DomainError, InvalidObjectError


@dataclass(frozen=True)
class LabelledPartition:
    """``labels[i]`` 是 ``partition.blocks[i]`` 的标号。"""

    partition: SetPartition
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        blocks = self.partition.blocks
        if len(blocks) != len(self.labels):
            raise InvalidObjectError("one label per block is required")
        m = self.partition.ground
        for block, label in zip(blocks, self.labels):
            if label < 0 or label > len(block) - 2:
                raise InvalidObjectError(f"label {label} out of range for block {list(block)}")
            if label == 0 and m not in block:
                raise InvalidObjectError(f"label 0 on block {list(block)} not containing {m}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Iterable[int], int]], ground: int) -> "LabelledPartition":
        items = sorted((tuple(sorted(b)), label) for b, label in pairs)
        partition = SetPartition.of((b for b, _ in items), ground)
        return cls(partition, tuple(label for _, label in items))

    @property
    def ground(self) -> int:
        return self.partition.ground

    @property
    def has_zero(self) -> bool:
        return 0 in self.labels

    @property
    def degree(self) -> int:
        return sum(self.labels)

    def pairs(self) -> list[tuple[tuple[int, ...], int]]:
        return list(zip(self.partition.blocks, self.labels))

    def to_lists(self) -> list[dict]:
        return [{"block": list(b), "label": label} for b, label in self.pairs()]


def act_labelled_partition(pi: ExtPermutation, lp: LabelledPartition) -> LabelledPartition:
    """块逐元素映射，标号随块携带。

    ``pi`` 可以作用在 {1..m}（pi.n = m）或 {1..m−1}（pi.n = m−1，m 不动）上；
    存在零标号时 pi 必须固定 m。
    """
    m = lp.ground
    if pi.n == m - 1:
        pi = pi.extend(m)
    elif pi.n != m:
        raise InvalidObjectError(f"permutation of size {pi.n} cannot act on 1..{m}")
    if not pi.fixes(0):
        raise InvalidObjectError("labelled partitions are permuted by permutations fixing 0")
    if lp.has_zero and not pi.fixes(m):
        raise DomainError(f"a zero label is present, the permutation must fix {m}")
    return LabelledPartition.from_pairs((((pi(x) for x in b), label) for b, label in lp.pairs()), m)


def iter_labelled_partitions(n: int) -> Iterator[LabelledPartition]:
    """独立枚举满足标号约束的全部带标号划分（基集 {1..n+k}，k = 0..n−2）。"""
    if n < 2:
        raise DomainError("n must be at least 2")
    for k in range(n - 1):
        m = n + k
        for parts in multiset_partitions(list(range(1, m + 1)), k + 1):
            if any(len(p) < 2 for p in parts):
                continue
            ranges = []
            for p in parts:
                low = 0 if m in p else 1
                ranges.append(range(low, len(p) - 1))
            for labels in product(*ranges):
                yield LabelledPartition.from_pairs(zip(parts, labels), m)

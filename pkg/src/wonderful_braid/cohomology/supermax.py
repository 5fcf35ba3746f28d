"""超极大模型的整系数上同调基。

基元素形如 η · c_{S_1}^{δ_1} ⋯ c_{S_k}^{δ_k}，其中
    - S_1 ⊊ ⋯ ⊊ S_k 是 B(n−1) 中的链（k = 0 时为空链）；
    - 1 <= δ_i <= |S_i| − |S_{i−1}| − 1，S_0 = {V}；
    - η 是以 S_1 为背景（空链时为 {V}）的极小模型可容许单项式。
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from wonderful_braid.cohomology.yuzvinsky import AdmissibleMonomial, BuildingSet, enumerate_yuz
from wonderful_braid.combinatorics.blocks import ChainNested, NestedSet
from wonderful_braid.combinatorics.enumeration import iter_nested, supersets
from wonderful_braid.errors import DomainError

logger = logging.getLogger("wonderful_braid.cohomology")


@dataclass(frozen=True)
class SupermaxBasisElement:
    eta: AdmissibleMonomial
    chain: ChainNested
    deltas: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.deltas) != len(self.chain):
            raise DomainError("one exponent per chain link is required")
        previous = 1
        for link, delta in zip(self.chain, self.deltas):
            if not 1 <= delta <= len(link) - previous - 1:
                raise DomainError(f"exponent {delta} out of range for a link of size {len(link)}")
            previous = len(link)

    @property
    def degree(self) -> int:
        return self.eta.degree + sum(self.deltas)

    @cached_property
    def sort_key(self) -> tuple:
        return (
            self.degree,
            self.eta.sort_key,
            tuple(link.sort_key for link in self.chain),
            self.deltas,
        )


def _chains_from(first: NestedSet) -> Iterator[tuple[NestedSet, ...]]:
    """以 ``first`` 开头、相邻大小至少相差 2 的链（δ 的取值范围非空）。"""

    def walk(chain: tuple[NestedSet, ...]) -> Iterator[tuple[NestedSet, ...]]:
        yield chain
        last = chain[-1]
        for nxt in supersets(last):
            if len(nxt) >= len(last) + 2:
                yield from walk((*chain, nxt))

    yield from walk((first,))


def _delta_ranges(chain: tuple[NestedSet, ...]) -> list[range]:
    sizes = [1, *(len(link) for link in chain)]
    return [range(1, hi - lo) for lo, hi in zip(sizes, sizes[1:])]


def iter_supermax_basis(n: int) -> Iterator[SupermaxBasisElement]:
    if n < 2:
        raise DomainError("n must be at least 2")
    root = NestedSet.root(n)
    empty = ChainNested((), n)
    for eta in enumerate_yuz(BuildingSet.MINIMAL, root, n):
        yield SupermaxBasisElement(eta, empty, ())

    for first in iter_nested(n):
        if len(first) < 3:
            continue
        etas = enumerate_yuz(BuildingSet.MINIMAL, first, n)
        for links in _chains_from(first):
            chain = ChainNested(links, n)
            for deltas in product(*_delta_ranges(links)):
                for eta in etas:
                    yield SupermaxBasisElement(eta, chain, deltas)


def enumerate_supermax_basis(n: int) -> list[SupermaxBasisElement]:
    """全部基元素，按 (q-次数, η, 链, δ) 排序。"""
    found = sorted(iter_supermax_basis(n), key=lambda e: e.sort_key)
    logger.debug("enumerate_supermax_basis(n=%d) -> %d", n, len(found))
    return found

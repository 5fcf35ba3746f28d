"""Yuzvinsky 可容许单项式的枚举。

单项式 m_f = Π c_A^{f(A)} 关于 (G, S) 可容许，当且仅当 supp f ∪ S 在 G 中
嵌套，且对 supp f 中每个 A 都有 f(A) < d_{(supp f)_A, A}^S。

枚举方式：先枚举嵌套集 X = supp f ∪ S，再决定支撑。由于
(supp f)_A ∪ S_A 恰为 X 中严格低于 A 的成员，上界 d_A 只依赖 X：
    - X \\ S 中的块必须出现在支撑里，需要 d_A >= 2；
    - S 中的块可出现（指数 1..d_A−1）也可不出现。
这样每个单项式恰好被生成一次。
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import product

from sympy.utilities.iterables import multiset_partitions

from wonderful_braid.cohomology.dimensions import Key, background_members, d_HBS, strictly_below
from wonderful_braid.combinatorics.blocks import Block, CChain, NestedSet, SetPartition
from wonderful_braid.combinatorics.enumeration import iter_nested, supersets
from wonderful_braid.errors import DomainError

logger = logging.getLogger("wonderful_braid.cohomology")


class BuildingSet(str, Enum):
    """建筑集标签：不可约（极小模型）或全体（极大模型）。"""

    MINIMAL = "minimal"
    MAXIMAL = "maximal"


def key_order(key: Key) -> tuple:
    if isinstance(key, Block):
        return (0, key.sort_key)
    return (1, -key.dim, key.blocks)


@dataclass(frozen=True)
class AdmissibleMonomial:
    """可容许单项式；``exponents`` 按规范序排列的 (键, 正指数) 对。"""

    exponents: tuple[tuple[Key, int], ...]
    tag: BuildingSet
    background: NestedSet | CChain
    n: int

    @property
    def support(self) -> tuple[Key, ...]:
        return tuple(k for k, _ in self.exponents)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def exponent_of(self, key: Key) -> int:
        return dict(self.exponents).get(key, 0)

    @cached_property
    def sort_key(self) -> tuple:
        return (self.degree, tuple((key_order(k), e) for k, e in self.exponents))


def _monomials_on(
    x_members: Sequence[Key],
    bounds: dict[Key, int],
    optional: set[Key],
) -> Iterator[tuple[tuple[Key, int], ...]]:
    """在固定的 X 上展开所有指数组合（0 表示不在支撑中）。"""
    ordered = sorted(x_members, key=key_order)
    ranges = []
    for key in ordered:
        d = bounds[key]
        if key in optional:
            ranges.append(range(0, max(d, 1)))
        else:
            if d < 2:
                return
            ranges.append(range(1, d))
    for exps in product(*ranges):
        yield tuple((k, e) for k, e in zip(ordered, exps) if e)


# ---------------------------------------------------------------------------
# 不可约建筑集
# ---------------------------------------------------------------------------

def _minimal_candidates(s: NestedSet, max_support: int | None) -> Iterator[NestedSet]:
    if len(s) == 1:
        # 背景为 {V}：非 V 块都必须出现，故可以按"至少 3 个孩子"剪枝
        yield from iter_nested(s.n, max_blocks=max_support, min_children=3)
    else:
        for x in supersets(s):
            if max_support is None or len(x) - len(s) <= max_support:
                yield x


def _iter_minimal(s: NestedSet, max_support: int | None) -> Iterator[AdmissibleMonomial]:
    n = s.n
    optional = set(s.blocks)
    for x in _minimal_candidates(s, max_support):
        bounds = {a: d_HBS(x.below(a), a, s) for a in x.blocks}
        for exps in _monomials_on(tuple(x.blocks), bounds, optional):
            if max_support is not None and len(exps) > max_support:
                continue
            yield AdmissibleMonomial(exps, BuildingSet.MINIMAL, s, n)


# ---------------------------------------------------------------------------
# 极大建筑集（C-元素链）
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def finer_c_elements(p: SetPartition) -> tuple[SetPartition, ...]:
    """严格加细 p 的全部 C-元素：对每块分别取划分再拼接。"""
    per_block = [list(multiset_partitions(list(b))) if len(b) > 1 else [[list(b)]] for b in p.blocks]
    out = []
    for choice in product(*per_block):
        parts = [part for split in choice for part in split]
        q = SetPartition.of(parts, p.ground)
        if q != p and q.is_c_element:
            out.append(q)
    out.sort(key=key_order)
    return tuple(out)


def _maximal_chains(s: CChain) -> Iterator[tuple[SetPartition, ...]]:
    """包含 V 与 S 全部成员的 C-链（自上而下），已按 d >= 2 剪枝非 S 成员。"""
    required = s.links
    top = SetPartition.single(s.n)
    in_s = {top, *required}

    def walk(chain: tuple[SetPartition, ...], pending: int) -> Iterator[tuple[SetPartition, ...]]:
        last = chain[-1]
        if pending == len(required) and (last in in_s or last.dim >= 2):
            yield chain
        target = required[pending] if pending < len(required) else None
        for c in finer_c_elements(last):
            if target is not None and not target.refines(c):
                continue
            if last not in in_s and last.dim - c.dim < 2:
                continue
            yield from walk((*chain, c), pending + (1 if c == target else 0))

    yield from walk((top,), 0)


def _iter_maximal(s: CChain) -> Iterator[AdmissibleMonomial]:
    optional = set(background_members(s))
    for chain in _maximal_chains(s):
        bounds = {a: d_HBS([c for c in chain if strictly_below(c, a)], a, s) for a in chain}
        for exps in _monomials_on(chain, bounds, optional):
            yield AdmissibleMonomial(exps, BuildingSet.MAXIMAL, s, s.n)


# ---------------------------------------------------------------------------
# 公共接口
# ---------------------------------------------------------------------------

def iter_yuz(
    tag: BuildingSet | str,
    s: NestedSet | CChain | None,
    n: int,
    *,
    max_support: int | None = None,
) -> Iterator[AdmissibleMonomial]:
    """不排序地生成可容许单项式；``s`` 为 None 时取 {V}。

    ``max_support`` 只对极小模型生效，限制支撑大小。
    """
    tag = BuildingSet(tag)
    if n < 2:
        raise DomainError("n must be at least 2")
    if tag is BuildingSet.MINIMAL:
        if s is None:
            s = NestedSet.root(n)
        if not isinstance(s, NestedSet) or s.n != n:
            raise DomainError("minimal background must be a nested set over 1..n")
        s.require_root()
        yield from _iter_minimal(s, max_support)
    else:
        if s is None:
            s = CChain((), n)
        if not isinstance(s, CChain) or s.n != n:
            raise DomainError("maximal background must be a C-chain over 1..n")
        yield from _iter_maximal(s)


def enumerate_yuz(
    tag: BuildingSet | str,
    s: NestedSet | CChain | None,
    n: int,
    *,
    max_support: int | None = None,
) -> list[AdmissibleMonomial]:
    """全部可容许单项式，按 (q-次数, 支撑规范序) 排序。"""
    found = sorted(iter_yuz(tag, s, n, max_support=max_support), key=lambda m: m.sort_key)
    logger.debug("enumerate_yuz(%s, n=%d) -> %d", BuildingSet(tag).value, n, len(found))
    return found

"""S_{n+1} 在 Block、嵌套集与链上的扩展作用。

对 A ≠ V：先在 {0..n} 上计算 σ(A)；若不含 0 则直接返回，否则返回其在
{0..n} 中的补集。V 总是映到 V。固定 0 的置换退化为普通的重新标号。
"""

from __future__ import annotations

from wonderful_braid.action.permutation import ExtPermutation
from wonderful_braid.combinatorics.blocks import Block, ChainNested, NestedSet, laminar_masks
from wonderful_braid.errors import ActionInvariantError, InvalidObjectError


def act_block(sigma: ExtPermutation, a: Block) -> Block:
    if sigma.n != a.n:
        raise InvalidObjectError(f"permutation of 0..{sigma.n} cannot act on blocks over 1..{a.n}")
    if a.is_full:
        return a
    image = {sigma(e) for e in a.elements}
    if 0 not in image:
        return Block.of(image, a.n)
    return Block.of((i for i in range(1, a.n + 1) if i not in image), a.n)


def act_nested(sigma: ExtPermutation, s: NestedSet) -> NestedSet:
    s.require_root()
    images = frozenset(act_block(sigma, b) for b in s.blocks)
    if len(images) != len(s.blocks) or not laminar_masks(b.mask for b in images):
        raise ActionInvariantError(f"image of {s.to_lists()} under {sigma} is not nested")
    return NestedSet(images, s.n)


def act_chain(sigma: ExtPermutation, c: ChainNested) -> ChainNested:
    return ChainNested(tuple(act_nested(sigma, link) for link in c.links), c.n)

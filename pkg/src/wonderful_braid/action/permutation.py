"""{0, 1, ..., n} 上的置换。

S_n 作为固定 0 的子群嵌入 S_{n+1}；标号划分上的置换同样用本类型表示
（此时 images[0] = 0）。与 sympy 的 ``Permutation`` 互转时点 i 对应 sympy 的
点 i（0 号点就是 0）。
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import SymmetricGroup

from wonderful_braid.errors import InvalidObjectError


@dataclass(frozen=True)
class ExtPermutation:
    """images[i] = σ(i)，i = 0..n。"""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise InvalidObjectError(f"{list(self.images)} is not a bijection of 0..{len(self.images) - 1}")

    @property
    def n(self) -> int:
        return len(self.images) - 1

    @classmethod
    def identity(cls, n: int) -> "ExtPermutation":
        return cls(tuple(range(n + 1)))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "ExtPermutation":
        images = list(range(n + 1))
        images[i], images[j] = images[j], images[i]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> "ExtPermutation":
        """``"1 0 2 3 4"`` → σ(0)=1, σ(1)=0, ..."""
        try:
            images = tuple(int(tok) for tok in text.replace(",", " ").split())
        except ValueError as exc:
            raise InvalidObjectError(f"cannot parse permutation {text!r}") from exc
        return cls(images)

    @classmethod
    def from_sympy(cls, perm: Permutation, n: int) -> "ExtPermutation":
        """sympy 置换（作用于 0..size-1）补足为 0..n 上的置换。"""
        images = list(perm.array_form) + list(range(perm.size, n + 1))
        return cls(tuple(images))

    @classmethod
    def shifted(cls, perm: Permutation, n: int) -> "ExtPermutation":
        """sympy 置换作用于 1..size（sympy 点 i ↦ 标号 i+1），0 与其余点不动。"""
        images = [0] + [x + 1 for x in perm.array_form] + list(range(perm.size + 1, n + 1))
        return cls(tuple(images))

    def to_sympy(self) -> Permutation:
        return Permutation(list(self.images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: "ExtPermutation") -> "ExtPermutation":
        """(self ∘ other)(i) = self(other(i))。"""
        if self.n != other.n:
            raise InvalidObjectError("cannot compose permutations of different sizes")
        return ExtPermutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "ExtPermutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return ExtPermutation(tuple(inv))

    def extend(self, n: int) -> "ExtPermutation":
        """在 n 更大的点集上补上不动点。"""
        if n < self.n:
            raise InvalidObjectError("cannot shrink a permutation")
        return ExtPermutation(self.images + tuple(range(self.n + 1, n + 1)))

    def fixes(self, i: int) -> bool:
        return self.images[i] == i

    def __str__(self) -> str:
        return " ".join(str(i) for i in self.images)


def adjacent_transpositions(n: int, *, first: int = 0, last: int | None = None) -> list[ExtPermutation]:
    """生成元 (first first+1), ..., (last−1 last)，作用在 0..n 上。"""
    top = n if last is None else last
    return [ExtPermutation.transposition(i, i + 1, n) for i in range(first, top)]


def symmetric_group(size: int, n: int) -> Iterator[ExtPermutation]:
    """S_size 作用在标号 1..size 上（0 与 size+1..n 不动）的全部元素。"""
    for perm in SymmetricGroup(size).generate():
        yield ExtPermutation.shifted(perm, n)

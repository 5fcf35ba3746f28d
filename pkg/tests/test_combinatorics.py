"""combinatorics 子包：Block、嵌套集、枚举、Hasse 树与划分双射。"""

import pytest

from wonderful_braid.combinatorics.bijection import nested_to_partition, partition_to_nested
from wonderful_braid.combinatorics.blocks import (
    Block,
    CChain,
    ChainNested,
    NestedSet,
    SetPartition,
    decompose_irreducibles,
    is_nested,
)
from wonderful_braid.combinatorics.enumeration import (
    c_elements,
    enumerate_B,
    iter_cchains,
    iter_nested,
    stirling2_assoc,
    supersets,
)
from wonderful_braid.combinatorics.trees import depth, forest, levels, phi_embed
from wonderful_braid.errors import BijectionViolation, DomainError, InvalidObjectError


class TestBlocks:
    def test_block_validation(self):
        with pytest.raises(InvalidObjectError):
            Block.of([1], 4)
        with pytest.raises(InvalidObjectError):
            Block.of([0, 1], 4)
        with pytest.raises(InvalidObjectError):
            Block.of([1, 5], 4)
        with pytest.raises(InvalidObjectError):
            Block.of([1, 1, 2], 4)

    def test_block_relations(self, block):
        a, b, c = block([1, 2], 5), block([1, 2, 3], 5), block([2, 4], 5)
        assert a.is_proper_subset(b)
        assert a.compatible(b)
        assert not a.compatible(c)
        assert block([3, 5], 5).isdisjoint(a)
        assert Block.full(5).is_full
        assert b.dim == 2
        assert 3 in b and 4 not in b

    def test_is_nested(self, block):
        assert is_nested([block([1, 2], 4), block([3, 4], 4), Block.full(4)])
        assert not is_nested([block([1, 2], 4), block([2, 3], 4)])
        with pytest.raises(InvalidObjectError):
            is_nested([block([1, 2], 4), block([1, 2], 5)])

    def test_nested_set_rejects_crossing_blocks(self):
        with pytest.raises(InvalidObjectError):
            NestedSet.of([[1, 2], [2, 3]], 4)

    def test_nested_set_root_handling(self, nested):
        s = nested([[1, 2], [1, 2, 3, 4]], 4)
        assert s.contains_root
        assert s.without_root() == nested([[1, 2]], 4)
        assert nested([[1, 2]], 4).with_root() == s
        with pytest.raises(DomainError):
            nested([[1, 2]], 4).require_root()

    def test_set_partition_validation(self):
        with pytest.raises(InvalidObjectError):
            SetPartition.of([[1, 2], [2, 3]], 3)
        with pytest.raises(InvalidObjectError):
            SetPartition.of([[1, 2]], 3)
        p = SetPartition.of([[3, 1], [2]], 3)
        assert p.blocks == ((1, 3), (2,))
        assert p.dim == 1
        assert p.is_c_element

    def test_refinement(self):
        fine = SetPartition.of([[1, 2], [3], [4]], 4)
        coarse = SetPartition.of([[1, 2], [3, 4]], 4)
        assert fine.strictly_refines(coarse)
        assert not coarse.refines(fine)
        assert fine.refines(fine)
        assert not fine.strictly_refines(fine)

    def test_decompose_irreducibles(self):
        p = SetPartition.of([[1, 2], [3, 4, 5], [6]], 6)
        assert decompose_irreducibles(p) == {Block.of([1, 2], 6), Block.of([3, 4, 5], 6)}
        with pytest.raises(DomainError):
            decompose_irreducibles(SetPartition.of([[1], [2]], 2))

    def test_chain_validation(self, nested):
        root = NestedSet.root(4)
        with pytest.raises(InvalidObjectError):
            ChainNested((root,), 4)
        a = nested([[1, 2], [1, 2, 3, 4]], 4)
        b = nested([[1, 2], [3, 4], [1, 2, 3, 4]], 4)
        assert len(ChainNested((a, b), 4)) == 2
        with pytest.raises(InvalidObjectError):
            ChainNested((b, a), 4)

    def test_cchain_validation(self):
        v = SetPartition.single(4)
        with pytest.raises(InvalidObjectError):
            CChain((v,), 4)
        hi = SetPartition.of([[1, 2, 3], [4]], 4)
        lo = SetPartition.of([[1, 2], [3], [4]], 4)
        assert len(CChain((hi, lo), 4)) == 2
        with pytest.raises(InvalidObjectError):
            CChain((lo, hi), 4)


class TestEnumeration:
    def test_n_equals_two(self):
        assert enumerate_B(2) == [NestedSet.root(2)]

    @pytest.mark.parametrize("n, total", [(3, 4), (4, 26), (5, 236), (6, 2752)])
    def test_total_sizes(self, n, total):
        assert len(enumerate_B(n)) == total

    def test_layers_for_n_four(self):
        assert len(enumerate_B(4, size=1)) == 1
        assert len(enumerate_B(4, size=2)) == 10
        assert len(enumerate_B(4, size=3)) == 15
        assert enumerate_B(4, size=4) == []

    def test_enumeration_is_sorted_and_unique(self):
        found = enumerate_B(5)
        assert len(set(found)) == len(found)
        assert [s.sort_key for s in found] == sorted(s.sort_key for s in found)

    def test_layers_match_stirling_numbers(self):
        for n in range(2, 7):
            for k in range(n - 1):
                assert len(enumerate_B(n, size=k + 1)) == stirling2_assoc(n + k, k + 1)

    def test_min_children_pruning(self):
        for s in iter_nested(5, min_children=3):
            kids = forest(s)
            for b in s.blocks:
                if not b.is_full:
                    covered = sum(c.size for c in kids[b])
                    assert len(kids[b]) + b.size - covered >= 3

    def test_rejects_small_n(self):
        with pytest.raises(DomainError):
            enumerate_B(1)

    def test_supersets(self, nested):
        s = nested([[1, 2], [1, 2, 3, 4]], 4)
        ups = supersets(s)
        assert s in ups
        assert all(s.issubset(x) for x in ups)
        # {1,2} 之外还能加的块：{3,4}、{1,2,3}、{1,2,4}
        assert len(ups) == 4

    def test_stirling2_assoc(self):
        assert stirling2_assoc(0, 0) == 1
        assert stirling2_assoc(4, 2) == 3
        assert stirling2_assoc(5, 2) == 10
        assert stirling2_assoc(6, 3) == 15
        assert stirling2_assoc(3, 2) == 0
        assert stirling2_assoc(-1, 0) == 0

    def test_c_elements(self):
        # Bell(4) = 15，去掉全单点划分
        assert len(c_elements(4)) == 14
        assert c_elements(4)[0] == SetPartition.single(4)

    def test_cchains_for_n_three(self):
        chains = list(iter_cchains(3))
        # 空链，以及三条 V ⊋ {{i,j},{k}}
        assert len(chains) == 4


class TestTrees:
    def test_depth_uses_leafless_levels(self, nested):
        s = nested([[1, 2, 3, 4, 5], [1, 2], [3, 4], [3, 4, 5]], 5)
        assert depth(s) == 2
        assert levels(s)[Block.of([1, 2], 5)] == 0
        assert depth(NestedSet.root(5)) == 0

    def test_forest(self, nested):
        s = nested([[1, 2, 3, 4, 5], [1, 2], [3, 4], [3, 4, 5]], 5)
        kids = forest(s)
        assert kids[Block.full(5)] == (Block.of([1, 2], 5), Block.of([3, 4, 5], 5))
        assert kids[Block.of([3, 4, 5], 5)] == (Block.of([3, 4], 5),)

    def test_phi_embed(self):
        hi = SetPartition.of([[1, 2, 3], [4]], 4)
        lo = SetPartition.of([[1, 2], [3], [4]], 4)
        chain = phi_embed(CChain((hi, lo), 4))
        assert [link.to_lists() for link in chain] == [
            [[1, 2], [1, 2, 3, 4]],
            [[1, 2], [1, 2, 3], [1, 2, 3, 4]],
        ]
        assert len(phi_embed(CChain((), 4))) == 0


class TestBijection:
    def test_forward_example(self, nested):
        s = nested([[1, 2, 3, 4, 5], [1, 2], [3, 4], [3, 4, 5]], 5)
        assert nested_to_partition(s) == SetPartition.of([[1, 2], [3, 4], [5, 7], [6, 8]], 8)

    def test_root_maps_to_single_block(self):
        assert nested_to_partition(NestedSet.root(4)) == SetPartition.single(4)

    def test_inverse_example(self, nested):
        p = SetPartition.of([[1, 2], [3, 4], [5, 7], [6, 8]], 8)
        assert partition_to_nested(p, 5) == nested([[1, 2, 3, 4, 5], [1, 2], [3, 4], [3, 4, 5]], 5)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_roundtrip(self, n):
        images = set()
        for s in enumerate_B(n):
            p = nested_to_partition(s)
            assert partition_to_nested(p, n) == s
            images.add(p)
        assert len(images) == len(enumerate_B(n))

    def test_inverse_rejects_wrong_ground(self):
        with pytest.raises(DomainError):
            partition_to_nested(SetPartition.of([[1, 2], [3, 4]], 4), 4)

    def test_inverse_rejects_singletons(self):
        with pytest.raises(DomainError):
            partition_to_nested(SetPartition.of([[1, 2, 3], [4]], 4), 3)

    def test_inverse_rejects_ground_beyond_new_labels(self):
        # 两块时 n+k = 4，标号 5 不存在
        with pytest.raises(DomainError):
            partition_to_nested(SetPartition.of([[1, 2, 3], [4, 5]], 5), 3)

    def test_inverse_rejects_empty_partition(self):
        with pytest.raises(DomainError):
            partition_to_nested(SetPartition.of([], 0), 1)
        with pytest.raises(DomainError):
            partition_to_nested(SetPartition.of([], 0), 2)

    def test_inverse_detects_broken_roundtrip(self, monkeypatch):
        import wonderful_braid.combinatorics.bijection as bijection

        monkeypatch.setattr(bijection, "nested_to_partition", lambda s: SetPartition.single(s.n + len(s) - 1))
        p = SetPartition.of([[1, 2], [3, 4, 5]], 5)
        with pytest.raises(BijectionViolation):
            partition_to_nested(p, 4)

    @pytest.mark.parametrize(
        "n, k",
        [(n, k) for n in range(2, 7) for k in range(n - 1) if n + k <= 10],
    )
    def test_layer_bijection(self, n, k):
        layer = enumerate_B(n, size=k + 1)
        images = {nested_to_partition(s) for s in layer}
        assert len(layer) == len(images) == stirling2_assoc(n + k, k + 1)
        for p in images:
            assert p.ground == n + k
            assert len(p.blocks) == k + 1
            assert all(len(b) >= 2 for b in p.blocks)
            assert nested_to_partition(partition_to_nested(p, n)) == p

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "n, k",
        [(n, k) for n in range(7, 11) for k in range(n - 1) if n + k <= 10],
    )
    def test_layer_bijection_large(self, n, k):
        layer = enumerate_B(n, size=k + 1)
        images = set()
        for s in layer:
            p = nested_to_partition(s)
            assert partition_to_nested(p, n) == s
            images.add(p)
        assert len(images) == len(layer) == stirling2_assoc(n + k, k + 1)

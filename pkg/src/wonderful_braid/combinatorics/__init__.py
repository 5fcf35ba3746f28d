"""辫子排列的组合骨架：Block、嵌套集、B(n−1) 枚举与划分双射。"""

from wonderful_braid.combinatorics.bijection import (
    LabelledVertex,
    labelled_tree,
    nested_to_partition,
    partition_to_nested,
)
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
    all_blocks,
    c_elements,
    enumerate_B,
    iter_cchains,
    iter_nested,
    stirling2_assoc,
    supersets,
)
from wonderful_braid.combinatorics.trees import (
    child_count,
    depth,
    forest,
    levels,
    phi_embed,
    uncovered_leaves,
)

__all__ = [
    "Block",
    "CChain",
    "ChainNested",
    "LabelledVertex",
    "NestedSet",
    "SetPartition",
    "all_blocks",
    "c_elements",
    "child_count",
    "decompose_irreducibles",
    "depth",
    "enumerate_B",
    "forest",
    "is_nested",
    "iter_cchains",
    "iter_nested",
    "labelled_tree",
    "levels",
    "nested_to_partition",
    "partition_to_nested",
    "phi_embed",
    "stirling2_assoc",
    "supersets",
    "uncovered_leaves",
]

"""扩展 S_{n+1} 作用、建筑闭包、带标号划分与轨道计数。"""

from wonderful_braid.action.closure import building_closure, closure_seed
from wonderful_braid.action.extended import act_block, act_chain, act_nested
from wonderful_braid.action.labelled import (
    LabelledPartition,
    act_labelled_partition,
    iter_labelled_partitions,
)
from wonderful_braid.action.orbits import (
    OrbitMode,
    act_partition,
    burnside_count,
    orbit_count,
    orbit_count_burnside,
    orbit_representatives,
    orbits,
)
from wonderful_braid.action.permutation import (
    ExtPermutation,
    adjacent_transpositions,
    symmetric_group,
)

__all__ = [
    "ExtPermutation",
    "LabelledPartition",
    "OrbitMode",
    "act_block",
    "act_chain",
    "act_labelled_partition",
    "act_nested",
    "act_partition",
    "adjacent_transpositions",
    "building_closure",
    "burnside_count",
    "closure_seed",
    "iter_labelled_partitions",
    "orbit_count",
    "orbit_count_burnside",
    "orbit_representatives",
    "orbits",
    "symmetric_group",
]

"""Wonderful Braid：辫子排列 wonderful 模型的组合学、上同调基与生成函数。

主要组件:
    - ``wonderful_braid.combinatorics``: Block、嵌套集、B(n−1) 枚举与划分双射
    - ``wonderful_braid.action``: 扩展 S_{n+1} 作用、建筑闭包与轨道计数
    - ``wonderful_braid.cohomology``: Yuzvinsky 基、超极大模型基与 Poincaré 多项式
    - ``wonderful_braid.series``: QQ[q, y, z] 系数的截断幂级数
    - ``wonderful_braid.genfun``: Φ、ψ、ξ、Ψ 等生成函数及其枚举对照
    - ``wonderful_braid.harness``: 命令行、配置与端到端验证
"""

from wonderful_braid._version import __version__
from wonderful_braid.cohomology import enumerate_supermax_basis, enumerate_yuz, poincare
from wonderful_braid.combinatorics import NestedSet, SetPartition, enumerate_B

__all__ = [
    "NestedSet",
    "SetPartition",
    "__version__",
    "enumerate_B",
    "enumerate_supermax_basis",
    "enumerate_yuz",
    "poincare",
]

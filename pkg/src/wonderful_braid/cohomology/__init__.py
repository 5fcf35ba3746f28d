"""上同调基：d_{H,B}^S、Yuzvinsky 单项式、超极大模型基与 Poincaré 多项式。"""

from wonderful_braid.cohomology.dimensions import background_members, d_HBS, dim_sum, strictly_below
from wonderful_braid.cohomology.labelling import (
    act_monomial,
    basis_orbit_count,
    monomial_to_labelled_partition,
)
from wonderful_braid.cohomology.poincare import Model, euler_characteristic, poincare
from wonderful_braid.cohomology.supermax import (
    SupermaxBasisElement,
    enumerate_supermax_basis,
    iter_supermax_basis,
)
from wonderful_braid.cohomology.yuzvinsky import (
    AdmissibleMonomial,
    BuildingSet,
    enumerate_yuz,
    finer_c_elements,
    iter_yuz,
)

__all__ = [
    "AdmissibleMonomial",
    "BuildingSet",
    "Model",
    "SupermaxBasisElement",
    "act_monomial",
    "background_members",
    "basis_orbit_count",
    "d_HBS",
    "dim_sum",
    "enumerate_supermax_basis",
    "enumerate_yuz",
    "euler_characteristic",
    "finer_c_elements",
    "iter_supermax_basis",
    "iter_yuz",
    "monomial_to_labelled_partition",
    "poincare",
    "strictly_below",
]

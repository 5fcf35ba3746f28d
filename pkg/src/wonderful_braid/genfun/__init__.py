"""闭式生成函数及其枚举对照：Φ、ψ、Γ、ξ、超极大代换、Ψ 与有根树求和。"""

from wonderful_braid.genfun.bigpsi import bigpsi_direct, bigpsi_formula, extract_poincare_from_bigpsi
from wonderful_braid.genfun.minimal import lambda_series, phi_series, psi_series, w_poly, w_series
from wonderful_braid.genfun.supermax import (
    euler_real_series,
    phi_super_series,
    supermax_tables,
    y_substitution,
    z_substitution,
    z_substitution_chain,
)
from wonderful_braid.genfun.trees import (
    automorphisms,
    rooted_trees,
    tree_sum,
    tree_sum_check,
    tree_sum_target,
    tree_weight,
)
from wonderful_braid.genfun.xi import (
    XiTermRecord,
    gamma_series,
    stratum_poincare,
    xi_direct,
    xi_direct_coefficient,
    xi_series,
    xi_terms,
)

__all__ = [
    "XiTermRecord",
    "automorphisms",
    "bigpsi_direct",
    "bigpsi_formula",
    "euler_real_series",
    "extract_poincare_from_bigpsi",
    "gamma_series",
    "lambda_series",
    "phi_series",
    "phi_super_series",
    "psi_series",
    "rooted_trees",
    "stratum_poincare",
    "supermax_tables",
    "tree_sum",
    "tree_sum_check",
    "tree_sum_target",
    "tree_weight",
    "w_poly",
    "w_series",
    "xi_direct",
    "xi_direct_coefficient",
    "xi_series",
    "xi_terms",
    "y_substitution",
    "z_substitution",
    "z_substitution_chain",
]

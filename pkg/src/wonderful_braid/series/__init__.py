"""精确级数引擎：QQ[q, y, z] 稀疏多项式与 t 的截断幂级数。"""

from wonderful_braid.series.egf import (
    DEFAULT_TRUNCATION_ORDER,
    EgfSeries,
    euler_secant,
    euler_secant_series,
    series_add,
    series_ddt,
    series_evaluate_q,
    series_exp,
    series_integrate,
    series_inverse,
    series_mul,
    series_pow,
    substitute_monomials,
)
from wonderful_braid.series.poly import (
    POLY_RING,
    Q,
    Y,
    Z,
    MultiPoly,
    q_bracket,
    q_poly,
    q_shifted_bracket,
)

__all__ = [
    "DEFAULT_TRUNCATION_ORDER",
    "EgfSeries",
    "MultiPoly",
    "POLY_RING",
    "Q",
    "Y",
    "Z",
    "euler_secant",
    "euler_secant_series",
    "q_bracket",
    "q_poly",
    "q_shifted_bracket",
    "series_add",
    "series_ddt",
    "series_evaluate_q",
    "series_exp",
    "series_integrate",
    "series_inverse",
    "series_mul",
    "series_pow",
    "substitute_monomials",
]

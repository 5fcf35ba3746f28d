"""``series`` 子命令：输出具名生成函数，``--compare`` 时与枚举对照逐项比较。

对照方式：
    - phi / phisuper：基枚举得到的 Poincaré 多项式；
    - psi：枚举的 p_n 乘以 w_n；
    - gamma：y 乘以有根树求和；
    - xi：按边界层直接枚举；
    - eulerreal：超极大多项式在 q = −1 处的值；
    - bigpsi：按支撑分组的直接枚举；
    - w：B(n−1) 各层的大小（经划分双射即 2-相伴 Stirling 数）。
枚举只做到 min(T, verify_n_max)（gamma 为 tree_bound，bigpsi 为 T）。
"""

from __future__ import annotations

import argparse
import logging
from collections import Counter
from collections.abc import Callable

from wonderful_braid.cohomology.poincare import poincare
from wonderful_braid.combinatorics.enumeration import enumerate_B
from wonderful_braid.genfun.bigpsi import bigpsi_direct, bigpsi_formula
from wonderful_braid.genfun.minimal import phi_series, psi_series, w_poly, w_series
from wonderful_braid.genfun.supermax import euler_real_series, phi_super_series
from wonderful_braid.genfun.trees import tree_sum
from wonderful_braid.genfun.xi import gamma_series, xi_direct, xi_series
from wonderful_braid.harness._params import add_format_param, add_order_param, order_param
from wonderful_braid.harness.config import get_settings
from wonderful_braid.harness.helpers import emit, emit_frame, series_frame, series_payload
from wonderful_braid.series.egf import EgfSeries
from wonderful_braid.series.poly import MultiPoly, evaluate_q, format_poly, poly_from_terms

logger = logging.getLogger("wonderful_braid.genfun")

SERIES: dict[str, Callable[[int], EgfSeries]] = {
    "phi": phi_series,
    "psi": psi_series,
    "gamma": gamma_series,
    "xi": xi_series,
    "phisuper": phi_super_series,
    "eulerreal": euler_real_series,
    "bigpsi": bigpsi_formula,
    "w": w_series,
}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("series", help="print a named generating function")
    parser.add_argument("--name", choices=list(SERIES), required=True)
    add_order_param(parser)
    parser.add_argument("--compare", action="store_true", help="compare with the enumeration oracle; exit 1 on mismatch")
    add_format_param(parser)
    parser.set_defaults(func=run)


# ---------------------------------------------------------------------------
# 对照
# ---------------------------------------------------------------------------

def _w_layers(n: int) -> MultiPoly:
    layers = Counter(len(s) - 1 for s in enumerate_B(n))
    return poly_from_terms({(0, 0, k): c for k, c in layers.items()})


def _expected(name: str, order: int) -> list[tuple[int, MultiPoly, MultiPoly]]:
    """(n, 对照值, 公式值) 列表；phi/psi/... 按 EGF 系数，w 按普通系数。"""
    settings = get_settings()
    top = min(order, settings.verify_n_max)
    formula = SERIES[name](order)
    rows: list[tuple[int, MultiPoly, MultiPoly]] = []
    if name == "w":
        for n in range(2, top + 1):
            rows.append((n, _w_layers(n), formula.coefficient(n)))
        return rows
    if name == "bigpsi":
        direct = bigpsi_direct(order)
        return [(n, direct.egf_coefficient(n), formula.egf_coefficient(n)) for n in range(order + 1)]
    if name == "gamma":
        bound = min(order, settings.tree_bound)
        trees = tree_sum(bound).scale(poly_from_terms({(0, 1, 0): 1}))
        return [(n, trees.egf_coefficient(n), formula.egf_coefficient(n)) for n in range(bound + 1)]
    if name == "xi":
        direct = xi_direct(top)
        return [(n, direct.egf_coefficient(n), formula.egf_coefficient(n)) for n in range(1, top + 1)]
    for n in range(2, top + 1):
        if name == "phi":
            expected = poincare("minimal", n)
        elif name == "psi":
            expected = poincare("minimal", n) * w_poly(n)
        elif name == "phisuper":
            expected = poincare("supermaximal", n)
        else:
            expected = evaluate_q(poincare("supermaximal", n), -1)
        rows.append((n, expected, formula.egf_coefficient(n)))
    return rows


def compare(name: str, order: int) -> bool:
    ok = True
    for n, expected, actual in _expected(name, order):
        if expected != actual:
            ok = False
            logger.error("%s 在 n=%d 处不一致: 期望 %s, 实际 %s", name, n, format_poly(expected), format_poly(actual))
    if ok:
        logger.info("%s 与枚举对照一致", name)
    return ok


def run(args: argparse.Namespace) -> int:
    order = order_param(args)
    s = SERIES[args.name](order)
    if args.format == "csv":
        emit_frame(series_frame(s))
    else:
        emit(series_payload(s))
    if args.compare and not compare(args.name, order):
        return 1
    return 0

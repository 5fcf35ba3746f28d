"""端到端验证：把每条公式与它的枚举对照逐项比较。

每条检查是一个模块级函数 ``check(n_max, order) -> list[CheckResult]``，
登记在 :data:`CHECKS` 中。``workers > 1`` 时用进程池并行执行，结果统一按
检查名排序，所以报告与并行度无关。
"""

from __future__ import annotations

import logging
import sys
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from sympy.combinatorics.named_groups import SymmetricGroup

from wonderful_braid.action.closure import building_closure, closure_seed
from wonderful_braid.action.extended import act_nested
from wonderful_braid.action.labelled import iter_labelled_partitions
from wonderful_braid.action.orbits import OrbitMode, orbit_count, orbit_count_burnside
from wonderful_braid.action.permutation import ExtPermutation, adjacent_transpositions
from wonderful_braid.cohomology.labelling import monomial_to_labelled_partition
from wonderful_braid.cohomology.poincare import poincare
from wonderful_braid.cohomology.yuzvinsky import BuildingSet, enumerate_yuz
from wonderful_braid.combinatorics.bijection import nested_to_partition, partition_to_nested
from wonderful_braid.combinatorics.enumeration import enumerate_B, stirling2_assoc
from wonderful_braid.errors import WonderfulBraidError
from wonderful_braid.genfun.bigpsi import bigpsi_direct, bigpsi_formula, extract_poincare_from_bigpsi
from wonderful_braid.genfun.minimal import phi_series, psi_series
from wonderful_braid.genfun.supermax import (
    euler_real_series,
    phi_super_series,
    z_substitution,
    z_substitution_chain,
)
from wonderful_braid.genfun.trees import tree_sum_check
from wonderful_braid.genfun.xi import gamma_series, xi_direct, xi_series
from wonderful_braid.harness.models import CheckResult, VerificationReport
from wonderful_braid.series.egf import euler_secant
from wonderful_braid.series.poly import format_poly, is_palindromic, poly_from_terms, q_poly

logger = logging.getLogger("wonderful_braid.verify")

CheckFunc = Callable[[int, int], list[CheckResult]]


def _result(name: str, ok: bool, expected: object = "", actual: object = "", **parameters) -> CheckResult:
    return CheckResult(
        name=name,
        parameters=parameters,
        status="pass" if ok else "fail",
        expected=str(expected),
        actual=str(actual),
    )


def _compare_poly(name: str, expected, actual, **parameters) -> CheckResult:
    return _result(name, expected == actual, format_poly(expected), format_poly(actual), **parameters)


# ---------------------------------------------------------------------------
# 组合与作用
# ---------------------------------------------------------------------------

def check_bijection(n_max: int, order: int) -> list[CheckResult]:
    """|F^k(B(n−1))| = S₂(n+k, k+1)，且双射往返为恒等。"""
    out = []
    for n in range(2, n_max + 1):
        layers: dict[int, int] = {}
        roundtrip = True
        for s in enumerate_B(n):
            layers[len(s) - 1] = layers.get(len(s) - 1, 0) + 1
            if partition_to_nested(nested_to_partition(s), n) != s:
                roundtrip = False
        for k in range(n - 1):
            expected = stirling2_assoc(n + k, k + 1)
            out.append(_result("bijection_count", layers.get(k, 0) == expected, expected, layers.get(k, 0), n=n, k=k))
        out.append(_result("bijection_roundtrip", roundtrip, True, roundtrip, n=n))
    return out


def check_action(n_max: int, order: int) -> list[CheckResult]:
    """生成元作用保持 laminar；小 n 上验证群作用的相容性。"""
    out = []
    for n in range(2, n_max + 1):
        space = enumerate_B(n)
        try:
            for g, s in product(adjacent_transpositions(n), space):
                act_nested(g, s)
            ok = True
        except WonderfulBraidError:
            ok = False
        out.append(_result("action_laminar", ok, True, ok, n=n))
    for n in range(2, min(n_max, 5) + 1):
        space = enumerate_B(n)
        group = [ExtPermutation.from_sympy(p, n) for p in SymmetricGroup(n + 1).generate()]
        ok = all(
            act_nested(sigma.compose(tau), s) == act_nested(sigma, act_nested(tau, s))
            for sigma in group
            for tau in adjacent_transpositions(n)
            for s in space
        )
        out.append(_result("action_composition", ok, True, ok, n=n))
    return out


def check_closure(n_max: int, order: int) -> list[CheckResult]:
    out = []
    for n in range(3, n_max + 1):
        closure = building_closure(closure_seed(n), n)
        expected = frozenset(enumerate_B(n))
        out.append(_result("closure_is_everything", closure == expected, len(expected), len(closure), n=n))
    return out


def check_orbits(n_max: int, order: int) -> list[CheckResult]:
    """BFS 轨道数与 Burnside 计数一致。"""
    out = []
    for n, k in product(range(2, n_max + 1), range(1, n_max)):
        if k > n - 2:
            continue
        for mode in OrbitMode:
            limit = 6 if mode is OrbitMode.FULL else 7
            if n + k > limit:
                continue
            bfs = orbit_count(k, n, mode)
            burnside = orbit_count_burnside(k, n, mode)
            out.append(_result("orbit_burnside", bfs == burnside, burnside, bfs, n=n, k=k, mode=mode.value))
    if n_max >= 5:
        natural = orbit_count(3, 5, OrbitMode.NATURAL)
        extended = orbit_count(3, 5, OrbitMode.EXTENDED)
        out.append(_result("orbit_natural_vs_extended", (natural, extended) == (3, 4), (3, 4), (natural, extended)))
    return out


def check_labelled_partitions(n_max: int, order: int) -> list[CheckResult]:
    out = []
    for n in range(2, n_max + 1):
        image = [monomial_to_labelled_partition(m) for m in enumerate_yuz(BuildingSet.MINIMAL, None, n)]
        expected = set(iter_labelled_partitions(n))
        ok = len(image) == len(set(image)) and set(image) == expected
        out.append(_result("labelled_partitions", ok, len(expected), len(set(image)), n=n))
    return out


# ---------------------------------------------------------------------------
# 生成函数
# ---------------------------------------------------------------------------

PRINTED_P = {3: [1, 1], 4: [1, 5, 1], 5: [1, 16, 16, 1]}


def check_minimal(n_max: int, order: int) -> list[CheckResult]:
    out = []
    phi = phi_series(max(order, n_max))
    for n in range(2, n_max + 1):
        enumerated = poincare("minimal", n)
        out.append(_compare_poly("minimal_phi_vs_basis", enumerated, phi.egf_coefficient(n), n=n))
        out.append(_result("minimal_palindromic", is_palindromic(enumerated, n - 2), n - 2, format_poly(enumerated), n=n))
        if n in PRINTED_P:
            out.append(_compare_poly("minimal_printed", q_poly(PRINTED_P[n]), enumerated, n=n))
    return out


def check_maximal(n_max: int, order: int) -> list[CheckResult]:
    out = []
    for n in range(2, n_max + 1):
        p = poincare("maximal", n)
        out.append(_result("maximal_palindromic", is_palindromic(p, n - 2), n - 2, format_poly(p), n=n))
    return out


def check_xi(n_max: int, order: int) -> list[CheckResult]:
    top = min(n_max, order)
    formula = xi_series(top)
    direct = xi_direct(top)
    return [
        _compare_poly("xi_formula_vs_direct", direct.egf_coefficient(n), formula.egf_coefficient(n), n=n)
        for n in range(1, top + 1)
    ]


def check_supermax(n_max: int, order: int) -> list[CheckResult]:
    """代换路线与基枚举路线一致，且多项式回文。"""
    out = []
    series = phi_super_series(max(n_max, 2))
    for n in range(2, n_max + 1):
        basis = poincare("supermaximal", n)
        out.append(_compare_poly("supermax_substitution", basis, series.egf_coefficient(n), n=n))
        out.append(_result("supermax_palindromic", is_palindromic(basis, n - 2), n - 2, format_poly(basis), n=n))
    return out


def check_euler(n_max: int, order: int) -> list[CheckResult]:
    out = []
    top = max(n_max, 2)
    real = euler_real_series(top)
    for n in range(2, n_max + 1):
        value = real.egf_coefficient(n)
        at_minus_one = poincare("supermaximal", n)
        expected = sum(c * (-1) ** exp[0] for exp, c in at_minus_one.items())
        ok = value == poly_from_terms({(0, 0, 0): expected})
        if n % 2 == 1:
            ok = ok and not value
        out.append(_result("euler_real", ok, expected, format_poly(value), n=n))
    return out


def check_bigpsi(n_max: int, order: int) -> list[CheckResult]:
    out = []
    top = max(order, 8)
    formula = bigpsi_formula(top)
    direct = bigpsi_direct(top)
    out.append(_result("bigpsi_formula_vs_direct", formula == direct, "equal", "equal" if formula == direct else "differ", order=top))
    # 提取公式固定核对到 n = 7
    n_top = max(n_max, 7)
    psi = bigpsi_formula(2 * n_top - 2)
    for n in range(2, n_top + 1):
        out.append(_compare_poly("bigpsi_extraction", poincare("minimal", n), extract_poincare_from_bigpsi(n, psi), n=n))
    return out


def check_trees(n_max: int, order: int) -> list[CheckResult]:
    top = min(order, 6)
    ok = tree_sum_check(top)
    return [_result("tree_sum", ok, True, ok, order=top)]


def check_substitutions(n_max: int, order: int) -> list[CheckResult]:
    out = []
    for r in range(order + 1):
        out.append(_compare_poly("z_substitution_forms", z_substitution_chain(r), z_substitution(r), r=r))
    printed = {0: 1, 2: -1, 4: 5, 6: -61}
    for r, value in printed.items():
        if r <= order:
            out.append(_result("euler_secant", euler_secant(r) == value, value, euler_secant(r), r=r))
    return out


def check_integrality(n_max: int, order: int) -> list[CheckResult]:
    """所有具名 EGF 的 n!·c_n 都是整系数。"""
    named = {
        "phi": phi_series(order),
        "psi": psi_series(order),
        "gamma": gamma_series(order),
        "xi": xi_series(order),
        "phisuper": phi_super_series(order),
        "eulerreal": euler_real_series(order),
        "bigpsi": bigpsi_formula(order),
    }
    out = []
    for name, series in named.items():
        try:
            for n in range(series.order + 1):
                series.egf_coefficient(n)
            ok = True
        except WonderfulBraidError:
            ok = False
        out.append(_result("integrality", ok, True, ok, series=name))
    return out


CHECKS: dict[str, CheckFunc] = {
    "action": check_action,
    "bigpsi": check_bigpsi,
    "bijection": check_bijection,
    "closure": check_closure,
    "euler": check_euler,
    "integrality": check_integrality,
    "labelled_partitions": check_labelled_partitions,
    "maximal": check_maximal,
    "minimal": check_minimal,
    "orbits": check_orbits,
    "substitutions": check_substitutions,
    "supermax": check_supermax,
    "trees": check_trees,
    "xi": check_xi,
}


# ---------------------------------------------------------------------------
# 执行
# ---------------------------------------------------------------------------

def _run_one(name: str, n_max: int, order: int) -> list[CheckResult]:
    try:
        return CHECKS[name](n_max, order)
    except Exception as exc:
        logger.exception("检查 %s 抛出异常", name)
        return [CheckResult(name=name, status="fail", expected="no error", actual=f"{type(exc).__name__}: {exc}")]


def _progress(items: Iterable, total: int, enabled: bool):
    if not enabled:
        return items
    try:
        from tqdm import tqdm
    except ImportError:
        print("提示: 安装 tqdm 可显示进度条 (pip install tqdm)", file=sys.stderr)
        return items
    return tqdm(items, total=total, desc="verify", unit="check", file=sys.stderr)


def run_checks(
    n_max: int,
    order: int,
    *,
    names: Iterable[str] | None = None,
    workers: int = 1,
    progress: bool = False,
) -> VerificationReport:
    """运行选定的检查并汇总成报告。

    Args:
        n_max: 枚举的 n 上限。
        order: 级数截断阶。
        names: 只运行这些检查；None 表示全部。
        workers: 进程数，1 表示在当前进程顺序执行。
        progress: 是否在 stderr 显示进度条。

    Returns:
        按检查名排序的 VerificationReport。
    """
    selected = sorted(CHECKS) if names is None else sorted(names)
    unknown = [name for name in selected if name not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {unknown}")

    results: list[CheckResult] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = pool.map(_run_one, selected, [n_max] * len(selected), [order] * len(selected))
            for batch in _progress(batches, len(selected), progress):
                results.extend(batch)
    else:
        for name in _progress(selected, len(selected), progress):
            results.extend(_run_one(name, n_max, order))

    report = VerificationReport.from_checks(results)
    failed = [c for c in report.checks if c.status != "pass"]
    for c in failed:
        logger.warning("检查失败: %s %s 期望=%s 实际=%s", c.name, c.parameters, c.expected, c.actual)
    logger.info("验证完成: %d 条检查, %d 条失败", len(report.checks), len(failed))
    return report

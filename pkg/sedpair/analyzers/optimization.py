"""
SED-pair 工具包 - 极小极大系统求解与数值证书

三组约束优化：
- (y, k) 系统：M(y, k) = max(y² − k²/2, −y(1−k−y)/2)，下界常数 −1/25
- 受限类的 G 分支（α ∈ [1/2, 1]）与 H 分支（α ∈ [0, 1/2]），各分两种情形，下界常数 −1/54

求解方式统一为：网格求值 → 嵌套有界一维细化 → 与闭式结果交叉检查。
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Dict, List, Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar

from ..builders.extremal import g_func, h_func
from ..core.errors import ContractError, DomainError, InvalidSpecError, SingularityError

FLOOR_25 = -1.0 / 25.0
FLOOR_54 = -1.0 / 54.0

VALUE_TOL = 1.0e-8
ARGMIN_TOL = 1.0e-4
BALANCE_TOL = 1.0e-10
CASE1_MARGIN = 1.0e-3
STRICT_MARGIN = 1.0e-4

DEFAULT_GRID_STEP = 1.0e-3
DEFAULT_REFINE_TOL = 1.0e-9

Objective = Callable[[np.ndarray, np.ndarray], np.ndarray]


class MinimaxSystem(str, Enum):
    """可证书化的优化系统"""

    APPENDIX_A = 'a'
    APPENDIX_B_CASE1 = 'b1'
    APPENDIX_B_CASE2 = 'b2'
    APPENDIX_C_CASE1 = 'c1'
    APPENDIX_C_CASE2 = 'c2'


class WeightBranch(str, Enum):
    """W(α) 的取法"""

    G = 'G'
    H = 'H'


@dataclass
class MinimaxCertificate:
    """网格加细化得到的数值证书"""

    system: MinimaxSystem
    grid_step: float
    refined_tolerance: float
    min_value: float
    argmin: Tuple[float, float]
    floor: float
    passed: bool
    checks: Dict[str, float] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.grid_step > 0:
            raise InvalidSpecError(f"网格步长必须为正: {self.grid_step}")

    @property
    def margin(self) -> float:
        """min_value − floor"""
        return self.min_value - self.floor


# =========================================================================
# 定义域辅助
# =========================================================================

def _unit(values, name: str, open_low: bool = False, open_high: bool = False) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    low_bad = arr <= 0.0 if open_low else arr < 0.0
    high_bad = arr >= 1.0 if open_high else arr > 1.0
    if np.any(np.isnan(arr)) or np.any(low_bad) or np.any(high_bad):
        lo = '(' if open_low else '['
        hi = ')' if open_high else ']'
        raise DomainError(f"{name} 必须在 {lo}0, 1{hi} 内: {values}")
    return arr


def _out(values: np.ndarray, *inputs) -> Union[float, np.ndarray]:
    if all(np.ndim(x) == 0 for x in inputs):
        return float(values)
    return values


def weight_function(branch: Union[WeightBranch, str]) -> Callable:
    """返回 W(α)：G 分支为 α^{3/2}，H 分支为 (1−√(1−α))(√(1−α)+α)"""
    return g_func if WeightBranch(branch) == WeightBranch.G else h_func


def _sqrt_w(branch, alpha) -> np.ndarray:
    return np.sqrt(np.asarray(weight_function(branch)(alpha), dtype=float))


# =========================================================================
# (y, k) 系统
# =========================================================================

def appendix_a_t(y):
    """T(y) = y − y(y + √(5y² + 4y))/2，y ∈ [0, 1]"""
    arr = _unit(y, "y")
    r = np.sqrt(5.0 * arr * arr + 4.0 * arr)
    return _out(arr - arr * (arr + r) / 2.0, y)


def appendix_a_t_prime(y):
    """
    T′(y) = −(y + r)(5y − 1)(y + 1) / (r(r + 1))，r = √(5y² + 4y)

    y = 0 处 r = 0，因此定义域为 (0, 1]。
    """
    arr = _unit(y, "y", open_low=True)
    r = np.sqrt(5.0 * arr * arr + 4.0 * arr)
    return _out(-(arr + r) * (5.0 * arr - 1.0) * (arr + 1.0) / (r * (r + 1.0)), y)


def balance_k(y):
    """k₁(y) = (−y + √(5y² + 4y))/2，使两个分支相等"""
    arr = _unit(y, "y")
    return _out((-arr + np.sqrt(5.0 * arr * arr + 4.0 * arr)) / 2.0, y)


def appendix_a_branches(y, k):
    """(y² − k²/2, −y(1 − k − y)/2)"""
    y_arr, k_arr = _unit(y, "y"), _unit(k, "k")
    first = y_arr * y_arr - k_arr * k_arr / 2.0
    second = -y_arr * (1.0 - k_arr - y_arr) / 2.0
    return _out(first, y, k), _out(second, y, k)


def appendix_a_objective(y, k):
    """M(y, k)，两个分支的较大者"""
    first, second = appendix_a_branches(y, k)
    return _out(np.maximum(first, second), y, k)


# =========================================================================
# 受限类：情形 1（K ≥ 1/2，B = b√(K/(1−K))）
# =========================================================================

def q_case1(branch, alpha, K):
    """
    q(α, K) = α/2·K² − (√W(α)/2)·√(1−K)·K^{3/2}

    K = 1 时第二项为 0，即 b 的可行上界 (1−K)/K → 0 时的极限值。
    """
    a, k = _unit(alpha, "α"), _unit(K, "K")
    w = _sqrt_w(branch, a)
    return _out(a / 2.0 * k * k - w / 2.0 * np.sqrt(1.0 - k) * k ** 1.5, alpha, K)


def dq_case1_dK(branch, alpha, K):
    """∂q/∂K = αK − √W(3 − 4K) / (4√((1−K)/K))，K ∈ (0, 1)"""
    a = _unit(alpha, "α")
    k = _unit(K, "K", open_low=True, open_high=True)
    w = _sqrt_w(branch, a)
    return _out(a * k - w * (3.0 - 4.0 * k) / (4.0 * np.sqrt((1.0 - k) / k)), alpha, K)


def _case1_quadratic_roots(w_sq: np.ndarray, alpha: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    # (α² + W)K² − (3W/2 + α²)K + 9W/16 = 0
    a2 = alpha * alpha
    disc = np.sqrt(0.75 * w_sq * a2 + a2 * a2)
    mid = 1.5 * w_sq + a2
    denom = 2.0 * (a2 + w_sq)
    return (mid + disc) / denom, (mid - disc) / denom


def stationary_roots_case1(branch, alpha: float) -> Tuple[float, float]:
    """
    驻点方程平方后的两个根 (K₁, K₂)，K₁ ≥ K₂

    Raises:
        DomainError: α 不在 (0, 1] 内
        ContractError: K₁ ≤ 3/4；或 G 分支在 α ≥ 1/2 时 K₂ ≥ 1/2
    """
    alpha = float(alpha)
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"α 必须在 (0, 1] 内: {alpha}")

    w_sq = float(weight_function(branch)(alpha))
    k1, k2 = _case1_quadratic_roots(np.float64(w_sq), np.float64(alpha))
    k1, k2 = float(k1), float(k2)

    if not k1 > 0.75:
        raise ContractError(f"α={alpha}: K₁={k1} 不大于 3/4")
    if WeightBranch(branch) == WeightBranch.G and alpha >= 0.5 and not k2 < 0.5:
        raise ContractError(f"α={alpha}: G 分支的 K₂={k2} 不小于 1/2")
    return k1, k2


def case1_quadratic_residual(branch, alpha: float, K: float) -> float:
    """(α² + W)K² − (3W/2 + α²)K + 9W/16"""
    w_sq = float(weight_function(branch)(alpha))
    a2 = alpha * alpha
    return (a2 + w_sq) * K * K - (1.5 * w_sq + a2) * K + 9.0 * w_sq / 16.0


# =========================================================================
# 受限类：情形 2（K ≤ 1/2，B = b = √W(1−K)）
# =========================================================================

def q_case2(branch, alpha, K):
    """q(α, K) = α/2·K² − √W(α)·(1−K)·K²"""
    a, k = _unit(alpha, "α"), _unit(K, "K")
    w = _sqrt_w(branch, a)
    return _out(a / 2.0 * k * k - w * (1.0 - k) * k * k, alpha, K)


def dq_case2_dK(branch, alpha, K):
    """∂q/∂K = αK − √W(2K − 3K²)"""
    a, k = _unit(alpha, "α"), _unit(K, "K")
    w = _sqrt_w(branch, a)
    return _out(a * k - w * (2.0 * k - 3.0 * k * k), alpha, K)


def k0(branch, alpha):
    """
    K₀(α) = (2√W − α)/(3√W)

    Raises:
        SingularityError: W(α) = 0
    """
    a = _unit(alpha, "α")
    w = _sqrt_w(branch, a)
    if np.any(w == 0.0):
        raise SingularityError(f"W(α) = 0 时 K₀ 无定义: α={alpha}")
    return _out((2.0 * w - a) / (3.0 * w), alpha)


def q_case2_at_k0(branch, alpha):
    """闭式 q(α, K₀(α)) = (√W/54)(α/√W − 2)³"""
    a = _unit(alpha, "α")
    w = _sqrt_w(branch, a)
    if np.any(w == 0.0):
        raise SingularityError(f"W(α) = 0 时 K₀ 无定义: α={alpha}")
    return _out(w / 54.0 * (a / w - 2.0) ** 3, alpha)


# =========================================================================
# 网格与细化
# =========================================================================

def _axis(bounds: Tuple[float, float], step: float) -> np.ndarray:
    lo, hi = bounds
    count = max(1, int(round((hi - lo) / step)))
    return np.linspace(lo, hi, count + 1)


def grid_minimum(objective: Objective, x_bounds: Tuple[float, float], y_bounds: Tuple[float, float],
                 step: float, workers: int = 1) -> Tuple[float, Tuple[float, float]]:
    """
    在矩形网格上求最小值

    第一维按行分块，可用线程池并行；并列时取字典序最小的网格点，结果与线程数无关。

    Returns:
        (最小值, (x, y))
    """
    if not step > 0:
        raise InvalidSpecError(f"网格步长必须为正: {step}")

    xs = _axis(x_bounds, step)
    ys = _axis(y_bounds, step)
    rows_per_chunk = max(1, len(xs) // (max(1, workers) * 4))
    chunks = [slice(start, min(start + rows_per_chunk, len(xs))) for start in range(0, len(xs), rows_per_chunk)]

    def evaluate(rows: slice):
        X, Y = np.meshgrid(xs[rows], ys, indexing='ij')
        values = np.asarray(objective(X, Y), dtype=float)
        i, j = np.unravel_index(int(np.argmin(values)), values.shape)
        return float(values[i, j]), (rows.start + int(i), int(j))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(evaluate, chunks))
    else:
        results = [evaluate(chunk) for chunk in chunks]

    value, (i, j) = min(results)
    return value, (float(xs[i]), float(ys[j]))


def refine_minimum(objective: Callable[[float, float], float], start: Tuple[float, float],
                   x_bounds: Tuple[float, float], y_bounds: Tuple[float, float],
                   step: float, tol: float) -> Tuple[float, Tuple[float, float]]:
    """
    以网格最优点为中心做嵌套有界一维最小化

    外层在 x ± 2·step 内搜索，内层在 y 的整个区间上搜索（各系统在 y 方向单峰）。
    """
    x_lo = max(x_bounds[0], start[0] - 2.0 * step)
    x_hi = min(x_bounds[1], start[0] + 2.0 * step)
    options = {'xatol': tol}

    def inner(x: float):
        return minimize_scalar(lambda y: float(objective(x, y)), bounds=y_bounds, method='bounded', options=options)

    outer = minimize_scalar(lambda x: float(inner(x).fun), bounds=(x_lo, x_hi), method='bounded', options=options)
    best = inner(float(outer.x))
    return float(best.fun), (float(outer.x), float(best.x))


def _grid_then_refine(objective: Objective, x_bounds, y_bounds, step: float, tol: float, workers: int):
    grid_value, grid_point = grid_minimum(objective, x_bounds, y_bounds, step, workers)
    refined_value, refined_point = refine_minimum(objective, grid_point, x_bounds, y_bounds, step, tol)
    if refined_value < grid_value:
        return refined_value, refined_point, grid_value
    return grid_value, grid_point, grid_value


def _samples(bounds: Tuple[float, float], step: float, open_low: bool = False) -> np.ndarray:
    xs = _axis(bounds, step)
    return xs[xs > 0.0] if open_low else xs


# =========================================================================
# 证书
# =========================================================================

def appendix_a_minimax(grid_step: float = DEFAULT_GRID_STEP, refine_tol: float = DEFAULT_REFINE_TOL,
                       workers: int = 1) -> MinimaxCertificate:
    """
    证明 min M(y, k) = −1/25，在 (1/5, 2/5) 处取到

    同时检查平衡曲线 k₁(y) 在 y ∈ [0.01, 0.99] 上使两分支相等。
    """
    value, point, grid_value = _grid_then_refine(appendix_a_objective, (0.0, 1.0), (0.0, 1.0),
                                                 grid_step, refine_tol, workers)

    ys = _samples((0.01, 0.99), grid_step)
    first, second = appendix_a_branches(ys, balance_k(ys))
    balance_error = float(np.max(np.abs(first - second)))

    # min_k M(y, k) = −T(y)/2
    t_min = -appendix_a_t(0.2) / 2.0

    distance = max(abs(point[0] - 0.2), abs(point[1] - 0.4))
    passed = abs(value - FLOOR_25) <= VALUE_TOL and distance <= ARGMIN_TOL and balance_error <= BALANCE_TOL

    return MinimaxCertificate(
        system=MinimaxSystem.APPENDIX_A,
        grid_step=grid_step,
        refined_tolerance=refine_tol,
        min_value=value,
        argmin=point,
        floor=FLOOR_25,
        passed=passed,
        checks={
            'grid_min': grid_value,
            'balance_max_error': balance_error,
            'closed_form_min': t_min,
            't_prime_at_fifth': appendix_a_t_prime(0.2),
        },
        notes=[f"argmin 与 (0.2, 0.4) 的距离 {distance:.3e}"],
    )


_REGIONS = {
    MinimaxSystem.APPENDIX_B_CASE1: (WeightBranch.G, (0.5, 1.0), (0.5, 1.0)),
    MinimaxSystem.APPENDIX_B_CASE2: (WeightBranch.G, (0.5, 1.0), (0.0, 0.5)),
    MinimaxSystem.APPENDIX_C_CASE1: (WeightBranch.H, (0.0, 0.5), (0.5, 1.0)),
    MinimaxSystem.APPENDIX_C_CASE2: (WeightBranch.H, (0.0, 0.5), (0.0, 0.5)),
}


def _case1_checks(branch: WeightBranch, alphas: np.ndarray) -> Dict[str, float]:
    checks = {
        'k_half_min': float(np.min(q_case1(branch, alphas, 0.5))),
        'k_one_min': float(np.min(q_case1(branch, alphas, 1.0))),
    }
    positive = alphas[alphas > 0.0]
    w_sq = np.asarray(weight_function(branch)(positive), dtype=float)
    k1, k2 = _case1_quadratic_roots(w_sq, positive)
    checks['k1_min'] = float(np.min(k1))
    checks['k2_max'] = float(np.max(k2))

    inside = k2 > 0.5
    if np.any(inside):
        checks['k2_branch_min'] = float(np.min(q_case1(branch, positive[inside], k2[inside])))
    return checks


def _case2_checks(branch: WeightBranch, alphas: np.ndarray) -> Dict[str, float]:
    positive = alphas[alphas > 0.0]
    k0_values = np.asarray(k0(branch, positive))
    return {
        'k0_curve_min': float(np.min(q_case2_at_k0(branch, positive))),
        'k0_max': float(np.max(k0_values)),
        'k_half_min': float(np.min(q_case2(branch, alphas, 0.5))),
    }


def certify_floor(system: Union[MinimaxSystem, str], grid_step: float = DEFAULT_GRID_STEP,
                  refine_tol: float = DEFAULT_REFINE_TOL, workers: int = 1) -> MinimaxCertificate:
    """
    对指定系统做网格加细化，并给出是否满足下界的证书

    Args:
        system: 系统标识
        grid_step: 网格步长
        refine_tol: 细化精度
        workers: 网格求值线程数

    Returns:
        MinimaxCertificate
    """
    system = MinimaxSystem(system)
    if system == MinimaxSystem.APPENDIX_A:
        return appendix_a_minimax(grid_step, refine_tol, workers)

    branch, alpha_bounds, k_bounds = _REGIONS[system]
    case1 = system in (MinimaxSystem.APPENDIX_B_CASE1, MinimaxSystem.APPENDIX_C_CASE1)
    q = q_case1 if case1 else q_case2

    def objective(alpha, K):
        return q(branch, alpha, K)

    value, point, grid_value = _grid_then_refine(objective, alpha_bounds, k_bounds, grid_step, refine_tol, workers)
    alphas = _samples(alpha_bounds, grid_step)
    checks = {'grid_min': grid_value}
    checks.update(_case1_checks(branch, alphas) if case1 else _case2_checks(branch, alphas))
    notes = []

    if system == MinimaxSystem.APPENDIX_B_CASE2:
        distance = max(abs(point[0] - 1.0), abs(point[1] - 1.0 / 3.0))
        passed = abs(value - FLOOR_54) <= VALUE_TOL and distance <= ARGMIN_TOL
        passed = passed and abs(checks['k0_curve_min'] - FLOOR_54) <= VALUE_TOL
        notes.append(f"argmin 与 (1, 1/3) 的距离 {distance:.3e}")
    elif system == MinimaxSystem.APPENDIX_B_CASE1:
        passed = value >= FLOOR_54 + CASE1_MARGIN
        passed = passed and checks['k1_min'] > 0.75 and checks['k2_max'] < 0.5
        passed = passed and min(checks['k_half_min'], checks['k_one_min']) >= FLOOR_54 + CASE1_MARGIN
    elif system == MinimaxSystem.APPENDIX_C_CASE1:
        curve_min = min(checks['k_half_min'], checks['k_one_min'], checks.get('k2_branch_min', math.inf))
        passed = value > FLOOR_54 + STRICT_MARGIN and curve_min > FLOOR_54 + STRICT_MARGIN
        passed = passed and checks['k1_min'] > 0.75
        notes.append("K₂ 分支只在 K₂ > 1/2 处检查")
    else:
        # K₀ 可能大于 1/2，此时闭式值只是约束最小值的下界
        passed = value > FLOOR_54 + STRICT_MARGIN and checks['k0_curve_min'] > FLOOR_54 + STRICT_MARGIN
        if checks['k0_max'] > 0.5:
            notes.append("部分 α 上 K₀ > 1/2，闭式曲线作为下界使用")

    return MinimaxCertificate(
        system=system,
        grid_step=grid_step,
        refined_tolerance=refine_tol,
        min_value=value,
        argmin=point,
        floor=FLOOR_54,
        passed=bool(passed),
        checks=checks,
        notes=notes,
    )


# =========================================================================
# 曲线导出
# =========================================================================

@dataclass(frozen=True)
class Curve:
    """一条采样曲线：列名与 (行数, 列数) 数组"""

    columns: Tuple[str, ...]
    rows: np.ndarray


def figure_curves(step: float = DEFAULT_GRID_STEP) -> Dict[str, Curve]:
    """
    生成全部采样曲线（各 q 值都加上 1/54，正值表示高于下界）
    """
    if not step > 0:
        raise InvalidSpecError(f"采样步长必须为正: {step}")

    shift = -FLOOR_54
    b_alphas = _samples((0.5, 1.0), step)
    c_alphas = _samples((0.0, 0.5), step)
    c_positive = _samples((0.0, 0.5), step, open_low=True)

    w_sq = np.asarray(h_func(c_positive), dtype=float)
    _, k2 = _case1_quadratic_roots(w_sq, c_positive)

    ys = _samples((0.0, 1.0), step)
    ks = np.asarray(balance_k(ys))

    def pair(xs, values):
        return Curve(('alpha', 'value'), np.column_stack([xs, values]))

    return {
        'b_case1_k_half': pair(b_alphas, q_case1(WeightBranch.G, b_alphas, 0.5) + shift),
        'b_case2_k0': pair(b_alphas, q_case2_at_k0(WeightBranch.G, b_alphas) + shift),
        'c_case1_k2': pair(c_positive, q_case1(WeightBranch.H, c_positive, k2) + shift),
        'c_case1_k2_minus_half': pair(c_positive, k2 - 0.5),
        'c_case1_k_half': pair(c_alphas, q_case1(WeightBranch.H, c_alphas, 0.5) + shift),
        'c_case2_k0': pair(c_positive, q_case2_at_k0(WeightBranch.H, c_positive) + shift),
        'appendix_a_balance': Curve(('y', 'k', 'value'), np.column_stack([ys, ks, appendix_a_objective(ys, ks)])),
    }


def write_curves_csv(curves: Dict[str, Curve], directory: Union[str, Path], decimals: int = 6) -> List[Path]:
    """每条曲线写一个 CSV：表头一行，固定小数位，LF 换行"""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    written = []
    for name, curve in curves.items():
        path = directory / f"{name}.csv"
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            np.savetxt(f, curve.rows, fmt=f"%.{decimals}f", delimiter=',', newline='\n',
                       header=','.join(curve.columns), comments='')
        written.append(path)
    return written

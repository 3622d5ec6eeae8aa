"""
토러스 직교성 적분과 멜린 적분 점검

토러스는 격자 M Z[gamma]^v (트레이스 형식에 대한 쌍대 기저 w_j 의 M 배) 로 자른
K_inf 의 몫입니다. alpha 가 이 토러스의 지표이려면 M coords(alpha) 가 정수여야 합니다.
z(t) = sum_j t_j M w_j 로 매개화하면 등간격 곱 격자가 비자명 지표를 정확히 소거합니다.
"""

import math
from typing import Optional

import mpmath
import numpy as np

from config.settings import get_settings
from ..exceptions import NotLatticeCharacterError, QuadratureFailureError, ValidationError
from ..models.reports import MellinReport, OrthonormalityReport
from ..numfield import NFElem
from ..utils.logging import get_logger

logger = get_logger(__name__)


def _lattice_coords(alpha: NFElem, M: int):
    scaled = [M * c for c in alpha.coords]
    if any(c.denominator != 1 for c in scaled):
        raise NotLatticeCharacterError(
            f"지수 {alpha} 은(는) 스케일 {M} 토러스의 지표가 아닙니다",
            details={"scaled_coords": [str(c) for c in scaled]},
            suggestions=["M 을 지수 좌표 분모의 배수로 잡으세요"],
        )
    return [int(c) for c in scaled]


def torus_inner_product(
    alpha: NFElem,
    beta: NFElem,
    ideal_scale: int,
    quadrature_points: Optional[int] = None,
) -> OrthonormalityReport:
    """<psi_alpha, psi_beta> 의 곱 격자 추정"""
    field = alpha.field
    field.coerce(beta)
    if ideal_scale < 1:
        raise ValidationError("ideal_scale 은 1 이상이어야 합니다", field_name="ideal_scale",
                              field_value=ideal_scale)
    points = quadrature_points or get_settings().quadrature.torus_points
    d = field.degree
    k = [a - b for a, b in zip(_lattice_coords(alpha, ideal_scale), _lattice_coords(beta, ideal_scale))]
    n = max(1, round(points ** (1.0 / d)))
    if any(abs(kj) >= n for kj in k):
        raise ValidationError(
            f"격자 {n}^{d} 가 지표 차이 {k} 를 구별하기에 너무 거칩니다",
            field_name="quadrature_points", field_value=points,
        )

    # 기본 영역 [0,1)^d 의 균등 격자를 쌍대 기저로 K_inf 에 옮김
    axis = np.arange(n) / n
    grid = np.stack(np.meshgrid(*([axis] * d), indexing="ij"), axis=-1).reshape(-1, d)
    dual = np.array([field.embed(w) for w in field.dual_basis], dtype=float)  # dual[j, nu]
    points_inf = grid @ (ideal_scale * dual)
    diff = np.array(field.embed(alpha - beta), dtype=float)
    estimate = complex(np.mean(np.exp(2j * np.pi * (points_inf @ diff))))

    expected = 1.0 if alpha == beta else 0.0
    report = OrthonormalityReport(
        alpha=alpha.to_strings(),
        beta=beta.to_strings(),
        scale=ideal_scale,
        points=n ** d,
        estimate_re=estimate.real,
        estimate_im=estimate.imag,
        expected=expected,
        deviation=abs(estimate - expected),
    )
    logger.debug("토러스 내적 추정", points=report.points, deviation=report.deviation)
    return report


def mellin_spot_check(n: int, s: float, tolerance: Optional[float] = None) -> MellinReport:
    """int_0^inf e^{-2 pi n y} y^{s-1} dy 와 Gamma(s) (2 pi n)^{-s} 비교"""
    if n < 1 or s <= 0:
        raise ValidationError("n >= 1, s > 0 이어야 합니다", details={"n": n, "s": s})
    tolerance = tolerance if tolerance is not None else get_settings().quadrature.mellin_tolerance
    with mpmath.workdps(30):
        s_mp = mpmath.mpf(s)
        integrand = lambda y: mpmath.exp(-2 * mpmath.pi * n * y) * y ** (s_mp - 1)  # noqa: E731
        value, error = mpmath.quad(integrand, [0, 1, mpmath.inf], error=True)
        closed = mpmath.gamma(s_mp) * (2 * mpmath.pi * n) ** (-s_mp)
        reconstructed = (2 * mpmath.pi) ** s_mp / mpmath.gamma(s_mp) * value
        relative = abs(value - closed) / abs(closed)
    if float(error) > tolerance:
        raise QuadratureFailureError(float(error), tolerance)
    return MellinReport(
        n=n,
        s=s,
        quadrature_value=float(value),
        closed_form=float(closed),
        error_estimate=float(error),
        relative_error=float(relative),
        reconstructed=float(reconstructed),
        expected=math.pow(n, -s),
    )

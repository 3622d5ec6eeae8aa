"""
모듈러 형식 패키지

Delta 의 q-전개, t_p 와 정수 지수 사영, 두 계수 규약의 헤케 작용소,
들리뉴 한계 보고서와 l2 부분합 진단을 제공합니다.
"""

from .cusp import CuspFormCoeffs, delta_expansion, delta_by_euler_product
from .hecke import (
    t_p_polynomial,
    pr_QZ,
    hecke_Tp,
    hecke_direct,
    deligne_bound_report,
    l2_partial_sums,
)

__all__ = [
    "CuspFormCoeffs",
    "delta_expansion",
    "delta_by_euler_product",
    "t_p_polynomial",
    "pr_QZ",
    "hecke_Tp",
    "hecke_direct",
    "deligne_bound_report",
    "l2_partial_sums",
]

"""
갈루아 표현 패키지 (디리클레 지표의 직합)

오일러 인자 계수, 곱셈적 계수 함수 chi_rho, R_rho 작용,
자기사상 핸들의 boxplus 와 합성을 제공합니다.
"""

from .representation import GaloisRep, euler_factor_coeffs, chi_rho, R_rho
from .endomorphisms import (
    SeriesEndomorphism,
    IDENTITY,
    r_chi_handle,
    r_rho_handle,
    boxplus,
    compose,
)

__all__ = [
    "GaloisRep",
    "euler_factor_coeffs",
    "chi_rho",
    "R_rho",
    "SeriesEndomorphism",
    "IDENTITY",
    "r_chi_handle",
    "r_rho_handle",
    "boxplus",
    "compose",
]

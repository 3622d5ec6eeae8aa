"""
수체 패키지

Q 또는 완전실수 단순확대 K = Q(gamma) 의 정확한 산술, 대각합, 실수 임베딩,
부호, 갈루아 켤레를 제공합니다.
"""

from .element import NFElem
from .field import NumberField, rational_field, quadratic_field, to_fraction
from .signs import SignVector, resolve_signs
from .operations import nf_arith, trace, sign_of, galois_apply

__all__ = [
    "NFElem",
    "NumberField",
    "rational_field",
    "quadratic_field",
    "to_fraction",
    "SignVector",
    "resolve_signs",
    "nf_arith",
    "trace",
    "sign_of",
    "galois_apply",
]

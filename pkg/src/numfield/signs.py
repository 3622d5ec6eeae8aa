"""
부호 벡터와 부호 결정

Theta_K = {-, +}^d 의 원소를 다룹니다. 임베딩 순서는 근의 오름차순으로 고정합니다.
부호는 유리수 고립 구간 위의 구간 연산으로 결정하며, 정밀도를 두 배씩 올려도
상한 안에서 0 과 분리되지 않으면 UnresolvableSignError 를 냅니다.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Sequence

from mpmath import iv

from ..exceptions import DimensionMismatchError, UnresolvableSignError, ValidationError
from ..utils.logging import get_logger
from .element import NFElem

logger = get_logger(__name__)


@dataclass(frozen=True, order=True)
class SignVector:
    """임베딩별 부호 (+1/-1) 튜플"""

    signs: Tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise ValidationError("부호는 +1 또는 -1 이어야 합니다", field_name="signs",
                                  field_value=list(signs))
        object.__setattr__(self, "signs", signs)

    @classmethod
    def positive(cls, d: int) -> "SignVector":
        return cls((1,) * d)

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        """'+-' 또는 '(+,-)' 형식"""
        symbols = [ch for ch in text if ch in "+-"]
        return cls(tuple(1 if ch == "+" else -1 for ch in symbols))

    @property
    def dimension(self) -> int:
        return len(self.signs)

    def __mul__(self, other: "SignVector") -> "SignVector":
        if other.dimension != self.dimension:
            raise DimensionMismatchError(self.dimension, other.dimension)
        return SignVector(tuple(a * b for a, b in zip(self.signs, other.signs)))

    def is_diagonal(self) -> bool:
        """Theta_Q 의 대각 상 (모든 성분이 같음)"""
        return len(set(self.signs)) <= 1

    def permute(self, permutation: Sequence[int]) -> "SignVector":
        """(pi . theta)_nu = theta_{pi(nu)}"""
        if len(permutation) != self.dimension:
            raise DimensionMismatchError(self.dimension, len(permutation))
        return SignVector(tuple(self.signs[p] for p in permutation))

    def __str__(self) -> str:
        return "(" + ",".join("+" if s > 0 else "-" for s in self.signs) + ")"


def _interval(value: Fraction):
    return iv.mpf(value.numerator) / value.denominator


def _sign_at(x: NFElem, lower: Fraction, upper: Fraction, bits: int) -> int:
    """고립 구간 [lower, upper] 의 근에서 x 의 부호, 결정 못하면 0"""
    saved = iv.prec
    iv.prec = bits + 32
    try:
        root = iv.mpf([_interval(lower), _interval(upper)])
        value = iv.mpf(0)
        for c in reversed(x.coords):
            value = value * root + _interval(c)
        if value.a > 0:
            return 1
        if value.b < 0:
            return -1
        return 0
    finally:
        iv.prec = saved


def resolve_signs(x: NFElem) -> SignVector:
    """x 의 실수 임베딩 부호 벡터"""
    field = x.field
    if x.is_zero():
        raise ValidationError("0 의 부호는 정의되지 않습니다", field_name="x", field_value="0")
    if x.is_rational():
        return SignVector((1 if x.coords[0] > 0 else -1,) * field.degree)

    cap = field.sign_precision_cap_bits
    signs = [0] * field.degree
    bits = min(max(field.embedding_precision_bits, 53), cap)
    while True:
        intervals = field.isolating_intervals(bits)
        for nu, (lower, upper) in enumerate(intervals):
            if signs[nu] == 0:
                signs[nu] = _sign_at(x, lower, upper, bits)
        if all(signs):
            return SignVector(tuple(signs))
        if bits >= cap:
            unresolved = signs.index(0)
            logger.warning("부호 결정 실패", element=str(x), embedding=unresolved, cap=cap)
            raise UnresolvableSignError(unresolved, cap)
        logger.debug("부호 결정 정밀도 상향", element=str(x), bits=bits * 2)
        bits = min(bits * 2, cap)

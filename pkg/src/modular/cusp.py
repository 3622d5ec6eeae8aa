"""
첨점형식 q-전개 계수와 Delta 오라클

Delta = q prod (1 - q^n)^24 = q (sum_k (-1)^k (2k+1) q^{k(k+1)/2})^8 이므로
야코비 항등식의 희소 급수를 8 번 곱해 정수 계수를 얻습니다.
직접 오일러 곱 전개는 검증용 오라클로 함께 둡니다.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from config.settings import get_settings
from ..exceptions import CapExceededError, ValidationError
from ..series import ArithSeries, euler_product
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class CuspFormCoeffs:
    """가중치 k 첨점형식의 a_1..a_N (정수)"""

    weight: int
    N: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.weight < 12 or self.weight % 2:
            raise ValidationError("가중치는 12 이상의 짝수여야 합니다", field_name="weight",
                                  field_value=self.weight)
        if self.N < 1 or len(self.coeffs) != self.N:
            raise ValidationError(f"계수 개수가 N={self.N} 과 다릅니다", field_name="coeffs")
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.N:
            raise IndexError(f"색인 {n} 이(가) 1..{self.N} 범위를 벗어납니다")
        return self.coeffs[n - 1]

    def lambda_n(self, n: int) -> Fraction:
        """정규화 계수 a_n / n^{k/2}"""
        return Fraction(self[n], n ** (self.weight // 2))

    def to_series(self) -> ArithSeries:
        return ArithSeries(self.N, self.coeffs)

    def scale(self, c: int) -> "CuspFormCoeffs":
        return CuspFormCoeffs(self.weight, self.N, tuple(c * a for a in self.coeffs))

    def truncate(self, M: int) -> "CuspFormCoeffs":
        return CuspFormCoeffs(self.weight, M, self.coeffs[:M])


def _jacobi_series(length: int) -> Tuple[Tuple[int, int], ...]:
    """(지수, 계수) for sum (-1)^k (2k+1) q^{k(k+1)/2}, 지수 < length"""
    terms = []
    k = 0
    while k * (k + 1) // 2 < length:
        terms.append((k * (k + 1) // 2, (-1) ** k * (2 * k + 1)))
        k += 1
    return tuple(terms)


def delta_expansion(N: int, cap: Optional[int] = None) -> CuspFormCoeffs:
    """tau(1..N)"""
    cap = cap if cap is not None else get_settings().modular.delta_cap
    if N > cap:
        raise CapExceededError(N, cap, what="N")
    if N < 1:
        raise ValidationError("N 은 1 이상이어야 합니다", field_name="N", field_value=N)
    sparse = _jacobi_series(N)
    power = np.zeros(N, dtype=object)
    for shift, c in sparse:
        power[shift] = c
    for _ in range(7):
        nxt = np.zeros(N, dtype=object)
        for shift, c in sparse:
            nxt[shift:] += c * power[: N - shift]
        power = nxt
    logger.debug("Delta 전개 완료", N=N, jacobi_terms=len(sparse))
    return CuspFormCoeffs(12, N, tuple(int(a) for a in power))


def delta_by_euler_product(N: int) -> CuspFormCoeffs:
    """q prod_{n<=N} (1 - q^n)^24 의 직접 전개 (느린 오라클)"""
    eta24 = euler_product(N - 1, 24)
    return CuspFormCoeffs(12, N, tuple(int(a) for a in eta24.coeffs))

"""
Z>=0 색인 멱급수 (코시 곱 = 보통의 멱급수 곱)

a_0, ..., a_N 을 저장하며 곱과 역원은 q^{N+1} 이상을 버립니다.
필드 대수 원소(지수가 0 이상 정수)와 손실 없이 상호 변환됩니다.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from ..algebra import coefficients as coeffs
from ..algebra.coefficients import CoefficientDomain
from ..algebra.element import AlgElem
from ..exceptions import NonUnitError, NonIntegerSupportError, TruncationMismatchError, ValidationError
from ..numfield import NumberField, rational_field


@dataclass(frozen=True)
class PowerSeries:
    N: int
    coeffs: Tuple[Any, ...]
    domain: CoefficientDomain = CoefficientDomain.RATIONAL

    def __post_init__(self):
        if self.N < 0 or len(self.coeffs) != self.N + 1:
            raise ValidationError(
                f"멱급수는 a_0..a_N 의 {self.N + 1} 개 계수가 필요합니다",
                field_name="coeffs",
            )
        object.__setattr__(self, "coeffs", tuple(coeffs.coerce(v, self.domain) for v in self.coeffs))

    @classmethod
    def from_list(
        cls,
        values: Sequence[Any],
        N: int,
        domain: CoefficientDomain = CoefficientDomain.RATIONAL,
    ) -> "PowerSeries":
        """앞쪽 계수만 주고 나머지는 0 으로 채움 (N 을 넘는 계수는 버림)"""
        padded = list(values[: N + 1]) + [0] * max(0, N + 1 - len(values))
        return cls(N, tuple(padded), domain)

    @classmethod
    def one(cls, N: int, domain: CoefficientDomain = CoefficientDomain.RATIONAL) -> "PowerSeries":
        return cls.from_list([1], N, domain)

    def __getitem__(self, k: int) -> Any:
        return self.coeffs[k]

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if self.N != other.N:
            raise TruncationMismatchError(self.N, other.N)
        domain = coeffs.join_domains(self.domain, other.domain)
        out: List[Any] = [coeffs.zero(domain)] * (self.N + 1)
        for i, a in enumerate(self.coeffs):
            if coeffs.is_zero(a):
                continue
            for j in range(self.N + 1 - i):
                b = other.coeffs[j]
                if not coeffs.is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return PowerSeries(self.N, tuple(out), domain)

    def inverse(self) -> "PowerSeries":
        """f g = 1 + O(q^{N+1}) 인 g (표준 나눗셈 점화식)"""
        a0 = self.coeffs[0]
        if coeffs.is_zero(a0):
            raise NonUnitError("a_0 = 0 인 멱급수는 역원이 없습니다", truncation=self.N)
        scale = coeffs.one(self.domain) / a0
        out: List[Any] = [scale]
        for n in range(1, self.N + 1):
            acc = coeffs.zero(self.domain)
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if not coeffs.is_zero(a):
                    acc = acc + a * out[n - k]
            out.append(-acc * scale)
        return PowerSeries(self.N, tuple(out), self.domain)

    def to_alg_elem(self, field: Optional[NumberField] = None) -> AlgElem:
        field = field or rational_field()
        return AlgElem(field, tuple(enumerate(self.coeffs)), self.domain)

    @classmethod
    def from_alg_elem(cls, elem: AlgElem, N: int) -> "PowerSeries":
        values: List[Any] = [0] * (N + 1)
        for alpha, a in elem.terms:
            if not alpha.is_rational_integer() or alpha.as_fraction() < 0:
                raise NonIntegerSupportError(
                    f"지수 {alpha} 은(는) 0 이상의 정수가 아닙니다", truncation=N
                )
            k = int(alpha.as_fraction())
            if k <= N:
                values[k] = a
        return cls(N, tuple(values), elem.domain)


def euler_product(N: int, power: int) -> PowerSeries:
    """prod_{n <= N} (1 - q^n)^power 를 q^N 까지 (정수 계수)"""
    work = [0] * (N + 1)
    work[0] = 1
    for n in range(1, N + 1):
        for _ in range(power):
            for m in range(N, n - 1, -1):
                work[m] -= work[m - n]
    return PowerSeries(N, tuple(work))


def cauchy_inverse_powerseries(f: PowerSeries) -> PowerSeries:
    """a_0 != 0 인 멱급수의 역원"""
    return f.inverse()

"""
디리클레 지표

값은 각 잉여류 r mod N 에 대해 None (gcd(r, N) > 1) 또는 [0, 1) 의 유리수 각도 a
(chi(r) = exp(2 pi i a)) 로 저장합니다. 각도 덧셈으로 곱을 계산하므로 지표 사이의
항등식은 정확하게 성립합니다.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Any, Optional, Tuple

import sympy

from ..algebra import coefficients as coeffs
from ..algebra.coefficients import CoefficientDomain
from ..exceptions import CharacterError
from ..models.payloads import CharacterPayload

Angle = Optional[Fraction]


def root_of_unity(angle: Fraction, domain: CoefficientDomain) -> Any:
    """exp(2 pi i angle) 를 주어진 영역에서 (차수 1, 2, 4 는 정확값)"""
    angle = Fraction(angle) % 1
    m = angle.denominator
    if m == 1:
        value: Any = 1
    elif m == 2:
        value = -1
    elif m == 4:
        value = coeffs.gaussian(0, 1 if angle.numerator == 1 else -1)
    else:
        value = cmath.exp(2j * cmath.pi * float(angle))
    return coeffs.coerce(value, domain)


def domain_for_order(order: int) -> CoefficientDomain:
    if order <= 2:
        return CoefficientDomain.RATIONAL
    if order == 4:
        return CoefficientDomain.GAUSSIAN
    return CoefficientDomain.COMPLEX


@dataclass(frozen=True)
class DirichletCharacter:
    """chi: (Z/N)^x -> U(1), 비단원에서 0"""

    modulus: int
    values: Tuple[Angle, ...]

    def __post_init__(self):
        N = self.modulus
        if N < 1 or len(self.values) != N:
            raise CharacterError(f"값의 개수 {len(self.values)} 이(가) 모듈러스와 다릅니다", modulus=N)
        normalized = []
        for r, a in enumerate(self.values):
            unit = gcd(r, N) == 1
            if unit != (a is not None):
                raise CharacterError(
                    f"chi({r}) 은(는) gcd(r, N) > 1 일 때만 0 이어야 합니다", modulus=N
                )
            normalized.append(None if a is None else Fraction(a) % 1)
        object.__setattr__(self, "values", tuple(normalized))
        if self.values[1 % N] != 0:
            raise CharacterError("chi(1) = 1 이어야 합니다", modulus=N)

    def angle(self, n: int) -> Angle:
        return self.values[n % self.modulus]

    def value(self, n: int) -> Any:
        a = self.angle(n)
        if a is None:
            return coeffs.zero(self.domain)
        return root_of_unity(a, self.domain)

    @cached_property
    def order(self) -> int:
        return lcm(*(a.denominator for a in self.values if a is not None))

    @cached_property
    def domain(self) -> CoefficientDomain:
        return domain_for_order(self.order)

    def is_principal(self) -> bool:
        return all(a in (None, 0) for a in self.values)

    def factors_through(self, d: int) -> bool:
        """r = 1 mod d 인 모든 단원에서 chi(r) = 1"""
        return all(
            self.values[r] == 0
            for r in range(1, self.modulus, d)
            if self.values[r] is not None
        )

    @cached_property
    def conductor(self) -> int:
        for d in sympy.divisors(self.modulus):
            if self.factors_through(d):
                return d
        return self.modulus

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def is_completely_multiplicative(self) -> bool:
        """잉여류 위 전수 점검 (역직렬화 입력 검증용)"""
        N = self.modulus
        for r in range(N):
            for s in range(r, N):
                a, b, c = self.values[r], self.values[s], self.values[(r * s) % N]
                if (a is None or b is None) != (c is None):
                    return False
                if c is not None and (a + b) % 1 != c:
                    return False
        return True

    def to_payload(self) -> CharacterPayload:
        values = [
            [r, a.denominator, a.numerator]
            for r, a in enumerate(self.values) if a is not None
        ]
        return CharacterPayload(modulus=self.modulus, values=values)

    @classmethod
    def from_payload(cls, payload: CharacterPayload) -> "DirichletCharacter":
        N = payload.modulus
        table: list = [None] * N
        for r, m, k in payload.values:
            table[r % N] = Fraction(k, m)
        character = cls(N, tuple(table))
        if not character.is_completely_multiplicative():
            raise CharacterError("지표 값이 완전 곱셈적이지 않습니다", modulus=N)
        return character

    def __str__(self) -> str:
        return f"chi mod {self.modulus} (conductor {self.conductor}, order {self.order})"

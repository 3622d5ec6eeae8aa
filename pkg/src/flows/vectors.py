"""
K_inf 벡터, 표준 지표, 대각합과 대각 매장

K = Q(gamma) 의 실수 임베딩 순서(근의 오름차순)로 좌표를 둡니다.
표준 지표는 psi_alpha(z) = exp(2 pi i Tr(alpha z)) 이고 Tr 는 좌표의 합입니다.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal, Sequence, Tuple

from ..algebra import coefficients as coeffs
from ..algebra.element import AlgElem
from ..exceptions import DimensionMismatchError, ValidationError
from ..numfield import NFElem, NumberField


@dataclass(frozen=True)
class InfVector:
    """K_inf (또는 C_K) 의 점"""

    coords: Tuple[Any, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def __add__(self, other: "InfVector") -> "InfVector":
        if other.dimension != self.dimension:
            raise DimensionMismatchError(self.dimension, other.dimension)
        return InfVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, c: Any) -> "InfVector":
        return InfVector(tuple(c * a for a in self.coords))

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True)
class FlowParam:
    """흐름 시간 r (임베딩별 실수)"""

    r: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(float(x) for x in self.r))

    @classmethod
    def uniform(cls, value: float, d: int) -> "FlowParam":
        return cls((value,) * d)

    @property
    def dimension(self) -> int:
        return len(self.r)

    def __add__(self, other: "FlowParam") -> "FlowParam":
        if other.dimension != self.dimension:
            raise DimensionMismatchError(self.dimension, other.dimension)
        return FlowParam(tuple(a + b for a, b in zip(self.r, other.r)))

    def __neg__(self) -> "FlowParam":
        return FlowParam(tuple(-a for a in self.r))

    def require_dimension(self, d: int) -> None:
        if self.dimension != d:
            raise DimensionMismatchError(d, self.dimension)


def standard_character(alpha: NFElem, z: InfVector) -> complex:
    """exp(2 pi i sum_nu alpha_nu z_nu)"""
    embeddings = alpha.embeddings()
    if len(embeddings) != z.dimension:
        raise DimensionMismatchError(len(embeddings), z.dimension)
    phase = sum(a * complex(x) for a, x in zip(embeddings, z.coords))
    return cmath.exp(2j * cmath.pi * phase)


def evaluate_puiseux(f: AlgElem, z: InfVector) -> complex:
    """sum a_alpha exp(2 pi i Tr(alpha z))"""
    return sum(
        (coeffs.to_complex(a) * standard_character(alpha, z) for alpha, a in f.terms),
        0j,
    )


Direction = Literal["trace", "include", "section_check"]


def trace_and_diagonal(x: InfVector, direction: Direction, field: NumberField) -> InfVector:
    """
    K = Q 에 대한 대각합과 대각 매장

    - trace: d 차원 -> 1 차원 (좌표 합)
    - include: 1 차원 -> d 차원 (같은 값 복제)
    - section_check: Tr((1/d) i(x)), x 와 같아야 함
    """
    d = field.degree
    if direction == "trace":
        if x.dimension != d:
            raise DimensionMismatchError(d, x.dimension)
        return InfVector((sum(x.coords[1:], x.coords[0]),))
    if direction in ("include", "section_check"):
        if x.dimension != 1:
            raise DimensionMismatchError(1, x.dimension)
        included = InfVector(x.coords * d)
        if direction == "include":
            return included
        return trace_and_diagonal(included.scale(Fraction(1, d)), "trace", field)
    raise ValidationError(f"알 수 없는 방향입니다: {direction}", field_name="direction", field_value=direction)


def galois_permute(sigma: int, x: InfVector, field: NumberField) -> InfVector:
    """(sigma x)_nu = x_{pi_sigma(nu)}"""
    if x.dimension != field.degree:
        raise DimensionMismatchError(field.degree, x.dimension)
    perm: Sequence[int] = field.permutations[sigma]
    return InfVector(tuple(x.coords[perm[nu]] for nu in range(field.degree)))

"""
수체 원소 NFElem

K = Q(gamma) 의 원소를 거듭제곱 기저 1, gamma, ..., gamma^{d-1} 에 대한
정확한 유리수 좌표로 표현합니다. 좌표에서 동치, 해시, 전순서를 유도하므로
희소 사전의 키로 쓰면 순회 순서가 결정적입니다.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import TYPE_CHECKING, Tuple, Union, List

from ..exceptions import DivisionByZeroError, DimensionMismatchError, FieldMismatchError

if TYPE_CHECKING:
    from .field import NumberField

RationalLike = Union[int, Fraction]


@total_ordering
@dataclass(frozen=True, eq=False)
class NFElem:
    """수체 K 의 정확한 원소"""

    field: "NumberField"
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if len(coords) != self.field.degree:
            raise DimensionMismatchError(self.field.degree, len(coords))
        object.__setattr__(self, "coords", coords)

    def __eq__(self, other) -> bool:
        if isinstance(other, NFElem):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field.min_poly, self.coords))

    def __lt__(self, other: "NFElem") -> bool:
        other = self._coerce(other)
        return self.coords < other.coords

    def _coerce(self, other) -> "NFElem":
        if isinstance(other, NFElem):
            if other.field != self.field:
                raise FieldMismatchError(
                    "서로 다른 수체의 원소는 결합할 수 없습니다",
                    min_poly=list(self.field.min_poly),
                    details={"other_min_poly": list(other.field.min_poly)},
                )
            return other
        if isinstance(other, (int, Rational)):
            return self.field.from_rational(Fraction(other))
        raise TypeError(f"NFElem 과 결합할 수 없는 값입니다: {other!r}")

    def __add__(self, other) -> "NFElem":
        other = self._coerce(other)
        return NFElem(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "NFElem":
        return NFElem(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other) -> "NFElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "NFElem":
        return self._coerce(other) - self

    def __mul__(self, other) -> "NFElem":
        other = self._coerce(other)
        d = self.field.degree
        if d == 1:
            return NFElem(self.field, (self.coords[0] * other.coords[0],))
        product: List[Fraction] = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        product[i + j] += a * b
        return NFElem(self.field, self.field.reduce(product))

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        """곱셈 역원 (최소다항식 법으로 계산)"""
        if self.is_zero():
            raise DivisionByZeroError(details={"min_poly": list(self.field.min_poly)})
        if self.is_rational():
            return self.field.from_rational(1 / self.coords[0])
        return NFElem(self.field, self.field.invert_coords(self.coords))

    def __truediv__(self, other) -> "NFElem":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "NFElem":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "NFElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        """Q 에 속하는지 (gamma 의 거듭제곱 계수가 모두 0)"""
        return not any(self.coords[1:])

    def is_rational_integer(self) -> bool:
        """Z 에 속하는지"""
        return self.is_rational() and self.coords[0].denominator == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} 은(는) 유리수가 아닙니다")
        return self.coords[0]

    def embeddings(self) -> Tuple[float, ...]:
        """실수 임베딩 값 (근의 오름차순)"""
        return self.field.embed(self)

    def to_strings(self) -> List[str]:
        return [str(c) for c in self.coords]

    def __str__(self) -> str:
        if self.field.degree == 1:
            return str(self.coords[0])
        parts = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                power = "g" if i == 1 else f"g^{i}"
                parts.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"NFElem({self})"

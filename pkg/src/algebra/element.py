"""
필드 대수 원소 AlgElem

유한 형식합 f = sum a_alpha . alpha (alpha 는 수체 K 의 원소) 를 지수 -> 계수의 희소 사상으로
표현합니다. 0 계수는 저장하지 않으며 항은 NFElem 전순서로 정렬되어 직렬화가 결정적입니다.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterator, Mapping, Optional, Tuple

from ..exceptions import FieldMismatchError, CoefficientDomainError
from ..numfield import NumberField, NFElem
from . import coefficients as coeffs
from .coefficients import CoefficientDomain


@dataclass(frozen=True, eq=False)
class AlgElem:
    """C[K] 의 원소 (유한 지지집합)"""

    field: NumberField
    terms: Tuple[Tuple[NFElem, Any], ...]
    domain: CoefficientDomain = CoefficientDomain.RATIONAL

    def __post_init__(self):
        cleaned: Dict[NFElem, Any] = {}
        for exponent, value in self.terms:
            exponent = self.field.coerce(exponent)
            value = coeffs.coerce(value, self.domain)
            cleaned[exponent] = cleaned.get(exponent, coeffs.zero(self.domain)) + value
        ordered = tuple(sorted(
            ((e, v) for e, v in cleaned.items() if not coeffs.is_zero(v)),
            key=lambda item: item[0].coords,
        ))
        object.__setattr__(self, "terms", ordered)

    # === 생성자 ===

    @classmethod
    def from_dict(
        cls,
        field: NumberField,
        mapping: Mapping[Any, Any],
        domain: Optional[CoefficientDomain] = None,
    ) -> "AlgElem":
        """지수 -> 계수 사전에서 생성 (domain 생략 시 계수에서 추론)"""
        if domain is None:
            domain = coeffs.join_domains(
                CoefficientDomain.RATIONAL, *(coeffs.domain_of(v) for v in mapping.values())
            )
        return cls(field, tuple(mapping.items()), domain)

    @classmethod
    def zero(cls, field: NumberField, domain: CoefficientDomain = CoefficientDomain.RATIONAL) -> "AlgElem":
        return cls(field, (), domain)

    @classmethod
    def monomial(
        cls,
        field: NumberField,
        exponent: Any,
        coefficient: Any = 1,
        domain: CoefficientDomain = CoefficientDomain.RATIONAL,
    ) -> "AlgElem":
        """K -> C[K] 단항식 매장 alpha -> 1 . alpha"""
        return cls(field, ((exponent, coefficient),), domain)

    @classmethod
    def one_plus(cls, field: NumberField, domain: CoefficientDomain = CoefficientDomain.RATIONAL) -> "AlgElem":
        """코시 곱의 항등원 1_(+) (지수 0)"""
        return cls.monomial(field, 0, 1, domain)

    @classmethod
    def one_times(cls, field: NumberField, domain: CoefficientDomain = CoefficientDomain.RATIONAL) -> "AlgElem":
        """디리클레 곱의 항등원 1_(x) (지수 1)"""
        return cls.monomial(field, 1, 1, domain)

    # === 접근 ===

    @cached_property
    def as_dict(self) -> Dict[NFElem, Any]:
        return dict(self.terms)

    def __iter__(self) -> Iterator[Tuple[NFElem, Any]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, exponent: Any) -> Any:
        return self.as_dict.get(self.field.coerce(exponent), coeffs.zero(self.domain))

    def support(self) -> Tuple[NFElem, ...]:
        return tuple(e for e, _ in self.terms)

    def constant_term(self) -> Any:
        return self.coefficient(0)

    def is_zero(self) -> bool:
        return not self.terms

    # === 동치 ===

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.field == other.field and self.domain == other.domain and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.field, self.domain, self.terms))

    def is_close(self, other: "AlgElem", tolerance: float) -> bool:
        """계수별 허용오차 비교 (정확 영역끼리는 정확 비교)"""
        self._check_compatible(other, same_domain=False)
        keys = set(self.as_dict) | set(other.as_dict)
        return all(
            coeffs.close(self.coefficient(k), other.coefficient(k), tolerance) for k in keys
        )

    # === 벡터 공간 구조 ===

    def _check_compatible(self, other: "AlgElem", same_domain: bool = True) -> None:
        if self.field != other.field:
            raise FieldMismatchError(
                "서로 다른 수체 위의 원소입니다",
                min_poly=list(self.field.min_poly),
                details={"other_min_poly": list(other.field.min_poly)},
            )
        if same_domain and self.domain != other.domain:
            raise CoefficientDomainError(
                f"계수 영역이 다릅니다: {self.domain.value} != {other.domain.value}",
                details={"hint": "to_domain 으로 명시적으로 승격하세요"},
            )

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._check_compatible(other)
        merged = dict(self.terms)
        for e, v in other.terms:
            merged[e] = merged.get(e, coeffs.zero(self.domain)) + v
        return AlgElem(self.field, tuple(merged.items()), self.domain)

    def __neg__(self) -> "AlgElem":
        return AlgElem(self.field, tuple((e, -v) for e, v in self.terms), self.domain)

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + (-other)

    def scale(self, c: Any) -> "AlgElem":
        c = coeffs.coerce(c, self.domain)
        return AlgElem(self.field, tuple((e, c * v) for e, v in self.terms), self.domain)

    def conjugate(self) -> "AlgElem":
        """계수별 복소켤레"""
        return AlgElem(self.field, tuple((e, coeffs.conjugate(v)) for e, v in self.terms), self.domain)

    def map_exponents(self, fn) -> "AlgElem":
        return AlgElem(self.field, tuple((fn(e), v) for e, v in self.terms), self.domain)

    def to_domain(self, domain: CoefficientDomain) -> "AlgElem":
        """명시적 계수 영역 승격"""
        if domain.rank < self.domain.rank:
            raise CoefficientDomainError(
                f"{self.domain.value} 에서 {domain.value} 로 내릴 수 없습니다"
            )
        return AlgElem(self.field, self.terms, domain)

    # === 내적과 노름 ===

    def inner(self, other: "AlgElem") -> Any:
        """<f, g> = sum a_alpha conj(b_alpha)"""
        self._check_compatible(other)
        other_terms = other.as_dict
        return coeffs.total(
            (v * coeffs.conjugate(other_terms[e]) for e, v in self.terms if e in other_terms),
            self.domain,
        )

    def norm_squared(self):
        """sum |a_alpha|^2 (정확 영역에서는 Fraction)"""
        if self.domain is CoefficientDomain.COMPLEX:
            return sum(coeffs.abs_squared(v) for _, v in self.terms)
        return coeffs.total((coeffs.abs_squared(v) for _, v in self.terms), CoefficientDomain.RATIONAL)

    def wiener_norm(self):
        """l1 노름 sum |a_alpha| (RATIONAL 에서는 정확값)"""
        if self.domain is CoefficientDomain.RATIONAL:
            return coeffs.total((abs(v) for _, v in self.terms), CoefficientDomain.RATIONAL)
        return sum(coeffs.magnitude(v) for _, v in self.terms)

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {v}" for e, v in self.terms)
        return f"AlgElem({{{body}}}, {self.domain.value})"

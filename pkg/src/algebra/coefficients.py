"""
계수 영역

필드 대수 원소와 급수의 계수는 한 원소 안에서 하나의 영역에 속합니다.
- RATIONAL: Fraction
- GAUSSIAN: sympy QQ_I 원소 (a + bi, a, b 유리수)
- COMPLEX: binary64 complex (비교에는 항상 명시적 허용오차)
영역 승격은 명시적으로만 일어납니다 (RATIONAL -> GAUSSIAN -> COMPLEX).
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from numbers import Rational, Complex
from typing import Any, Iterable, Tuple

from sympy.polys.domains import QQ, QQ_I

from ..exceptions import CoefficientDomainError


class CoefficientDomain(str, Enum):
    RATIONAL = "rational"
    GAUSSIAN = "gaussian"
    COMPLEX = "complex"

    @property
    def rank(self) -> int:
        return _RANKS[self]

    @property
    def is_exact(self) -> bool:
        return self is not CoefficientDomain.COMPLEX


_RANKS = {
    CoefficientDomain.RATIONAL: 0,
    CoefficientDomain.GAUSSIAN: 1,
    CoefficientDomain.COMPLEX: 2,
}


GaussianRational = QQ_I.dtype


def _qq(value) -> Any:
    q = Fraction(value)
    return QQ(q.numerator, q.denominator)


def _fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def gaussian(re: Any, im: Any = 0) -> GaussianRational:
    """가우스 유리수 re + im*i (sympy QQ_I 원소)"""
    return QQ_I(_qq(re), _qq(im))


def is_gaussian(value: Any) -> bool:
    return QQ_I.of_type(value)


def gaussian_parts(value: Any) -> Tuple[Fraction, Fraction]:
    """정확 영역 값의 (실수부, 허수부)"""
    if is_gaussian(value):
        return _fraction(value.x), _fraction(value.y)
    return Fraction(value), Fraction(0)


def domain_of(value: Any) -> CoefficientDomain:
    if is_gaussian(value):
        return CoefficientDomain.GAUSSIAN
    if isinstance(value, (int, Rational)):
        return CoefficientDomain.RATIONAL
    if isinstance(value, (float, complex, Complex)):
        return CoefficientDomain.COMPLEX
    raise CoefficientDomainError(f"지원하지 않는 계수 타입입니다: {type(value).__name__}")


def join_domains(*domains: CoefficientDomain) -> CoefficientDomain:
    return max(domains, key=lambda d: d.rank)


def coerce(value: Any, domain: CoefficientDomain) -> Any:
    """값을 주어진 영역으로 올립니다 (내림은 허용하지 않음)"""
    source = domain_of(value)
    if source.rank > domain.rank:
        raise CoefficientDomainError(
            f"{source.value} 값을 {domain.value} 영역으로 내릴 수 없습니다",
            details={"value": str(value)},
        )
    if domain is CoefficientDomain.RATIONAL:
        return Fraction(value)
    if domain is CoefficientDomain.GAUSSIAN:
        return value if is_gaussian(value) else gaussian(value)
    return to_complex(value)


def zero(domain: CoefficientDomain) -> Any:
    return coerce(0, domain)


def one(domain: CoefficientDomain) -> Any:
    return coerce(1, domain)


def is_zero(value: Any) -> bool:
    return not value


def conjugate(value: Any) -> Any:
    if isinstance(value, (int, Rational)):
        return value
    if is_gaussian(value):
        re, im = gaussian_parts(value)
        return gaussian(re, -im)
    return value.conjugate()


def abs_squared(value: Any):
    """|a|^2 (정확 영역에서는 Fraction)"""
    if is_gaussian(value):
        re, im = gaussian_parts(value)
        return re * re + im * im
    if isinstance(value, (int, Rational)):
        return Fraction(value) * Fraction(value)
    return abs(value) ** 2


def magnitude(value: Any) -> float:
    return math.sqrt(float(abs_squared(value)))


def to_complex(value: Any) -> complex:
    if is_gaussian(value):
        re, im = gaussian_parts(value)
        return complex(float(re), float(im))
    return complex(value)


def close(a: Any, b: Any, tolerance: float) -> bool:
    """정확 영역은 정확 비교, COMPLEX 가 끼면 허용오차 비교"""
    if isinstance(a, complex) or isinstance(b, complex) or isinstance(a, float) or isinstance(b, float):
        return abs(to_complex(a) - to_complex(b)) <= tolerance
    return gaussian_parts(a) == gaussian_parts(b)


def total(values: Iterable[Any], domain: CoefficientDomain) -> Any:
    result = zero(domain)
    for v in values:
        result = result + v
    return result


def format_value(value: Any) -> Tuple[str, str]:
    """(re, im) 문자열 쌍"""
    if is_gaussian(value):
        re, im = gaussian_parts(value)
        return str(re), str(im)
    if isinstance(value, (int, Rational)):
        return str(Fraction(value)), "0"
    value = complex(value)
    return repr(value.real), repr(value.imag)


def parse_value(re_text: str, im_text: str, domain: CoefficientDomain) -> Any:
    if domain is CoefficientDomain.COMPLEX:
        return complex(float(Fraction(str(re_text))), float(Fraction(str(im_text))))
    re_val, im_val = Fraction(str(re_text)), Fraction(str(im_text))
    if domain is CoefficientDomain.RATIONAL:
        if im_val:
            raise CoefficientDomainError("rational 영역 값의 허수부는 0 이어야 합니다",
                                         details={"im": str(im_text)})
        return re_val
    return gaussian(re_val, im_val)


def infer_domain(pairs: Iterable[Tuple[str, str]]) -> CoefficientDomain:
    """문자열 표기에서 영역 추론 (소수점/지수 표기가 있으면 COMPLEX)"""
    domain = CoefficientDomain.RATIONAL
    for re_text, im_text in pairs:
        for text in (str(re_text), str(im_text)):
            if any(ch in text for ch in ".eEj") or text in ("nan", "inf"):
                return CoefficientDomain.COMPLEX
        if Fraction(str(im_text)) != 0:
            domain = CoefficientDomain.GAUSSIAN
    return domain

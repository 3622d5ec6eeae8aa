"""
디리클레 합성곱, 서로소 디리클레 곱과 각각의 역원, 다중로그 계수, 곱셈성 판정

모든 합성곱은 배수 순회로 계산하므로 1..N 밖의 색인을 참조하지 않습니다.
"""

from enum import Enum
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Any, Callable, List

from ..algebra import coefficients as coeffs
from ..algebra.coefficients import CoefficientDomain
from ..exceptions import NonUnitError, ValidationError
from ..utils.logging import get_logger
from .arith import ArithSeries

logger = get_logger(__name__)


def _convolve(f: ArithSeries, g: ArithSeries, admissible: Callable[[int, int], bool]) -> ArithSeries:
    f, g, domain = f._joined(g)
    N = f.N
    out: List[Any] = [coeffs.zero(domain)] * N
    for d in range(1, N + 1):
        a = f.coeffs[d - 1]
        if coeffs.is_zero(a):
            continue
        for m in range(d, N + 1, d):
            if admissible(d, m // d):
                out[m - 1] = out[m - 1] + a * g.coeffs[m // d - 1]
    return ArithSeries(N, tuple(out), domain)


def dconv(f: ArithSeries, g: ArithSeries) -> ArithSeries:
    """(f * g)(n) = sum_{d | n} f(d) g(n/d)"""
    return _convolve(f, g, lambda d, e: True)


def rp_conv(f: ArithSeries, g: ArithSeries) -> ArithSeries:
    """서로소 분해 n = n1 n2 만 더하는 곱"""
    return _convolve(f, g, lambda d, e: gcd(d, e) == 1)


def _invert(f: ArithSeries, admissible: Callable[[int, int], bool], name: str) -> ArithSeries:
    lead = f.leading()
    if coeffs.is_zero(lead):
        raise NonUnitError(f"{name}: f(1) = 0 인 급수는 역원이 없습니다", truncation=f.N)
    N, domain = f.N, f.domain
    scale = coeffs.one(domain) / lead
    acc: List[Any] = [coeffs.zero(domain)] * N
    out: List[Any] = [coeffs.zero(domain)] * N
    for d in range(1, N + 1):
        target = coeffs.one(domain) if d == 1 else coeffs.zero(domain)
        b = (target - acc[d - 1]) * scale
        out[d - 1] = b
        if coeffs.is_zero(b):
            continue
        # b_d 가 확정되면 배수 m 의 누적합에 f(m/d) b_d 를 미리 더해 둠
        for m in range(2 * d, N + 1, d):
            if admissible(m // d, d):
                acc[m - 1] = acc[m - 1] + f.coeffs[m // d - 1] * b
    return ArithSeries(N, tuple(out), domain)


def dinv(f: ArithSeries) -> ArithSeries:
    """b_n = -(1/f(1)) sum_{d | n, d < n} f(n/d) b_d"""
    return _invert(f, lambda e, d: True, "dinv")


def rp_inv(f: ArithSeries) -> ArithSeries:
    """서로소 곱에 대한 역원 (같은 점화식에서 서로소 약수 쌍만 사용)"""
    return _invert(f, lambda e, d: gcd(e, d) == 1, "rp_inv")


def polylog_coeffs(s0, N: int) -> ArithSeries:
    """a_n = n^{-s0}: 정수 s0 이면 정확한 유리수, 아니면 복소수 (s0 >= 1)"""
    if N < 1:
        raise ValidationError("N 은 1 이상이어야 합니다", field_name="N", field_value=N)
    if s0 < 1:
        raise ValidationError("s0 는 1 이상이어야 합니다", field_name="s0", field_value=str(s0))
    exact = isinstance(s0, Rational) or (isinstance(s0, float) and s0.is_integer())
    if exact and Fraction(s0).denominator == 1:
        s = int(s0)
        return ArithSeries(N, tuple(Fraction(1, n ** s) for n in range(1, N + 1)))
    s = float(s0)
    return ArithSeries(N, tuple(complex(n ** -s) for n in range(1, N + 1)), CoefficientDomain.COMPLEX)


class Multiplicativity(str, Enum):
    COMPLETELY_MULTIPLICATIVE = "completely_multiplicative"
    MULTIPLICATIVE = "multiplicative"
    NEITHER = "neither"


def multiplicativity(f: ArithSeries, tolerance: float = 1e-12) -> Multiplicativity:
    """f(1) 로 정규화한 뒤 mn <= N 인 모든 (서로소) 쌍을 전수 점검"""
    if coeffs.is_zero(f.leading()):
        return Multiplicativity.NEITHER
    g = f.scale(coeffs.one(f.domain) / f.leading())
    N = f.N
    complete, coprime = True, True
    for m in range(2, N + 1):
        if m * 2 > N:
            break
        for n in range(2, N // m + 1):
            holds = coeffs.close(g[m * n], g[m] * g[n], tolerance)
            if not holds:
                complete = False
                if gcd(m, n) == 1:
                    coprime = False
                    break
        if not coprime:
            break
    if complete:
        return Multiplicativity.COMPLETELY_MULTIPLICATIVE
    if coprime:
        return Multiplicativity.MULTIPLICATIVE
    logger.debug("곱셈적이지 않은 급수", N=N)
    return Multiplicativity.NEITHER

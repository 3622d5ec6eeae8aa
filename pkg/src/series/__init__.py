"""
디리클레 급수 패키지

절단 산술 함수의 디리클레 곱과 서로소 곱, 역원, 멱급수 역원, 다중로그 계수,
곱셈성 판정, 소수 벡터와 비주기 동치, 퓌죄 치환을 제공합니다.
"""

from .arith import ArithSeries
from .products import (
    Multiplicativity,
    dconv,
    dinv,
    rp_conv,
    rp_inv,
    polylog_coeffs,
    multiplicativity,
)
from .powerseries import PowerSeries, euler_product, cauchy_inverse_powerseries
from .primes import PrimeVector, AperiodicClass, aperiodic_equiv
from .puiseux import substitute_L_to_puiseux, puiseux_to_L
from .sieve import smallest_prime_factor, factorize, divisor_counts, primes_up_to


__all__ = [
    "ArithSeries",
    "Multiplicativity",
    "dconv",
    "dinv",
    "rp_conv",
    "rp_inv",
    "polylog_coeffs",
    "multiplicativity",
    "PowerSeries",
    "euler_product",
    "cauchy_inverse_powerseries",
    "PrimeVector",
    "AperiodicClass",
    "aperiodic_equiv",
    "substitute_L_to_puiseux",
    "puiseux_to_L",
    "smallest_prime_factor",
    "factorize",
    "divisor_counts",
    "primes_up_to",
]

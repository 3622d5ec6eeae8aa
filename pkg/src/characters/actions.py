"""
지표 급수, 국소 제타 인자, R_chi 작용

R_chi(f) = sum chi(n) a_n eta^n 은 계수별 곱이며, 완전 곱셈적 급수에서는
R_{chi psi} = R_chi . R_psi 가 소수 벡터 위의 성분별 곱으로 보입니다.
"""

from typing import Iterable, Optional

import sympy

from ..exceptions import NotPrimeError, ValidationError
from ..series import ArithSeries, PrimeVector
from .character import DirichletCharacter


def character_series(chi: DirichletCharacter, N: int) -> ArithSeries:
    """a_n = chi(n)"""
    return ArithSeries.from_function(N, chi.value, chi.domain)


def _require_prime(p: int) -> None:
    if not sympy.isprime(p):
        raise NotPrimeError(p)


def zeta_p_series(p: int, N: int) -> ArithSeries:
    """p 의 거듭제곱 (1 포함) 에서 1, 나머지 0"""
    _require_prime(p)
    if p > N:
        raise ValidationError(f"p={p} 가 절단 차수 N={N} 보다 큽니다", field_name="p", field_value=p)
    support = set()
    power = 1
    while power <= N:
        support.add(power)
        power *= p
    return ArithSeries.from_function(N, lambda n: 1 if n in support else 0)


def local_factor_series(chi: DirichletCharacter, p: int, N: int) -> ArithSeries:
    """a_{p^k} = chi(p)^k, 나머지 0 (chi(p) = 1 이면 zeta_p)"""
    _require_prime(p)
    x = chi.value(p)
    values = {}
    k, power = 0, 1
    while power <= N:
        values[power] = x ** k
        k, power = k + 1, power * p
    return ArithSeries.from_dict(N, values, chi.domain)


def R_chi(chi: DirichletCharacter, f: ArithSeries) -> ArithSeries:
    """계수별 곱 chi(n) a_n"""
    return f.twist([chi.value(n) for n in range(1, f.N + 1)])


def R_chi_vector(chi: DirichletCharacter, v: PrimeVector) -> PrimeVector:
    """소수 벡터 위의 R_chi: a_p -> chi(p) a_p"""
    return PrimeVector.from_function(v.P, lambda p: chi.value(p) * v.value(p))


def characters_distinguishable(
    chi: DirichletCharacter,
    psi: DirichletCharacter,
    P: int,
    exceptional: Iterable[int] = (),
) -> Optional[int]:
    """
    두 지표가 다른 값을 갖는 증인 소수 p <= P 를 찾습니다.

    예외 소수와 두 모듈러스를 나누는 소수는 건너뜁니다. 없으면 None.
    """
    excluded = set(exceptional)
    excluded |= set(sympy.primefactors(chi.modulus)) | set(sympy.primefactors(psi.modulus))
    for p in sympy.primerange(2, P + 1):
        if p in excluded:
            continue
        if chi.angle(p) != psi.angle(p):
            return int(p)
    return None

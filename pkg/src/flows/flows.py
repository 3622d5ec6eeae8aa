"""
코시 흐름, 디리클레 흐름, 시간 반전, 부호 표현

흐름은 계수의 위상만 바꾸므로 지지집합과 l2 노름이 보존됩니다.
위상이 초월수이므로 COMPLEX 영역 원소만 받습니다. 지수 0 항은 디리클레 흐름과
시간 반전에서 그대로 둡니다.
"""

import cmath
import math
from typing import Iterable, Literal, Optional

from ..algebra.coefficients import CoefficientDomain
from ..algebra.element import AlgElem
from ..exceptions import CoefficientDomainError, DimensionMismatchError
from ..numfield import NFElem, NumberField, SignVector
from .vectors import FlowParam


def _require_complex(f: AlgElem) -> None:
    if f.domain is not CoefficientDomain.COMPLEX:
        raise CoefficientDomainError(
            "흐름은 complex 영역 원소에만 정의됩니다",
            details={"domain": f.domain.value},
            suggestions=["to_domain(CoefficientDomain.COMPLEX) 로 먼저 승격하세요"],
        )


def cauchy_phase(alpha: NFElem, r: FlowParam) -> complex:
    return cmath.exp(2j * cmath.pi * sum(a * t for a, t in zip(alpha.embeddings(), r.r)))


def dirichlet_phase(alpha: NFElem, r: FlowParam) -> complex:
    """prod_nu |alpha_nu|^{2 pi i r_nu}"""
    return cmath.exp(2j * cmath.pi * sum(t * math.log(abs(a)) for a, t in zip(alpha.embeddings(), r.r)))


def cauchy_flow(r: FlowParam, f: AlgElem) -> AlgElem:
    """a_alpha -> exp(2 pi i Tr(alpha r)) a_alpha"""
    _require_complex(f)
    r.require_dimension(f.field.degree)
    return AlgElem(f.field, tuple((alpha, a * cauchy_phase(alpha, r)) for alpha, a in f.terms), f.domain)


def dirichlet_flow(r: FlowParam, f: AlgElem) -> AlgElem:
    """a_alpha -> |alpha|^{2 pi i r} a_alpha (alpha = 0 은 그대로)"""
    _require_complex(f)
    r.require_dimension(f.field.degree)
    return AlgElem(
        f.field,
        tuple((alpha, a if alpha.is_zero() else a * dirichlet_phase(alpha, r)) for alpha, a in f.terms),
        f.domain,
    )


def time_reversal(f: AlgElem) -> AlgElem:
    """지수 반전 q -> 1/q (대합)"""
    return f.map_exponents(lambda alpha: alpha if alpha.is_zero() else alpha.inverse())


def dirichlet_period(n: int) -> float:
    """Psi_r 가 eta^n 을 고정하는 최소 주기 1/log n"""
    return 1.0 / math.log(n)


def sign_representation(sigma: int, theta: SignVector, field: NumberField) -> SignVector:
    """sigma 가 임베딩을 치환하는 대로 부호 좌표를 치환"""
    field.require_galois()
    if theta.dimension != field.degree:
        raise DimensionMismatchError(field.degree, theta.dimension)
    return theta.permute(field.permutations[sigma])


def _candidates(field: NumberField) -> Iterable[NFElem]:
    for c in range(2, 12):
        yield field.from_rational(c)
        yield field.from_rational(1) / c
    if field.degree > 1:
        for c in range(0, 6):
            yield field.gen + c
            yield field.gen * field.gen + c


def moved_monomial(
    r: FlowParam,
    field: NumberField,
    mode: Literal["cauchy", "dirichlet"],
    tolerance: float = 1e-9,
) -> Optional[NFElem]:
    """흐름이 eta^alpha 를 움직이는 작은 alpha 를 찾습니다 (r = 0 이면 None)"""
    r.require_dimension(field.degree)
    phase = cauchy_phase if mode == "cauchy" else dirichlet_phase
    for alpha in _candidates(field):
        if alpha.is_zero():
            continue
        if abs(phase(alpha, r) - 1) > tolerance:
            return alpha
    return None

"""
지표의 직합으로 주어진 갈루아 표현과 아르틴 오일러 인자

rho = chi_1 (+) ... (+) chi_n 에 대해
L_p(rho, s) = prod_j (1 - chi_j(p) X)^{-1} (X = p^{-s}) 이고
chi_j(p) = 0 인 성분은 관성 고정 부분공간 밖이므로 인자 1 을 줍니다.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import sympy

from ..algebra import coefficients as coeffs
from ..algebra.coefficients import CoefficientDomain
from ..characters import DirichletCharacter, character_product
from ..exceptions import NotPrimeError, ValidationError
from ..models.payloads import GaloisRepPayload
from ..series import ArithSeries, factorize
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class GaloisRep:
    summands: Tuple[DirichletCharacter, ...]

    def __post_init__(self):
        summands = tuple(self.summands)
        if not summands:
            raise ValidationError("표현의 차원은 1 이상이어야 합니다", field_name="summands")
        object.__setattr__(self, "summands", summands)

    @property
    def dimension(self) -> int:
        return len(self.summands)

    @property
    def domain(self) -> CoefficientDomain:
        return coeffs.join_domains(*(chi.domain for chi in self.summands))

    def direct_sum(self, other: "GaloisRep") -> "GaloisRep":
        return GaloisRep(self.summands + other.summands)

    def tensor(self, other: "GaloisRep") -> "GaloisRep":
        """대각 표현의 텐서곱: 성분 지표들의 모든 점별 곱"""
        return GaloisRep(tuple(
            character_product(a, b) for a in self.summands for b in other.summands
        ))

    def to_payload(self) -> GaloisRepPayload:
        return GaloisRepPayload(summands=[chi.to_payload() for chi in self.summands])

    @classmethod
    def from_payload(cls, payload: GaloisRepPayload) -> "GaloisRep":
        return cls(tuple(DirichletCharacter.from_payload(s) for s in payload.summands))


def euler_factor_coeffs(rho: GaloisRep, p: int, depth: int) -> List[Any]:
    """L_p 의 X^0..X^depth 계수 (비영 chi_j(p) 들의 완전 동차 대칭다항식)"""
    if not sympy.isprime(p):
        raise NotPrimeError(p)
    domain = rho.domain
    out = [coeffs.one(domain)] + [coeffs.zero(domain)] * depth
    for chi in rho.summands:
        x = coeffs.coerce(chi.value(p), domain)
        if coeffs.is_zero(x):
            continue
        for k in range(1, depth + 1):
            out[k] = out[k] + x * out[k - 1]
    return out


def chi_rho(rho: GaloisRep, N: int) -> ArithSeries:
    """chi_rho(n) = prod_p (p 국소 계수)_{v_p(n)}"""
    domain = rho.domain
    local: Dict[int, List[Any]] = {}
    values = []
    for n in range(1, N + 1):
        value = coeffs.one(domain)
        for p, e in factorize(n).items():
            if p not in local:
                depth, power = 0, p
                while power <= N:
                    depth, power = depth + 1, power * p
                local[p] = euler_factor_coeffs(rho, p, depth)
            value = value * local[p][e]
        values.append(value)
    return ArithSeries(N, tuple(values), domain)


def R_rho(rho: GaloisRep, f: ArithSeries) -> ArithSeries:
    """계수별 곱 chi_rho(n) a_n"""
    return f.twist(list(chi_rho(rho, f.N).coeffs))

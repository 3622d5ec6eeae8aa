"""
하디 등급과 theta-켤레

지수의 실수 임베딩 부호로 항을 나눕니다. K = Q 이면 (F-, F0, F+) 세 쌍이 됩니다.
sign(alpha beta) = sign(alpha) sign(beta) 이므로 상수항이 없는 원소의 디리클레 곱은
(f x g)_theta = sum_{theta = t1 t2} f_t1 x g_t2 를 정확히 만족합니다.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, Sequence, Tuple

from ..exceptions import DimensionMismatchError
from ..numfield import SignVector, sign_of
from . import coefficients as coeffs
from .element import AlgElem
from .products import dirichlet_product


@dataclass(frozen=True)
class GradedDecomposition:
    """(F_theta; F_0) 분해"""

    components: Dict[SignVector, AlgElem] = dataclass_field(default_factory=dict)
    constant: Any = 0

    def component(self, theta: SignVector) -> AlgElem:
        return self.components[theta]

    def signs(self) -> Tuple[SignVector, ...]:
        return tuple(sorted(self.components))

    def reassemble(self, template: AlgElem) -> AlgElem:
        """성분과 상수항을 다시 더한 원소"""
        result = AlgElem.monomial(template.field, 0, self.constant, template.domain)
        for part in self.components.values():
            result = result + part
        return result


def grade(f: AlgElem) -> GradedDecomposition:
    """항을 sign_of(지수) 로 분할하고 상수항을 분리"""
    buckets: Dict[SignVector, list] = {}
    for alpha, a in f.terms:
        if alpha.is_zero():
            continue
        buckets.setdefault(sign_of(alpha), []).append((alpha, a))
    components = {
        theta: AlgElem(f.field, tuple(terms), f.domain) for theta, terms in sorted(buckets.items())
    }
    return GradedDecomposition(components=components, constant=f.constant_term())


def graded_dirichlet_components(f: AlgElem, g: AlgElem) -> Dict[SignVector, AlgElem]:
    """sum_{theta = t1 t2} f_t1 x g_t2 를 부호별로 모은 사전"""
    f_graded, g_graded = grade(f), grade(g)
    combined: Dict[SignVector, AlgElem] = {}
    for t1, f_part in f_graded.components.items():
        for t2, g_part in g_graded.components.items():
            theta = t1 * t2
            product = dirichlet_product(f_part, g_part)
            combined[theta] = combined[theta] + product if theta in combined else product
    return {theta: part for theta, part in sorted(combined.items()) if not part.is_zero()}


def theta_conjugate(theta: SignVector, point: Sequence[Any]) -> Tuple[Any, ...]:
    """c_theta: 좌표별 x + it -> x + theta_nu it"""
    if len(point) != theta.dimension:
        raise DimensionMismatchError(theta.dimension, len(point))
    result = []
    for s, z in zip(theta.signs, point):
        if coeffs.is_gaussian(z):
            re, im = coeffs.gaussian_parts(z)
            result.append(coeffs.gaussian(re, s * im))
        elif coeffs.domain_of(z) is coeffs.CoefficientDomain.RATIONAL:
            result.append(z)
        else:
            z = complex(z)
            result.append(complex(z.real, s * z.imag))
    return tuple(result)

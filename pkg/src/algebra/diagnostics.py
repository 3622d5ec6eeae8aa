"""
필드 대수 진단

- 디리클레 곱 상수항의 두 공식 비교
- 분배법칙이 성립하지 않는 저장된 반례
- Z_1 아핀 구조와 곱의 호환성
"""

from dataclasses import dataclass
from typing import Any

from ..models.reports import ConstantTermDiagnostic
from ..numfield import NumberField
from .element import AlgElem
from .products import cauchy_product, dirichlet_product, trace_functional, dot_plus, odot


def constant_term_diagnostic(f: AlgElem, g: AlgElem) -> ConstantTermDiagnostic:
    """
    곱의 실제 상수항과 대안 공식 T(f)T(g) - a0 b0 를 비교합니다.

    두 값은 a0 T(g) + b0 T(f) = T(f) T(g) 일 때만 일치합니다.
    """
    product_constant = dirichlet_product(f, g).constant_term()
    a0, b0 = f.constant_term(), g.constant_term()
    alternative = trace_functional(f) * trace_functional(g) - a0 * b0
    return ConstantTermDiagnostic(
        product_constant=str(product_constant),
        alternative_constant=str(alternative),
        agree=bool(product_constant == alternative),
    )


@dataclass(frozen=True)
class DistributivityWitness:
    f: AlgElem
    g: AlgElem
    h: AlgElem
    lhs: AlgElem  # f x (g + h)
    rhs: AlgElem  # (f x g) + (f x h)

    @property
    def distributes(self) -> bool:
        return self.lhs == self.rhs


def non_distributivity_witness(field: NumberField) -> DistributivityWitness:
    """f = eta + eta^2, g = h = eta: f x (g (+) h) != (f x g) (+) (f x h)"""
    f = AlgElem.from_dict(field, {1: 1, 2: 1})
    g = AlgElem.monomial(field, 1)
    h = AlgElem.monomial(field, 1)
    lhs = dirichlet_product(f, cauchy_product(g, h))
    rhs = cauchy_product(dirichlet_product(f, g), dirichlet_product(f, h))
    return DistributivityWitness(f, g, h, lhs, rhs)


def affine_compatibility(h: AlgElem, f: AlgElem, g: AlgElem, c: Any) -> dict:
    """
    Z_1 원소 h, f, g 에 대해 세 항등식의 성립 여부를 돌려줍니다.
    """
    return {
        "cauchy_dot_plus": dot_plus(cauchy_product(h, dot_plus(f, g)), h)
        == dot_plus(cauchy_product(h, f), cauchy_product(h, g)),
        "dirichlet_dot_plus": dirichlet_product(h, dot_plus(f, g))
        == dot_plus(dirichlet_product(h, f), dirichlet_product(h, g)),
        "dirichlet_odot": dirichlet_product(h, odot(c, f)) == odot(c, dirichlet_product(h, f)),
    }

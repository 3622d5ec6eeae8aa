"""흐름이 보존하지 않는 구조의 저장된 반례 (Q 위, complex 영역)"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..algebra import AlgElem, CoefficientDomain, cauchy_product, dirichlet_product, trace_functional
from ..algebra import coefficients as coeffs
from ..numfield import rational_field
from .flows import cauchy_flow, dirichlet_flow
from .vectors import FlowParam


@dataclass(frozen=True)
class FlowCounterexample:
    name: str
    lhs: Any
    rhs: Any
    tolerance: float = 1e-10

    @property
    def holds(self) -> bool:
        if isinstance(self.lhs, AlgElem):
            return self.lhs.is_close(self.rhs, self.tolerance)
        return coeffs.close(self.lhs, self.rhs, self.tolerance)


def _eta(exponent, coefficient=1) -> AlgElem:
    return AlgElem.monomial(rational_field(), exponent, coefficient, CoefficientDomain.COMPLEX)


def cauchy_flow_not_dirichlet_homomorphic() -> FlowCounterexample:
    """r = 1/4, f = g = eta: Phi(f x g) = i eta, Phi(f) x Phi(g) = -eta"""
    r = FlowParam((0.25,))
    f = _eta(1)
    return FlowCounterexample(
        "Phi_r(f x g) = Phi_r(f) x Phi_r(g)",
        cauchy_flow(r, dirichlet_product(f, f)),
        dirichlet_product(cauchy_flow(r, f), cauchy_flow(r, f)),
    )


def dirichlet_flow_not_cauchy_homomorphic() -> FlowCounterexample:
    """r = 1, f = g = eta: Psi(f (+) g) = 2^{2 pi i} eta^2, Psi(f) (+) Psi(g) = eta^2"""
    r = FlowParam((1.0,))
    f = _eta(1)
    return FlowCounterexample(
        "Psi_r(f (+) g) = Psi_r(f) (+) Psi_r(g)",
        dirichlet_flow(r, cauchy_product(f, f)),
        cauchy_product(dirichlet_flow(r, f), dirichlet_flow(r, f)),
    )


def cauchy_flow_breaks_trace_zero() -> FlowCounterexample:
    """f = eta^0 - eta^1 (T = 0), r = 1/4: T(Phi_r f) = 1 - i"""
    r = FlowParam((0.25,))
    f = _eta(0) - _eta(Fraction(1))
    return FlowCounterexample(
        "T(Phi_r f) = 0",
        trace_functional(cauchy_flow(r, f)),
        0j,
    )

"""
흐름과 아델 측 구조 패키지

K_inf 벡터와 표준 지표, 대각합/대각 매장, 코시/디리클레 흐름, 시간 반전,
부호 표현, 토러스 직교성 적분, 멜린 적분 점검, 저장된 반례를 제공합니다.
"""

from .vectors import (
    InfVector,
    FlowParam,
    standard_character,
    evaluate_puiseux,
    trace_and_diagonal,
    galois_permute,
)
from .flows import (
    cauchy_phase,
    dirichlet_phase,
    cauchy_flow,
    dirichlet_flow,
    time_reversal,
    dirichlet_period,
    sign_representation,
    moved_monomial,
)
from .quadrature import torus_inner_product, mellin_spot_check
from .counterexamples import (
    FlowCounterexample,
    cauchy_flow_not_dirichlet_homomorphic,
    dirichlet_flow_not_cauchy_homomorphic,
    cauchy_flow_breaks_trace_zero,
)

__all__ = [
    "InfVector",
    "FlowParam",
    "standard_character",
    "evaluate_puiseux",
    "trace_and_diagonal",
    "galois_permute",
    "cauchy_phase",
    "dirichlet_phase",
    "cauchy_flow",
    "dirichlet_flow",
    "time_reversal",
    "dirichlet_period",
    "sign_representation",
    "moved_monomial",
    "torus_inner_product",
    "mellin_spot_check",
    "FlowCounterexample",
    "cauchy_flow_not_dirichlet_homomorphic",
    "dirichlet_flow_not_cauchy_homomorphic",
    "cauchy_flow_breaks_trace_zero",
]

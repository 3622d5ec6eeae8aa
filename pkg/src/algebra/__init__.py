"""
필드 대수 C[K] 패키지

희소 형식합, 코시/디리클레 곱, 대각합 범함수, Z_1 아핀 구조,
갈루아 작용과 이동 작용소, 하디 등급을 제공합니다.
"""

from .coefficients import CoefficientDomain, gaussian
from .element import AlgElem
from .products import (
    cauchy_product,
    dirichlet_product,
    trace_functional,
    normalize_Z1,
    dot_plus,
    odot,
    affine_ops,
)
from .actions import galois_act, cauchy_shift, dirichlet_shift, shift
from .grading import GradedDecomposition, grade, graded_dirichlet_components, theta_conjugate
from .diagnostics import (
    DistributivityWitness,
    constant_term_diagnostic,
    non_distributivity_witness,
    affine_compatibility,
)

__all__ = [
    "CoefficientDomain",
    "gaussian",
    "AlgElem",
    "cauchy_product",
    "dirichlet_product",
    "trace_functional",
    "normalize_Z1",
    "dot_plus",
    "odot",
    "affine_ops",
    "galois_act",
    "cauchy_shift",
    "dirichlet_shift",
    "shift",
    "GradedDecomposition",
    "grade",
    "graded_dirichlet_components",
    "theta_conjugate",
    "DistributivityWitness",
    "constant_term_diagnostic",
    "non_distributivity_witness",
    "affine_compatibility",
]

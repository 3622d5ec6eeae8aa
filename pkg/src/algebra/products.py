"""
필드 대수의 곱과 대각합 범함수

- 코시 곱 (+): 지수의 덧셈에 따른 합성곱
- 디리클레 곱 (x): 지수의 곱셈에 따른 합성곱. 곱이 0 이 되는 모든 쌍을 지수 0 에 모으므로
  상수항은 d0 = a0 T(g) + b0 T(f) - a0 b0 이고, (K, x) 모노이드 위의 합성곱이라 결합법칙이 성립합니다.
- T(f) = sum a_alpha, Z_1 정규화, Z_1 의 아핀 구조 (+. 과 ⊙)
"""

from typing import Any, Dict, Literal, Callable

from ..exceptions import TraceZeroError, NotNormalizedError, ValidationError
from ..numfield import NFElem
from ..utils.logging import get_logger
from . import coefficients as coeffs
from .element import AlgElem

logger = get_logger(__name__)


def _convolve(f: AlgElem, g: AlgElem, combine: Callable[[NFElem, NFElem], NFElem]) -> AlgElem:
    f._check_compatible(g)
    zero = coeffs.zero(f.domain)
    accumulated: Dict[NFElem, Any] = {}
    for alpha, a in f.terms:
        for beta, b in g.terms:
            key = combine(alpha, beta)
            accumulated[key] = accumulated.get(key, zero) + a * b
    return AlgElem(f.field, tuple(accumulated.items()), f.domain)


def cauchy_product(f: AlgElem, g: AlgElem) -> AlgElem:
    """c_alpha = sum_{alpha = g1 + g2} a_g1 b_g2"""
    return _convolve(f, g, lambda x, y: x + y)


def dirichlet_product(f: AlgElem, g: AlgElem) -> AlgElem:
    """d_alpha = sum_{alpha = a1 a2} a_a1 b_a2 (alpha = 0 에는 한쪽 인자가 0 인 모든 쌍)"""
    return _convolve(f, g, lambda x, y: x * y)


def trace_functional(f: AlgElem) -> Any:
    """T(f) = sum a_alpha"""
    return coeffs.total((v for _, v in f.terms), f.domain)


def normalize_Z1(f: AlgElem) -> AlgElem:
    """[f] -> (1/T(f)) f"""
    t = trace_functional(f)
    if coeffs.is_zero(t):
        raise TraceZeroError(details={"support_size": len(f)})
    return f.scale(coeffs.one(f.domain) / t)


def _require_normalized(f: AlgElem) -> None:
    t = trace_functional(f)
    if t != 1:
        raise NotNormalizedError(t)


def dot_plus(f: AlgElem, g: AlgElem) -> AlgElem:
    """f +. g = f + g - 1_(+)"""
    _require_normalized(f)
    _require_normalized(g)
    return f + g - AlgElem.one_plus(f.field, f.domain)


def odot(c: Any, f: AlgElem) -> AlgElem:
    """c ⊙ f = c f + (1 - c) 1_(+)"""
    _require_normalized(f)
    c = coeffs.coerce(c, f.domain)
    return f.scale(c) + AlgElem.one_plus(f.field, f.domain).scale(coeffs.one(f.domain) - c)


def affine_ops(op: Literal["dot_plus", "odot"], f: AlgElem, g_or_scalar: Any) -> AlgElem:
    """Z_1 의 벡터 구조: dot_plus(f, g) 또는 odot(c, f)"""
    if op == "dot_plus":
        return dot_plus(f, g_or_scalar)
    if op == "odot":
        return odot(g_or_scalar, f)
    raise ValidationError(f"알 수 없는 아핀 연산입니다: {op}", field_name="op", field_value=op)

"""갈루아 작용과 이동 작용소 S_alpha, T_alpha"""

from typing import Any, Literal

from ..exceptions import ZeroShiftError, ValidationError
from .element import AlgElem


def galois_act(sigma: int, f: AlgElem) -> AlgElem:
    """지수를 alpha -> sigma(alpha) 로 재색인 (계수는 그대로)"""
    field = f.field
    field.require_galois()
    return f.map_exponents(lambda alpha: field.apply_automorphism(sigma, alpha))


def cauchy_shift(alpha: Any, f: AlgElem) -> AlgElem:
    """S_alpha: beta 자리의 계수가 a_{alpha - beta}"""
    alpha = f.field.coerce(alpha)
    return f.map_exponents(lambda gamma: alpha - gamma)


def dirichlet_shift(alpha: Any, f: AlgElem) -> AlgElem:
    """T_alpha: beta 자리의 계수가 a_{alpha beta^-1}, 지수 0 항은 그대로"""
    alpha = f.field.coerce(alpha)
    if alpha.is_zero():
        raise ZeroShiftError()
    return f.map_exponents(lambda gamma: gamma if gamma.is_zero() else alpha * gamma.inverse())


def shift(mode: Literal["cauchy", "dirichlet"], alpha: Any, f: AlgElem) -> AlgElem:
    if mode == "cauchy":
        return cauchy_shift(alpha, f)
    if mode == "dirichlet":
        return dirichlet_shift(alpha, f)
    raise ValidationError(f"알 수 없는 이동 방식입니다: {mode}", field_name="mode", field_value=mode)

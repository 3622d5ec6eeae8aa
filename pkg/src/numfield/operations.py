"""수체 연산의 함수형 진입점"""

from fractions import Fraction
from typing import Optional, Literal

from ..exceptions import ValidationError
from .element import NFElem
from .signs import SignVector, resolve_signs

ArithOp = Literal["add", "sub", "mul", "inv"]


def nf_arith(op: ArithOp, x: NFElem, y: Optional[NFElem] = None) -> NFElem:
    """정확한 수체 산술 (곱과 역원은 최소다항식 법으로 계산)"""
    if op == "inv":
        return x.inverse()
    if y is None:
        raise ValidationError(f"{op} 연산에는 두 번째 피연산자가 필요합니다", field_name="y")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValidationError(f"알 수 없는 연산입니다: {op}", field_name="op", field_value=op)


def trace(x: NFElem) -> Fraction:
    """켤레들의 합 Tr_{K/Q}(x)"""
    return x.field.trace(x)


def sign_of(x: NFElem) -> SignVector:
    return resolve_signs(x)


def galois_apply(sigma: int, x: NFElem) -> NFElem:
    """sigma 번째 자기동형사상 (0 은 항등사상)"""
    return x.field.apply_automorphism(sigma, x)

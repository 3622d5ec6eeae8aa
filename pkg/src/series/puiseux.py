"""n^{-s} -> eta^n 치환: ArithSeries 와 Q 위 필드 대수 원소 사이의 변환"""

from typing import Any, Dict, Optional

from ..algebra.element import AlgElem
from ..exceptions import NonIntegerSupportError
from ..numfield import NumberField, rational_field
from .arith import ArithSeries


def substitute_L_to_puiseux(f: ArithSeries, field: Optional[NumberField] = None) -> AlgElem:
    """sum a_n n^{-s} -> sum a_n eta^n"""
    field = field or rational_field()
    return AlgElem(field, tuple((n, a) for n, a in f), f.domain)


def puiseux_to_L(elem: AlgElem, N: int) -> ArithSeries:
    """
    양의 정수 지수만 가진 원소를 N-색인 급수로 되돌립니다.

    N 을 넘는 지수의 항은 절단으로 버립니다.
    """
    values: Dict[int, Any] = {}
    for alpha, a in elem.terms:
        if not alpha.is_rational_integer() or alpha.as_fraction() < 1:
            raise NonIntegerSupportError(
                f"지수 {alpha} 은(는) 양의 정수가 아닙니다", truncation=N,
                details={"exponent": alpha.to_strings()},
            )
        n = int(alpha.as_fraction())
        if n <= N:
            values[n] = a
    return ArithSeries.from_dict(N, values, elem.domain)

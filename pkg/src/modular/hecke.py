"""
t_p 퓌죄 다항식, 정수 지수 사영, 디리클레 대수 안의 헤케 작용소

- puiseux 변형: t_p = eta^p + p^{k-1} eta^{1/p}, 계수 a_{m/p} + p^{k-1} a_{mp}
- classical 변형: 지수를 맞바꾼 t'_p, 계수 a_{mp} + p^{k-1} a_{m/p}
출력 절단은 floor(N/p) 입니다 (그 위의 m 은 모르는 a_{mp} 를 참조).
"""

from fractions import Fraction
from typing import List, Literal, Optional

import sympy

from config.settings import get_settings
from ..algebra import AlgElem, dirichlet_product
from ..exceptions import NotPrimeError, TruncationTooSmallError, ValidationError
from ..models.reports import DeligneReport
from ..numfield import NumberField, rational_field
from ..series import substitute_L_to_puiseux, divisor_counts
from ..utils.logging import get_logger
from .cusp import CuspFormCoeffs

logger = get_logger(__name__)

Variant = Literal["paper", "puiseux", "classical"]

# "paper" 는 명령줄 표기, 내부에서는 puiseux 로 취급
VARIANT_ALIASES = {"paper": "puiseux", "puiseux": "puiseux", "classical": "classical"}


def _require_prime(p: int) -> None:
    if not sympy.isprime(p):
        raise NotPrimeError(p)


def t_p_polynomial(p: int, k: int, classical: bool = False,
                   field: Optional[NumberField] = None) -> AlgElem:
    """{p: 1, 1/p: p^{k-1}} (classical 이면 지수를 맞바꿈)"""
    _require_prime(p)
    field = field or rational_field()
    weight = p ** (k - 1)
    if classical:
        return AlgElem.from_dict(field, {Fraction(1, p): 1, p: weight})
    return AlgElem.from_dict(field, {p: 1, Fraction(1, p): weight})


def pr_QZ(f: AlgElem) -> AlgElem:
    """정수 지수 항만 남기는 직교 사영"""
    return AlgElem(f.field, tuple((e, a) for e, a in f.terms if e.is_rational_integer()), f.domain)


def _check_variant(variant: str) -> bool:
    if variant not in VARIANT_ALIASES:
        raise ValidationError(f"알 수 없는 변형입니다: {variant}", field_name="variant", field_value=variant)
    return VARIANT_ALIASES[variant] == "classical"


def _output_bound(f: CuspFormCoeffs, p: int) -> int:
    M = f.N // p
    if M < 1:
        raise TruncationTooSmallError(f"p={p} 에 대해 N={f.N} 이 너무 작습니다", truncation=f.N)
    return M


def hecke_Tp(f: CuspFormCoeffs, p: int, variant: Variant = "puiseux") -> CuspFormCoeffs:
    """pr_QZ(t_p x f) 를 필드 대수 안에서 그대로 계산"""
    classical = _check_variant(variant)
    _require_prime(p)
    M = _output_bound(f, p)
    image = substitute_L_to_puiseux(f.to_series())
    projected = pr_QZ(dirichlet_product(t_p_polynomial(p, f.weight, classical, image.field), image))
    values = []
    for m in range(1, M + 1):
        c = projected.coefficient(m)
        if Fraction(c).denominator != 1:
            raise ValidationError(f"헤케 상의 계수가 정수가 아닙니다: m={m}, {c}")
        values.append(int(c))
    logger.debug("헤케 작용소 적용", p=p, variant=variant, N=f.N, output_N=M)
    return CuspFormCoeffs(f.weight, M, tuple(values))


def hecke_direct(f: CuspFormCoeffs, p: int, variant: Variant = "puiseux") -> CuspFormCoeffs:
    """계수 공식을 직접 계산 (a_x = 0 for x not in N)"""
    classical = _check_variant(variant)
    _require_prime(p)
    M = _output_bound(f, p)
    w = p ** (f.weight - 1)
    values: List[int] = []
    for m in range(1, M + 1):
        a_div = f[m // p] if m % p == 0 else 0
        a_mul = f[m * p]
        values.append(a_mul + w * a_div if classical else a_div + w * a_mul)
    return CuspFormCoeffs(f.weight, M, tuple(values))


def deligne_bound_report(f: CuspFormCoeffs, tolerance: Optional[float] = None) -> DeligneReport:
    """
    |a_n| <= d(n) n^{(k-1)/2} (1 + tolerance) 를 제곱한 유리수 부등식으로 점검합니다.

    tolerance 를 주지 않으면 실행 설정의 허용오차를 씁니다.
    """
    if tolerance is None:
        tolerance = get_settings().run.tolerance
    if tolerance < 0:
        raise ValidationError("tolerance 는 0 이상이어야 합니다", field_name="tolerance", field_value=tolerance)
    slack = (1 + Fraction(tolerance)) ** 2
    k = f.weight
    d = divisor_counts(f.N)
    violations: List[int] = []
    max_ratio, argmax = 0.0, 1
    for n in range(1, f.N + 1):
        a = f[n]
        if a * a > d[n] * d[n] * n ** (k - 1) * slack:
            violations.append(n)
        ratio = abs(a) / (d[n] * n ** ((k - 1) / 2))
        if ratio > max_ratio:
            max_ratio, argmax = ratio, n
    return DeligneReport(
        N=f.N,
        weight=k,
        passed=not violations,
        checked=f.N,
        max_ratio=max_ratio,
        argmax=argmax,
        violations=violations,
        tolerance=tolerance,
    )


def l2_partial_sums(f: CuspFormCoeffs) -> List[float]:
    """sum_{n <= m} |lambda_n|^2, m = 1..N"""
    total = 0.0
    sums = []
    for n in range(1, f.N + 1):
        total += float(f.lambda_n(n)) ** 2
        sums.append(total)
    return sums

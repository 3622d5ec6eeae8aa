"""
수체 NumberField

모닉 정수계수 기약 최소다항식으로 주어진 완전실수체 K = Q(gamma) 를 다룹니다.
- 구성 시 기약성, 완전실수성, 임베딩 근사 검증
- 뉴턴 항등식 기반 거듭제곱합 (정확한 대각합용)
- 고정밀 정수관계 탐색으로 켤레를 K 안의 다항식으로 복원하여 갈루아 여부 판정
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Tuple, List, Optional, Sequence, Iterable

import mpmath
import sympy

from ..exceptions import (
    ValidationError,
    IrreducibilityError,
    NotTotallyRealError,
    NotGaloisError,
    NumericalError,
    FieldMismatchError,
)
from ..utils.logging import get_logger
from .element import NFElem

logger = get_logger(__name__)

_X = sympy.Symbol("x")

# 켤레 복원에 쓰는 작업 정밀도 (비트)
GALOIS_SEARCH_BITS = 512
EMBEDDING_RESIDUAL_TOLERANCE = 1e-12


def to_fraction(value) -> Fraction:
    """sympy 유리수를 Fraction 으로 변환"""
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


@lru_cache(maxsize=None)
def _real_roots(min_poly: Tuple[int, ...], bits: int) -> Tuple[mpmath.mpf, ...]:
    """최소다항식의 실근을 오름차순으로 근사"""
    if len(min_poly) == 2:
        return (mpmath.mpf(-min_poly[0]),)
    with mpmath.workprec(bits):
        try:
            roots = mpmath.polyroots(
                [mpmath.mpf(c) for c in reversed(min_poly)],
                maxsteps=400,
                extraprec=bits,
            )
        except mpmath.libmp.NoConvergence as e:
            raise NumericalError(
                f"최소다항식 {list(min_poly)} 의 근이 수렴하지 않습니다",
                details={"bits": bits},
            ) from e
        return tuple(sorted(+mpmath.re(r) for r in roots))


@lru_cache(maxsize=None)
def _isolating_intervals(min_poly: Tuple[int, ...], bits: int) -> Tuple[Tuple[Fraction, Fraction], ...]:
    """실근마다 폭 2^-bits 이하인 유리수 고립 구간 (오름차순)"""
    poly = sympy.Poly(list(reversed(min_poly)), _X, domain=sympy.ZZ)
    intervals = poly.intervals(eps=sympy.Rational(1, 2**bits))
    result = [(to_fraction(a), to_fraction(b)) for (a, b), _ in intervals]
    return tuple(sorted(result))


@dataclass(frozen=True, eq=False)
class NumberField:
    """
    완전실수 수체

    min_poly 는 상수항부터 최고차항(1)까지의 정수 계수입니다.
    K = Q 는 min_poly = (0, 1) 로 표현합니다.
    """

    min_poly: Tuple[int, ...]
    embedding_precision_bits: int = 53
    sign_precision_cap_bits: int = 256

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.min_poly)
        if any(int(c) != c for c in self.min_poly):
            raise ValidationError("최소다항식 계수는 정수여야 합니다", field_name="min_poly",
                                  field_value=list(self.min_poly))
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ValidationError("최소다항식은 차수 1 이상의 모닉 다항식이어야 합니다",
                                  field_name="min_poly", field_value=list(coeffs))
        object.__setattr__(self, "min_poly", coeffs)

        if self.degree > 1:
            if not self.sympy_poly.is_irreducible:
                raise IrreducibilityError(list(coeffs))
            real_roots = self.sympy_poly.count_roots()
            if real_roots != self.degree:
                raise NotTotallyRealError(list(coeffs), real_roots)
        self._check_embeddings()
        logger.debug("수체 생성", min_poly=list(coeffs), degree=self.degree)

    # === 동치 ===

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self) -> int:
        return hash(self.min_poly)

    def __repr__(self) -> str:
        return f"NumberField(min_poly={list(self.min_poly)})"

    # === 기본 구조 ===

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    @cached_property
    def sympy_poly(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.min_poly)), _X, domain=sympy.QQ)

    def element(self, coords: Iterable) -> NFElem:
        return NFElem(self, tuple(coords))

    def from_rational(self, value) -> NFElem:
        return NFElem(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))

    def coerce(self, value) -> NFElem:
        """NFElem, 정수, 유리수, 좌표 목록을 이 수체의 원소로 변환"""
        if isinstance(value, NFElem):
            if value.field != self:
                raise FieldMismatchError(
                    "다른 수체의 원소입니다",
                    min_poly=list(self.min_poly),
                    details={"other_min_poly": list(value.field.min_poly)},
                )
            return value
        if isinstance(value, (list, tuple)):
            return self.element(value)
        return self.from_rational(value)

    @cached_property
    def zero(self) -> NFElem:
        return self.from_rational(0)

    @cached_property
    def one(self) -> NFElem:
        return self.from_rational(1)

    @cached_property
    def gen(self) -> NFElem:
        """생성원 gamma (K = Q 이면 1)"""
        if self.degree == 1:
            return self.one
        return self.element([0, 1] + [0] * (self.degree - 2))

    def reduce(self, coeffs: List[Fraction]) -> Tuple[Fraction, ...]:
        """최소다항식 법으로 다항식 계수를 거듭제곱 기저 좌표로 환원"""
        d = self.degree
        work = list(coeffs)
        for k in range(len(work) - 1, d - 1, -1):
            c = work[k]
            if c:
                for i in range(d):
                    work[k - d + i] -= c * self.min_poly[i]
                work[k] = Fraction(0)
        work.extend([Fraction(0)] * (d - len(work)))
        return tuple(work[:d])

    def invert_coords(self, coords: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """Q[x]/(m) 에서의 역원 좌표"""
        poly = sympy.Poly(
            [sympy.Rational(c.numerator, c.denominator) for c in reversed(coords)],
            _X,
            domain=sympy.QQ,
        )
        inverse = poly.invert(self.sympy_poly)
        high_first = [to_fraction(c) for c in inverse.all_coeffs()]
        low_first = list(reversed(high_first))
        low_first.extend([Fraction(0)] * (self.degree - len(low_first)))
        return tuple(low_first)

    # === 대각합 ===

    @cached_property
    def power_sums(self) -> Tuple[Fraction, ...]:
        """근의 거듭제곱합 p_0, ..., p_{2d-2} (뉴턴 항등식)"""
        d = self.degree
        a = [Fraction(self.min_poly[d - i]) for i in range(d + 1)]  # x^d + a_1 x^{d-1} + ... + a_d
        sums = [Fraction(d)]
        for k in range(1, 2 * d - 1):
            if k <= d:
                total = k * a[k] + sum(a[i] * sums[k - i] for i in range(1, k))
            else:
                total = sum(a[i] * sums[k - i] for i in range(1, d + 1))
            sums.append(-total)
        return tuple(sums)

    def trace(self, x: NFElem) -> Fraction:
        """Tr_{K/Q}(x), 부동소수 없이 계산"""
        return sum((c * p for c, p in zip(x.coords, self.power_sums)), Fraction(0))

    @cached_property
    def trace_form(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """대각합 형식 행렬 Tr(gamma^{i+j})"""
        d = self.degree
        return tuple(tuple(self.power_sums[i + j] for j in range(d)) for i in range(d))

    @cached_property
    def dual_basis(self) -> Tuple[NFElem, ...]:
        """대각합 형식에 대한 거듭제곱 기저의 쌍대 기저 w_j (Tr(gamma^i w_j) = delta_ij)"""
        matrix = sympy.Matrix(
            [[sympy.Rational(v.numerator, v.denominator) for v in row] for row in self.trace_form]
        )
        inverse = matrix.inv()
        d = self.degree
        return tuple(
            self.element([to_fraction(inverse[j, i]) for i in range(d)]) for j in range(d)
        )

    # === 실수 임베딩 ===

    def roots(self, bits: Optional[int] = None) -> Tuple[mpmath.mpf, ...]:
        return _real_roots(self.min_poly, bits or self.embedding_precision_bits)

    @cached_property
    def embeddings(self) -> Tuple[float, ...]:
        """임베딩 근사값 (오름차순)"""
        return tuple(float(r) for r in self.roots())

    def _check_embeddings(self) -> None:
        roots = self.roots()
        with mpmath.workprec(self.embedding_precision_bits):
            for r in roots:
                value = mpmath.polyval([mpmath.mpf(c) for c in reversed(self.min_poly)], r)
                scale = sum(abs(c) * abs(r) ** i for i, c in enumerate(self.min_poly))
                if abs(value) > EMBEDDING_RESIDUAL_TOLERANCE * max(1, scale):
                    raise NumericalError(
                        "임베딩 근사가 최소다항식을 만족하지 않습니다",
                        details={"root": str(r), "residual": str(value)},
                    )
        if len(set(roots)) != len(roots):
            raise NumericalError("임베딩 근사가 서로 구별되지 않습니다",
                                 details={"min_poly": list(self.min_poly)})

    def embed(self, x: NFElem) -> Tuple[float, ...]:
        return tuple(float(self._evaluate_at(x, r)) for r in self.roots())

    @staticmethod
    def _evaluate_at(x: NFElem, root):
        value = mpmath.mpf(0)
        for c in reversed(x.coords):
            value = value * root + mpmath.mpf(c.numerator) / c.denominator
        return value

    def isolating_intervals(self, bits: int) -> Tuple[Tuple[Fraction, Fraction], ...]:
        if self.degree == 1:
            root = Fraction(-self.min_poly[0])
            return ((root, root),)
        return _isolating_intervals(self.min_poly, bits)

    # === 갈루아 구조 ===

    @cached_property
    def _conjugate_images(self) -> Tuple[Optional[NFElem], ...]:
        """j 번째 자기동형사상의 gamma 상 h_j(gamma) (h_j(r_0) = r_j), 찾지 못하면 None"""
        d = self.degree
        if d == 1:
            return (self.gen,)
        images: List[Optional[NFElem]] = []
        roots = self.roots(GALOIS_SEARCH_BITS)
        with mpmath.workprec(GALOIS_SEARCH_BITS):
            powers = [roots[0] ** i for i in range(d)]
            for j in range(d):
                if j == 0:
                    images.append(self.gen)
                    continue
                # r_j = sum c_i r_0^i 관계를 찾은 뒤 최소다항식으로 정확히 확인
                relation = mpmath.pslq([roots[j]] + powers, maxcoeff=10**12, maxsteps=20000)
                images.append(self._exact_conjugate(relation))
        found = sum(1 for h in images if h is not None)
        logger.debug("켤레 복원", min_poly=list(self.min_poly), found=found, degree=d)
        return tuple(images)

    def _exact_conjugate(self, relation) -> Optional[NFElem]:
        if relation is None or relation[0] == 0:
            return None
        candidate = self.element([Fraction(-c, relation[0]) for c in relation[1:]])
        value = self.zero
        for c in reversed(self.min_poly):
            value = value * candidate + c
        return candidate if value.is_zero() else None

    @property
    def galois_flag(self) -> bool:
        """켤레가 모두 K 안에 있는지 (Q 위 갈루아 확대 여부)"""
        return all(h is not None for h in self._conjugate_images)

    def require_galois(self) -> None:
        if not self.galois_flag:
            raise NotGaloisError(min_poly=list(self.min_poly))

    def automorphism_count(self) -> int:
        self.require_galois()
        return self.degree

    def automorphism_image(self, index: int) -> NFElem:
        """sigma_index(gamma)"""
        self.require_galois()
        if not 0 <= index < self.degree:
            raise ValidationError(f"자기동형사상 번호가 범위를 벗어납니다: {index}",
                                  field_name="sigma", field_value=index)
        image = self._conjugate_images[index]
        assert image is not None
        return image

    def apply_automorphism(self, index: int, x: NFElem) -> NFElem:
        image = self.automorphism_image(index)
        result = self.zero
        for c in reversed(x.coords):
            result = result * image + c
        return result

    @cached_property
    def permutations(self) -> Tuple[Tuple[int, ...], ...]:
        """임베딩 치환 pi_j: (sigma_j x)_nu = x_{pi_j(nu)}"""
        self.require_galois()
        roots = self.roots(GALOIS_SEARCH_BITS)
        perms = []
        with mpmath.workprec(GALOIS_SEARCH_BITS):
            for image in self._conjugate_images:
                perm = []
                for r in roots:
                    value = self._evaluate_at(image, r)
                    perm.append(min(range(len(roots)), key=lambda mu: abs(value - roots[mu])))
                perms.append(tuple(perm))
        return tuple(perms)

    def compose(self, i: int, j: int) -> int:
        """sigma_i . sigma_j 의 번호"""
        pi, pj = self.permutations[i], self.permutations[j]
        target = tuple(pj[pi[nu]] for nu in range(self.degree))
        return self.permutations.index(target)

    def inverse_automorphism(self, i: int) -> int:
        return next(k for k in range(self.degree) if self.compose(i, k) == 0)


def rational_field(**kwargs) -> NumberField:
    """K = Q"""
    return NumberField((0, 1), **kwargs)


def quadratic_field(D: int, **kwargs) -> NumberField:
    """실이차체 Q(sqrt D), D > 1 은 제곱인수가 없어야 함"""
    if D <= 1:
        raise ValidationError("D 는 1 보다 커야 합니다", field_name="D", field_value=D)
    if any(e > 1 for e in sympy.factorint(D).values()):
        raise ValidationError("D 는 제곱인수가 없어야 합니다", field_name="D", field_value=D)
    return NumberField((-D, 0, 1), **kwargs)

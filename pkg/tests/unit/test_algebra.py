"""
필드 대수 C[K] 테스트

코시/디리클레 곱, 항등원, 상수항 공식, 분배법칙 반례, Z_1 아핀 구조,
하디 등급, 갈루아 작용과 이동 작용소를 점검합니다.
"""

import logging
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.algebra import coefficients as coeffs
from src.algebra import (
    AlgElem,
    CoefficientDomain,
    gaussian,
    affine_compatibility,
    affine_ops,
    cauchy_product,
    constant_term_diagnostic,
    dirichlet_product,
    galois_act,
    grade,
    graded_dirichlet_components,
    non_distributivity_witness,
    normalize_Z1,
    shift,
    theta_conjugate,
    trace_functional,
)
from src.exceptions import (
    CoefficientDomainError,
    NotNormalizedError,
    TraceZeroError,
    ValidationError,
    ZeroShiftError,
)
from src.numfield import SignVector, quadratic_field, rational_field

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

Q = rational_field()

small_elems = st.dictionaries(
    keys=st.integers(min_value=-4, max_value=4),
    values=st.integers(min_value=-3, max_value=3),
    max_size=4,
).map(lambda d: AlgElem.from_dict(Q, d, CoefficientDomain.RATIONAL))


@pytest.fixture(scope="module")
def K():
    return quadratic_field(2)


def q_elem(mapping):
    return AlgElem.from_dict(Q, mapping, CoefficientDomain.RATIONAL)


class TestCoefficients:
    """계수 영역 (가우스 유리수는 sympy QQ_I 원소) 테스트"""

    def test_gaussian_arithmetic_is_exact(self):
        z = gaussian(Fraction(1, 2), 3)
        assert z * coeffs.conjugate(z) == gaussian(Fraction(37, 4))
        assert coeffs.abs_squared(z) == Fraction(37, 4)
        assert coeffs.gaussian_parts(1 / gaussian(0, 2)) == (0, Fraction(-1, 2))

    def test_domain_and_coercion(self):
        assert coeffs.domain_of(gaussian(1, 1)) is CoefficientDomain.GAUSSIAN
        assert coeffs.coerce(Fraction(2, 3), CoefficientDomain.GAUSSIAN) == gaussian(Fraction(2, 3))
        assert coeffs.to_complex(gaussian(1, -2)) == complex(1, -2)
        with pytest.raises(CoefficientDomainError):
            coeffs.coerce(gaussian(0, 1), CoefficientDomain.RATIONAL)

    def test_text_codec(self):
        value = coeffs.parse_value("1/3", "-2", CoefficientDomain.GAUSSIAN)
        assert coeffs.format_value(value) == ("1/3", "-2")
        assert coeffs.is_zero(coeffs.zero(CoefficientDomain.GAUSSIAN))
        assert coeffs.close(value, gaussian(Fraction(1, 3), -2), 0.0)


class TestProducts:
    """코시 곱과 디리클레 곱 테스트"""

    def test_dirichlet_square(self):
        f = q_elem({2: 1, 3: 1})
        assert dirichlet_product(f, f) == q_elem({4: 1, 6: 2, 9: 1})

    def test_cauchy_square(self):
        f = q_elem({1: 1, 2: 1})
        assert cauchy_product(f, f) == q_elem({2: 1, 3: 2, 4: 1})

    def test_identities(self, K):
        f = AlgElem.from_dict(K, {K.gen: 2, 1: Fraction(1, 3), 0: 5})
        assert cauchy_product(f, AlgElem.one_plus(K)) == f
        assert dirichlet_product(f, AlgElem.one_times(K)) == f

    def test_dirichlet_constant_term(self):
        """d0 = a0 T(g) + b0 T(f) - a0 b0"""
        f, g = q_elem({0: 1, 1: 1}), q_elem({0: 2, 2: 1})
        assert dirichlet_product(f, g).constant_term() == 5
        diagnostic = constant_term_diagnostic(f, g)
        assert diagnostic.product_constant == "5"
        assert diagnostic.alternative_constant == "4"
        assert not diagnostic.agree

    def test_trace_is_multiplicative(self, K):
        f = AlgElem.from_dict(K, {K.gen: 2, 1: 3})
        g = AlgElem.from_dict(K, {0: 1, -K.gen: Fraction(1, 2)})
        for product in (cauchy_product, dirichlet_product):
            assert trace_functional(product(f, g)) == trace_functional(f) * trace_functional(g)

    @settings(max_examples=40, deadline=None)
    @given(f=small_elems, g=small_elems, h=small_elems)
    def test_associativity_and_commutativity(self, f, g, h):
        for product in (cauchy_product, dirichlet_product):
            assert product(product(f, g), h) == product(f, product(g, h))
            assert product(f, g) == product(g, f)

    def test_non_distributivity_witness(self, K):
        witness = non_distributivity_witness(K)
        assert not witness.distributes
        assert witness.lhs != witness.rhs

    def test_domain_mismatch(self, K):
        f = AlgElem.monomial(K, 1)
        g = AlgElem.monomial(K, 1, gaussian(0, 1), CoefficientDomain.GAUSSIAN)
        with pytest.raises(CoefficientDomainError):
            cauchy_product(f, g)
        assert cauchy_product(f.to_domain(CoefficientDomain.GAUSSIAN), g) == g.map_exponents(lambda e: e + 1)

    def test_zero_coefficients_are_dropped(self):
        f = q_elem({1: 1, 2: 0})
        assert len(f) == 1
        assert (f - f).is_zero()


class TestAffineStructure:
    """Z_1 정규화와 아핀 연산 테스트"""

    def test_normalize(self):
        f = normalize_Z1(q_elem({1: 2, 2: 2}))
        assert f == q_elem({1: Fraction(1, 2), 2: Fraction(1, 2)})
        assert trace_functional(f) == 1

    def test_trace_zero(self):
        with pytest.raises(TraceZeroError):
            normalize_Z1(q_elem({1: 1, 2: -1}))

    def test_requires_normalized(self):
        with pytest.raises(NotNormalizedError):
            affine_ops("odot", q_elem({1: 2}), Fraction(1, 2))

    def test_dot_plus_and_odot(self):
        f, g = q_elem({2: 1}), q_elem({3: 1})
        assert affine_ops("dot_plus", f, g) == q_elem({0: -1, 2: 1, 3: 1})
        assert affine_ops("odot", f, 3) == q_elem({0: -2, 2: 3})
        assert trace_functional(affine_ops("odot", f, 3)) == 1

    def test_unknown_op(self):
        with pytest.raises(ValidationError):
            affine_ops("scale", q_elem({1: 1}), 2)

    def test_compatibility(self, K):
        h = normalize_Z1(AlgElem.from_dict(K, {K.gen: 1, 2: 1}))
        f = normalize_Z1(AlgElem.from_dict(K, {1: 3, -1: 1}))
        g = AlgElem.monomial(K, K.element([1, 1]))
        result = affine_compatibility(h, f, g, Fraction(2, 7))
        assert result == {"cauchy_dot_plus": True, "dirichlet_dot_plus": True, "dirichlet_odot": True}
        logger.info("아핀 호환성 테스트 통과")


class TestGrading:
    """하디 등급 테스트"""

    def test_grade_by_signs(self, K):
        f = AlgElem.from_dict(K, {0: 3, 1: 1, K.gen: 2, -1: 1})
        graded = grade(f)
        assert graded.constant == 3
        assert graded.component(SignVector((1, 1))) == AlgElem.monomial(K, 1)
        assert graded.component(SignVector((-1, 1))) == AlgElem.monomial(K, K.gen, 2)
        assert graded.component(SignVector((-1, -1))) == AlgElem.monomial(K, -1)
        assert graded.reassemble(f) == f

    def test_rational_grading_has_two_signs(self):
        graded = grade(q_elem({-2: 1, 0: 4, 5: 1}))
        assert graded.signs() == (SignVector((-1,)), SignVector((1,)))

    def test_graded_dirichlet_matches_product(self, K):
        f = AlgElem.from_dict(K, {1: 1, K.gen: 1})
        g = AlgElem.from_dict(K, {K.gen: 1, -1: 2})
        assert graded_dirichlet_components(f, g) == grade(dirichlet_product(f, g)).components

    def test_theta_conjugate(self):
        theta = SignVector((1, -1))
        point = (gaussian(1, 2), complex(3, 4))
        assert theta_conjugate(theta, point) == (gaussian(1, 2), complex(3, -4))


class TestActions:
    """갈루아 작용과 이동 작용소 테스트"""

    def test_galois_act(self, K):
        f = AlgElem.from_dict(K, {K.gen: 1, 1: 2})
        assert galois_act(1, f) == AlgElem.from_dict(K, {-K.gen: 1, 1: 2})
        assert galois_act(1, galois_act(1, f)) == f

    def test_galois_act_is_product_homomorphism(self, K):
        f = AlgElem.from_dict(K, {K.gen: 1, 1: 2})
        g = AlgElem.from_dict(K, {K.element([1, 1]): 3, 0: 1})
        for product in (cauchy_product, dirichlet_product):
            assert galois_act(1, product(f, g)) == product(galois_act(1, f), galois_act(1, g))

    def test_cauchy_shift(self, K):
        f = AlgElem.monomial(K, K.gen)
        assert shift("cauchy", 1, f) == AlgElem.monomial(K, K.element([1, -1]))

    def test_dirichlet_shift(self, K):
        f = AlgElem.from_dict(K, {K.gen: 1, 0: 5})
        assert shift("dirichlet", 2, f) == f

    def test_zero_dirichlet_shift(self, K):
        with pytest.raises(ZeroShiftError):
            shift("dirichlet", 0, AlgElem.monomial(K, 1))

    def test_unknown_mode(self, K):
        with pytest.raises(ValidationError):
            shift("mellin", 1, AlgElem.monomial(K, 1))

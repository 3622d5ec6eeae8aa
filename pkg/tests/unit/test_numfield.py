"""
수체 패키지 테스트

정확 산술, 대각합, 쌍대 기저, 부호 결정, 갈루아 자기동형사상을 점검합니다.
"""

import logging
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.exceptions import (
    DimensionMismatchError,
    DivisionByZeroError,
    FieldMismatchError,
    IrreducibilityError,
    NotGaloisError,
    NotTotallyRealError,
    ValidationError,
)
from src.numfield import (
    NumberField,
    SignVector,
    galois_apply,
    nf_arith,
    quadratic_field,
    rational_field,
    sign_of,
    trace,
)

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@pytest.fixture(scope="module")
def K():
    """Q(sqrt 2)"""
    return quadratic_field(2)


@pytest.fixture(scope="module")
def cyclic_cubic():
    """x^3 - 3x + 1 (갈루아 삼차체)"""
    return NumberField((1, -3, 0, 1))


class TestFieldConstruction:
    """수체 생성 검증 테스트"""

    def test_rational_field(self):
        Q = rational_field()
        assert Q.degree == 1
        assert Q.gen == Q.one
        assert Q.from_rational(3).embeddings() == (3.0,)

    def test_not_monic(self):
        with pytest.raises(ValidationError):
            NumberField((1, 2))

    def test_reducible(self):
        """x^2 - 4 는 기약이 아님"""
        with pytest.raises(IrreducibilityError):
            NumberField((-4, 0, 1))

    def test_not_totally_real(self):
        """x^2 + 1 은 실근이 없음"""
        with pytest.raises(NotTotallyRealError):
            NumberField((1, 0, 1))

    def test_quadratic_field_requires_squarefree(self):
        with pytest.raises(ValidationError):
            quadratic_field(8)
        with pytest.raises(ValidationError):
            quadratic_field(1)

    def test_embeddings_ascending(self, K):
        low, high = K.embeddings
        assert low == pytest.approx(-2 ** 0.5)
        assert high == pytest.approx(2 ** 0.5)


class TestArithmetic:
    """정확 산술 테스트"""

    def test_generator_squared(self, K):
        g = K.gen
        assert g * g == 2
        assert nf_arith("mul", g, g) == K.from_rational(2)

    def test_inverse(self, K):
        x = K.element([1, 1])
        assert x.inverse() == K.element([-1, 1])
        assert nf_arith("inv", x) * x == 1

    def test_zero_inverse(self, K):
        with pytest.raises(DivisionByZeroError):
            K.zero.inverse()

    def test_field_mismatch(self, K):
        with pytest.raises(FieldMismatchError):
            K.gen + quadratic_field(3).gen

    def test_coordinate_length(self, K):
        with pytest.raises(DimensionMismatchError):
            K.element([1, 2, 3])

    def test_missing_operand(self, K):
        with pytest.raises(ValidationError):
            nf_arith("add", K.one)

    @settings(max_examples=50, deadline=None)
    @given(a=small_fractions, b=small_fractions, c=small_fractions, d=small_fractions)
    def test_field_axioms(self, a, b, c, d):
        """곱의 분배법칙과 역원"""
        K = quadratic_field(2)
        x, y = K.element([a, b]), K.element([c, d])
        assert x * (y + K.one) == x * y + x
        if not x.is_zero():
            assert (y / x) * x == y

    def test_total_order_and_hash(self, K):
        values = {K.element([1, 0]), K.from_rational(1), K.gen}
        assert len(values) == 2
        assert sorted([K.gen, K.one, K.zero]) == [K.zero, K.gen, K.one]


class TestTraceAndDualBasis:
    """대각합과 쌍대 기저 테스트"""

    def test_trace_values(self, K):
        assert trace(K.one) == 2
        assert trace(K.gen) == 0
        assert trace(K.element([Fraction(1, 2), 3])) == 1

    def test_trace_matches_embeddings(self, cyclic_cubic):
        x = cyclic_cubic.element([1, 2, -1])
        assert float(trace(x)) == pytest.approx(sum(x.embeddings()))

    def test_dual_basis(self, K):
        w0, w1 = K.dual_basis
        assert w0 == K.from_rational(Fraction(1, 2))
        assert w1 == K.element([0, Fraction(1, 4)])
        for i, power in enumerate((K.one, K.gen)):
            for j, w in enumerate(K.dual_basis):
                assert trace(power * w) == (1 if i == j else 0)

    def test_rational_trace_is_degree_multiple(self, cyclic_cubic):
        assert trace(cyclic_cubic.from_rational(Fraction(2, 3))) == 2


class TestSigns:
    """부호 결정 테스트"""

    def test_rational_signs(self, K):
        assert sign_of(K.from_rational(-3)) == SignVector((-1, -1))

    def test_generator_signs(self, K):
        assert sign_of(K.gen) == SignVector((-1, 1))
        assert sign_of(K.element([1, 1])) == SignVector((-1, 1))
        assert sign_of(K.element([3, 1])) == SignVector((1, 1))

    def test_zero_has_no_sign(self, K):
        with pytest.raises(ValidationError):
            sign_of(K.zero)

    def test_close_to_zero_needs_precision(self, K):
        """577/408 - sqrt 2 ~ 2e-6 은 기본 정밀도로도 결정됨"""
        x = K.element([Fraction(577, 408), -1])
        assert sign_of(x).signs[1] == 1

    def test_sign_vector_algebra(self):
        a, b = SignVector.parse("+-"), SignVector.parse("(-,-)")
        assert a * b == SignVector((-1, 1))
        assert SignVector.positive(2).is_diagonal()
        assert not a.is_diagonal()
        assert str(a) == "(+,-)"
        with pytest.raises(ValidationError):
            SignVector((0, 1))


class TestGalois:
    """갈루아 자기동형사상 테스트"""

    def test_quadratic_conjugation(self, K):
        assert K.galois_flag
        assert K.automorphism_count() == 2
        assert galois_apply(0, K.gen) == K.gen
        assert galois_apply(1, K.gen) == -K.gen
        assert K.permutations[1] == (1, 0)

    def test_embedding_permutation(self, K):
        x = K.element([1, 3])
        image = galois_apply(1, x)
        perm = K.permutations[1]
        for nu in range(2):
            assert image.embeddings()[nu] == pytest.approx(x.embeddings()[perm[nu]])

    def test_cyclic_cubic_group(self, cyclic_cubic):
        assert cyclic_cubic.galois_flag
        n = cyclic_cubic.automorphism_count()
        assert n == 3
        for i in range(n):
            inverse = cyclic_cubic.inverse_automorphism(i)
            assert cyclic_cubic.compose(i, inverse) == 0
            x = cyclic_cubic.gen
            assert galois_apply(inverse, galois_apply(i, x)) == x

    def test_automorphism_is_ring_map(self, cyclic_cubic):
        x, y = cyclic_cubic.element([1, 2, 0]), cyclic_cubic.element([0, -1, 3])
        for i in range(3):
            assert galois_apply(i, x * y) == galois_apply(i, x) * galois_apply(i, y)
            assert trace(galois_apply(i, x)) == trace(x)

    def test_non_galois_cubic(self):
        """x^3 - 4x + 1 은 완전실수이지만 갈루아가 아님"""
        field = NumberField((1, -4, 0, 1))
        assert not field.galois_flag
        with pytest.raises(NotGaloisError):
            field.automorphism_count()
        logger.info("비갈루아 삼차체 테스트 통과")

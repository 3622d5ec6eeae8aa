"""
디리클레 급수 테스트

디리클레 곱과 역원(뫼비우스), 서로소 곱, 다중로그 계수, 곱셈성 판정,
멱급수 역원과 오일러 곱, 소수 벡터와 비주기 동치, 퓌죄 치환을 점검합니다.
"""

import logging
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.algebra import AlgElem, CoefficientDomain
from src.exceptions import (
    BoundMismatchError,
    NonIntegerSupportError,
    NonUnitError,
    TruncationMismatchError,
    ValidationError,
)
from src.numfield import rational_field
from src.series import (
    AperiodicClass,
    ArithSeries,
    Multiplicativity,
    PowerSeries,
    PrimeVector,
    aperiodic_equiv,
    cauchy_inverse_powerseries,
    dconv,
    dinv,
    divisor_counts,
    euler_product,
    factorize,
    multiplicativity,
    polylog_coeffs,
    primes_up_to,
    puiseux_to_L,
    rp_conv,
    rp_inv,
    smallest_prime_factor,
    substitute_L_to_puiseux,
)

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

MOBIUS_1_TO_10 = (1, -1, -1, 0, -1, 1, -1, 0, 0, 1)


def unit_series(N):
    """f(1) 이 0 이 아닌 유리수 급수"""
    head = st.integers(min_value=1, max_value=3)
    tail = st.lists(st.integers(min_value=-3, max_value=3), min_size=N - 1, max_size=N - 1)
    return st.tuples(head, tail).map(lambda t: ArithSeries(N, (t[0], *t[1])))


class TestDirichletConvolution:
    """디리클레 곱과 역원 테스트"""

    def test_mobius(self):
        mu = dinv(ArithSeries.ones(10))
        assert mu.coeffs == MOBIUS_1_TO_10
        assert dconv(mu, ArithSeries.ones(10)) == ArithSeries.identity(10)

    def test_divisor_function(self):
        d = dconv(ArithSeries.ones(12), ArithSeries.ones(12))
        assert list(d.coeffs) == list(divisor_counts(12)[1:])

    def test_number_theory_helpers(self):
        assert divisor_counts(12)[1:] == (1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6)
        assert factorize(360) == {2: 3, 3: 2, 5: 1}
        assert factorize(1) == {}
        assert smallest_prime_factor(91) == 7
        assert primes_up_to(20) == (2, 3, 5, 7, 11, 13, 17, 19)

    def test_identity_is_neutral(self):
        f = ArithSeries.from_dict(6, {1: 2, 4: Fraction(1, 3), 6: -1})
        assert dconv(f, ArithSeries.identity(6)) == f

    @settings(max_examples=30, deadline=None)
    @given(f=unit_series(12))
    def test_inverse_property(self, f):
        assert dconv(f, dinv(f)) == ArithSeries.identity(12)

    @settings(max_examples=30, deadline=None)
    @given(f=unit_series(10), g=unit_series(10), h=unit_series(10))
    def test_associative(self, f, g, h):
        assert dconv(dconv(f, g), h) == dconv(f, dconv(g, h))

    def test_non_unit(self):
        with pytest.raises(NonUnitError):
            dinv(ArithSeries.delta(5, 2))

    def test_truncation_mismatch(self):
        with pytest.raises(TruncationMismatchError):
            dconv(ArithSeries.ones(4), ArithSeries.ones(5))

    def test_invalid_truncation(self):
        with pytest.raises(ValidationError):
            ArithSeries(0, ())

    def test_gaussian_coefficients(self):
        f = ArithSeries.from_dict(8, {1: 1, 2: 1})
        g = f.to_domain(CoefficientDomain.GAUSSIAN)
        assert dconv(g, dinv(g)) == ArithSeries.identity(8, CoefficientDomain.GAUSSIAN)


class TestCoprimeConvolution:
    """서로소 디리클레 곱 테스트"""

    def test_two_to_omega(self):
        """1 과 1 의 서로소 곱은 2^omega(n)"""
        f = rp_conv(ArithSeries.ones(12), ArithSeries.ones(12))
        assert f[1] == 1
        assert f[4] == 2
        assert f[6] == 4
        assert f[12] == 4

    def test_inverse(self):
        """1 의 서로소 역원은 (-1)^omega(n)"""
        inv = rp_inv(ArithSeries.ones(12))
        assert inv[2] == -1
        assert inv[4] == -1
        assert inv[6] == 1
        assert inv[12] == 1
        assert rp_conv(ArithSeries.ones(12), inv) == ArithSeries.identity(12)

    def test_non_unit(self):
        with pytest.raises(NonUnitError):
            rp_inv(ArithSeries.delta(4, 3))


class TestPolylogAndMultiplicativity:
    """다중로그 계수와 곱셈성 판정 테스트"""

    def test_integer_exponent_is_exact(self):
        f = polylog_coeffs(2, 4)
        assert f.domain is CoefficientDomain.RATIONAL
        assert f.coeffs == (1, Fraction(1, 4), Fraction(1, 9), Fraction(1, 16))

    def test_real_exponent_is_complex(self):
        f = polylog_coeffs(1.5, 4)
        assert f.domain is CoefficientDomain.COMPLEX
        assert f[4].real == pytest.approx(0.125)

    @pytest.mark.parametrize("s0", [0.5, 0, -2, Fraction(1, 2)])
    def test_exponent_below_one_rejected(self, s0):
        """s0 < 1 이면 급수가 발산하므로 거부"""
        with pytest.raises(ValidationError):
            polylog_coeffs(s0, 4)

    def test_classification(self):
        assert multiplicativity(ArithSeries.ones(30)) is Multiplicativity.COMPLETELY_MULTIPLICATIVE
        assert multiplicativity(polylog_coeffs(3, 30)) is Multiplicativity.COMPLETELY_MULTIPLICATIVE
        assert multiplicativity(dinv(ArithSeries.ones(30))) is Multiplicativity.MULTIPLICATIVE
        d = dconv(ArithSeries.ones(30), ArithSeries.ones(30))
        assert multiplicativity(d) is Multiplicativity.MULTIPLICATIVE
        assert multiplicativity(ArithSeries.from_dict(6, {1: 1, 2: 1, 3: 1, 6: 5})) is Multiplicativity.NEITHER

    def test_normalizes_by_leading_coefficient(self):
        assert multiplicativity(ArithSeries.ones(20).scale(3)) is Multiplicativity.COMPLETELY_MULTIPLICATIVE

    def test_vanishing_leading_coefficient(self):
        """f(1) = 0 이면 neither"""
        assert multiplicativity(ArithSeries.delta(10, 2)) is Multiplicativity.NEITHER


class TestPowerSeries:
    """멱급수 테스트"""

    def test_geometric_inverse(self):
        f = PowerSeries.from_list([1, -1], 6)
        assert cauchy_inverse_powerseries(f).coeffs == (1,) * 7
        assert f * f.inverse() == PowerSeries.one(6)

    def test_euler_product(self):
        """오일러 오각수 정리: prod (1 - q^n) = 1 - q - q^2 + q^5 + q^7 - ..."""
        assert euler_product(7, 1).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)

    def test_non_unit(self):
        with pytest.raises(NonUnitError):
            PowerSeries.from_list([0, 1], 4).inverse()

    def test_alg_elem_round_trip(self):
        f = PowerSeries.from_list([2, 0, Fraction(1, 3)], 4)
        assert PowerSeries.from_alg_elem(f.to_alg_elem(), 4) == f

    def test_non_integer_support(self):
        elem = AlgElem.monomial(rational_field(), Fraction(1, 2))
        with pytest.raises(NonIntegerSupportError):
            PowerSeries.from_alg_elem(elem, 4)


class TestPrimeVectors:
    """소수 벡터와 비주기 동치 테스트"""

    def test_to_series(self):
        identity = PrimeVector.from_function(10, lambda p: p)
        assert identity.to_series(10) == ArithSeries.from_function(10, lambda n: n)

    def test_bound_mismatch(self):
        vector = PrimeVector.from_function(10, lambda p: 1)
        with pytest.raises(BoundMismatchError):
            vector.to_series(12)
        with pytest.raises(BoundMismatchError):
            PrimeVector.from_series(ArithSeries.ones(5), 7)

    def test_from_series(self):
        vector = PrimeVector.from_series(polylog_coeffs(1, 20), 7)
        assert vector.value(5) == Fraction(1, 5)
        with pytest.raises(ValidationError):
            vector.value(4)

    def test_group_product(self):
        a = PrimeVector.from_function(10, lambda p: p)
        b = PrimeVector.from_function(10, lambda p: Fraction(1, p))
        assert (a * b).to_series(10) == ArithSeries.ones(10)

    def test_aperiodic_equivalence(self):
        ones = PrimeVector.from_function(20, lambda p: 1)
        twisted = PrimeVector.from_function(20, lambda p: -1 if p == 3 else 1)
        assert ones.differing_primes(twisted) == (3,)
        assert not aperiodic_equiv(AperiodicClass(ones), AperiodicClass(twisted))
        assert aperiodic_equiv(AperiodicClass(ones), AperiodicClass(twisted).with_exceptional({3}))


class TestPuiseux:
    """n^{-s} -> eta^n 치환 테스트"""

    def test_round_trip(self):
        f = ArithSeries.from_dict(8, {1: 1, 3: Fraction(-2, 5), 8: 4})
        elem = substitute_L_to_puiseux(f)
        assert elem.coefficient(3) == Fraction(-2, 5)
        assert puiseux_to_L(elem, 8) == f

    def test_truncates_large_exponents(self):
        f = ArithSeries.from_dict(8, {2: 1, 7: 1})
        assert puiseux_to_L(substitute_L_to_puiseux(f), 4) == ArithSeries.delta(4, 2)

    def test_rejects_non_positive_exponents(self):
        elem = AlgElem.from_dict(rational_field(), {0: 1, 2: 1})
        with pytest.raises(NonIntegerSupportError):
            puiseux_to_L(elem, 4)
        logger.info("퓌죄 치환 테스트 통과")

"""
모듈러 형식 테스트

Delta 계수(오라클 비교), t_p 와 정수 지수 사영, 두 규약의 헤케 작용소,
들리뉴 한계 보고서를 점검합니다.
"""

import logging
from fractions import Fraction

import pytest

from config.settings import get_settings
from src.exceptions import CapExceededError, NotPrimeError, TruncationTooSmallError, ValidationError
from src.modular import (
    CuspFormCoeffs,
    deligne_bound_report,
    delta_by_euler_product,
    delta_expansion,
    hecke_direct,
    hecke_Tp,
    l2_partial_sums,
    pr_QZ,
    t_p_polynomial,
)

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

TAU_1_TO_5 = (1, -24, 252, -1472, 4830)


@pytest.fixture(scope="module")
def delta():
    return delta_expansion(64)


class TestDelta:
    """Delta q-전개 테스트"""

    def test_known_tau_values(self, delta):
        assert delta.coeffs[:5] == TAU_1_TO_5
        assert delta.weight == 12

    def test_matches_euler_product_oracle(self, delta):
        assert delta == delta_by_euler_product(64)

    def test_normalized_coefficient(self, delta):
        assert delta.lambda_n(2) == Fraction(-3, 8)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            delta_expansion(100, cap=50)

    def test_weight_validation(self):
        with pytest.raises(ValidationError):
            CuspFormCoeffs(10, 1, (1,))


class TestHecke:
    """헤케 작용소 테스트"""

    def test_t_p_polynomial(self):
        t2 = t_p_polynomial(2, 12)
        assert t2.coefficient(2) == 1
        assert t2.coefficient(Fraction(1, 2)) == 2048
        assert pr_QZ(t2).support() == (t2.field.from_rational(2),)

    def test_classical_eigenform(self, delta):
        image = hecke_Tp(delta, 2, "classical")
        assert image.N == 32
        assert image == delta.truncate(32).scale(-24)

    def test_puiseux_coefficients(self, delta):
        image = hecke_Tp(delta, 2, "puiseux")
        assert image[1] == 2048 * -24
        assert image[2] == 1 + 2048 * -1472

    @pytest.mark.parametrize("variant", ["puiseux", "classical"])
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_field_algebra_matches_direct(self, delta, p, variant):
        assert hecke_Tp(delta, p, variant) == hecke_direct(delta, p, variant)

    def test_commutativity(self, delta):
        for variant in ("puiseux", "classical"):
            a = hecke_direct(hecke_direct(delta, 2, variant), 3, variant)
            b = hecke_direct(hecke_direct(delta, 3, variant), 2, variant)
            M = min(a.N, b.N)
            assert a.truncate(M) == b.truncate(M)

    def test_truncation_too_small(self):
        with pytest.raises(TruncationTooSmallError):
            hecke_Tp(delta_expansion(3), 5, "classical")

    def test_not_prime(self, delta):
        with pytest.raises(NotPrimeError):
            hecke_Tp(delta, 4)

    def test_paper_alias_matches_puiseux(self, delta):
        """명령줄 표기 paper 는 puiseux 와 같은 결과"""
        assert hecke_direct(delta, 2, "paper") == hecke_direct(delta, 2, "puiseux")
        assert hecke_Tp(delta, 3, "paper") == hecke_Tp(delta, 3, "puiseux")

    def test_unknown_variant(self, delta):
        with pytest.raises(ValidationError):
            hecke_direct(delta, 2, "bogus")


class TestDiagnostics:
    """들리뉴 한계와 l2 부분합 테스트"""

    def test_deligne_bound(self):
        report = deligne_bound_report(delta_expansion(200))
        assert report.passed
        assert report.checked == 200
        assert report.violations == []
        assert 0 < report.max_ratio <= 1

    def test_deligne_tolerance(self):
        """a_2 = 91 은 한계 2 * 2^{11/2} ~ 90.51 을 약 0.5% 넘음"""
        f = CuspFormCoeffs(12, 2, (1, 91))
        strict = deligne_bound_report(f, tolerance=0.0)
        assert not strict.passed
        assert strict.violations == [2]
        loose = deligne_bound_report(f, tolerance=0.01)
        assert loose.passed
        assert loose.tolerance == 0.01

    def test_deligne_default_tolerance_from_settings(self):
        report = deligne_bound_report(delta_expansion(20))
        assert report.tolerance == get_settings().run.tolerance

    def test_negative_tolerance_rejected(self, delta):
        with pytest.raises(ValidationError):
            deligne_bound_report(delta, tolerance=-1e-3)

    def test_l2_partial_sums(self, delta):
        sums = l2_partial_sums(delta)
        assert sums[0] == pytest.approx(1.0)
        assert all(a <= b for a, b in zip(sums, sums[1:]))
        logger.info("l2 부분합 테스트 통과")

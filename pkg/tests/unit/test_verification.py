"""
검증 스위트 실행 테스트

스위트 등록, 시드 재현성, 'all' 실행의 이름 접두, 반례 점검의 ok 판정,
실제 소규모 스위트의 통과 여부를 점검합니다.
"""

import logging

import pytest

from config.settings import RunSettings
from src.exceptions import ValidationError
from src.models.reports import PropertyCheck, VerificationStatus
from src.verification import SUITES, check, run_suite, suite_names

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


@pytest.fixture
def run_settings():
    return RunSettings(N=60, seed=7)


def _sampling_suite(ctx):
    draws = [ctx.rng.randint(0, 10 ** 6) for _ in range(3)]
    return [check("표본", [True], detail=",".join(map(str, draws)))]


def _failing_suite(ctx):
    return [check("항상 실패", [True, False])]


class TestRegistry:
    """스위트 등록 테스트"""

    def test_expected_suites_registered(self):
        for name in ("mobius", "dirichlet-inverse", "hecke-puiseux", "hecke-classical",
                     "convisprod", "zeta-p", "boxplus", "flows", "orthonormality"):
            assert name in SUITES
        assert suite_names()[-1] == "all"

    def test_unknown_suite(self, run_settings):
        with pytest.raises(ValidationError):
            run_suite("no-such-suite", run_settings)

    def test_check_expect_failure(self):
        broken = check("반례", [True, False], expect_failure=True)
        assert broken.ok
        assert not check("반례", [True, True], expect_failure=True).ok
        assert broken.summary() == "반례: 1/2"


class TestRunSuite:
    """run_suite 테스트"""

    def test_same_seed_same_samples(self, mocker, run_settings):
        mocker.patch.dict(SUITES, {"sampling": _sampling_suite})
        first = run_suite("sampling", run_settings)
        second = run_suite("sampling", run_settings)
        assert first.checks[0].detail == second.checks[0].detail
        other = run_suite("sampling", RunSettings(seed=8))
        assert other.checks[0].detail != first.checks[0].detail

    def test_all_prefixes_names(self, mocker, run_settings):
        mocker.patch.dict(SUITES, {"a": _sampling_suite, "b": _failing_suite}, clear=True)
        report = run_suite("all", run_settings)
        assert [c.name for c in report.checks] == ["a/표본", "b/항상 실패"]
        assert report.status is VerificationStatus.FAILED
        assert report.duration_seconds is not None

    def test_to_output_is_deterministic(self, mocker, run_settings):
        mocker.patch.dict(SUITES, {"sampling": _sampling_suite})
        output = run_suite("sampling", run_settings).to_output()
        assert output == run_suite("sampling", run_settings).to_output()
        assert output["status"] == "pass"
        assert "created_at" not in output


class TestBuiltinSuites:
    """소규모 실제 스위트 테스트"""

    @pytest.mark.parametrize("name", ["mobius", "dirichlet-inverse", "hecke-puiseux", "convisprod"])
    def test_passes(self, run_settings, name):
        report = run_suite(name, run_settings, truncation=60, samples=5)
        failing = [c.summary() for c in report.checks if not c.ok]
        assert report.status is VerificationStatus.PASSED, failing

    def test_dirichlet_inverse_counts(self, run_settings):
        report = run_suite("dirichlet-inverse", run_settings, truncation=40)
        first = report.checks[0]
        assert isinstance(first, PropertyCheck)
        assert first.summary() == "f∗f⁻¹=ε: 40/40"

    def test_counterexample_is_recorded(self, run_settings):
        report = run_suite("hecke-puiseux", run_settings)
        eigen = [c for c in report.checks if c.expect_failure]
        assert eigen and all(c.passed < c.total for c in eigen)
        logger.info("반례 점검 테스트 통과")

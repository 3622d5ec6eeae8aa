"""
성질 검증 패키지

시드 고정 표본으로 대수적 항등식과 저장된 반례를 점검하는 스위트들을 제공합니다.
"""

from .registry import SUITES, SuiteContext, check, register, run_suite, suite_names
from . import suites  # noqa: F401  (스위트 등록)

__all__ = [
    "SUITES",
    "SuiteContext",
    "check",
    "register",
    "run_suite",
    "suite_names",
]

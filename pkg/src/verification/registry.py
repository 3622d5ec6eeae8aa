"""
검증 스위트 등록과 실행

각 스위트는 SuiteContext 를 받아 PropertyCheck 목록을 돌려줍니다. 스위트마다
설정 시드로 새 random.Random 을 만들므로 실행 순서와 관계없이 결과가 같습니다.
"""

import random
from dataclasses import dataclass
from datetime import datetime
from typing import Callable, Dict, Iterable, List, Optional

from config.settings import RunSettings
from ..exceptions import ValidationError
from ..models.reports import PropertyCheck, VerificationReport
from ..utils.logging import get_logger, log_performance, log_verification_result, LogContextDecorator

logger = get_logger(__name__)


@dataclass
class SuiteContext:
    settings: RunSettings
    rng: random.Random
    truncation: Optional[int] = None
    samples: Optional[int] = None
    scale: int = 1
    points: Optional[int] = None

    def N(self, default: int) -> int:
        """-N 로 명시한 절단 차수, 없으면 스위트 기본값"""
        return self.truncation or default

    def count(self, default: int) -> int:
        return self.samples or default


SuiteFn = Callable[[SuiteContext], List[PropertyCheck]]
SUITES: Dict[str, SuiteFn] = {}


def register(name: str) -> Callable[[SuiteFn], SuiteFn]:
    def decorator(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn
    return decorator


def check(name: str, outcomes: Iterable[bool], detail: Optional[str] = None,
          expect_failure: bool = False) -> PropertyCheck:
    results = [bool(o) for o in outcomes]
    return PropertyCheck(
        name=name,
        passed=sum(results),
        total=len(results),
        detail=detail,
        expect_failure=expect_failure,
    )


def suite_names() -> List[str]:
    return sorted(SUITES) + ["all"]


@LogContextDecorator(component="verification")
def run_suite(
    name: str,
    settings: RunSettings,
    truncation: Optional[int] = None,
    samples: Optional[int] = None,
    scale: int = 1,
    points: Optional[int] = None,
) -> VerificationReport:
    """이름으로 스위트를 실행 ('all' 은 등록된 모든 스위트)"""
    if name != "all" and name not in SUITES:
        raise ValidationError(
            f"알 수 없는 검증 스위트입니다: {name}",
            field_name="suite", field_value=name,
            suggestions=[f"사용 가능: {', '.join(suite_names())}"],
        )
    names = sorted(SUITES) if name == "all" else [name]
    report = VerificationReport(suite=name, seed=settings.seed)
    started = datetime.now()
    for suite in names:
        ctx = SuiteContext(
            settings=settings,
            rng=random.Random(settings.seed),
            truncation=truncation,
            samples=samples,
            scale=scale,
            points=points,
        )
        suite_started = datetime.now()
        for result in SUITES[suite](ctx):
            if name == "all":
                result = result.model_copy(update={"name": f"{suite}/{result.name}"})
            log_verification_result(suite, result.name, result.passed, result.total,
                                    expect_failure=result.expect_failure, ok=result.ok)
            report.add(result)
        log_performance(f"verify:{suite}", suite_started)
    report.duration_seconds = log_performance(f"verify:{name}", started, checks=len(report.checks))
    return report

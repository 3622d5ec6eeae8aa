"""
검증 및 진단 보고서 모델들

검증 스위트의 성질별 통과 수, 들리뉴 한계 점검, 멜린 적분 점검,
상수항 진단, 토러스 정규직교성 점검 결과를 구조화합니다.
"""

from datetime import datetime
from enum import Enum
from typing import Optional, List, Dict, Any, Annotated

from pydantic import BaseModel, Field


class VerificationStatus(str, Enum):
    """검증 상태 열거형"""
    PASSED = "pass"
    FAILED = "fail"


class PropertyCheck(BaseModel):
    """성질 하나에 대한 표본 검증 결과"""
    name: str = Field(..., description="성질 이름")
    passed: Annotated[int, Field(ge=0)] = Field(..., description="통과한 표본 수")
    total: Annotated[int, Field(ge=0)] = Field(..., description="전체 표본 수")
    detail: Optional[str] = Field(None, description="부가 설명 또는 반례")
    expect_failure: bool = Field(False, description="반례 제시용 성질 (실패가 기대됨)")

    @property
    def ok(self) -> bool:
        """기대대로 동작했는지 여부"""
        holds = self.passed == self.total
        return not holds if self.expect_failure else holds

    def summary(self) -> str:
        return f"{self.name}: {self.passed}/{self.total}"


class VerificationReport(BaseModel):
    """검증 스위트 보고서"""
    suite: str = Field(..., description="스위트 이름")
    seed: int = Field(..., description="난수 시드")
    checks: List[PropertyCheck] = Field(default_factory=list, description="성질별 결과")
    duration_seconds: Optional[float] = Field(None, ge=0, description="소요 시간")
    created_at: datetime = Field(default_factory=datetime.now, description="보고서 생성 시각")

    @property
    def status(self) -> VerificationStatus:
        if all(check.ok for check in self.checks):
            return VerificationStatus.PASSED
        return VerificationStatus.FAILED

    def add(self, check: PropertyCheck) -> None:
        self.checks.append(check)

    def to_output(self) -> Dict[str, Any]:
        """출력용 딕셔너리 (시각 정보 제외로 실행 간 동일)"""
        return {
            "suite": self.suite,
            "seed": self.seed,
            "status": self.status.value,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "total": c.total,
                    "expect_failure": c.expect_failure,
                    "ok": c.ok,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


class DeligneReport(BaseModel):
    """|a_n| <= d(n) n^{(k-1)/2} 점검 결과"""
    N: int = Field(..., ge=1)
    weight: int = Field(..., ge=2)
    passed: bool = Field(..., description="모든 n 에서 한계 만족")
    checked: int = Field(..., ge=0, description="점검한 n 의 개수")
    max_ratio: float = Field(..., ge=0, description="|a_n| / (d(n) n^{(k-1)/2}) 의 최댓값")
    argmax: int = Field(..., ge=1, description="최댓값을 주는 n")
    violations: List[int] = Field(default_factory=list, description="한계를 넘는 n")
    tolerance: float = Field(0.0, ge=0, description="상대 허용오차")


class MellinReport(BaseModel):
    """n^{-s} 의 멜린 적분 표현 수치 점검 결과"""
    n: int = Field(..., ge=1)
    s: float = Field(..., gt=0)
    quadrature_value: float
    closed_form: float
    error_estimate: float = Field(..., ge=0)
    relative_error: float = Field(..., ge=0)
    reconstructed: float = Field(..., description="적분값에서 복원한 n^{-s}")
    expected: float = Field(..., description="n^{-s}")


class ConstantTermDiagnostic(BaseModel):
    """디리클레 곱 상수항의 두 공식 비교"""
    product_constant: str = Field(..., description="곱의 실제 상수항 a0 T(g) + b0 T(f) - a0 b0")
    alternative_constant: str = Field(..., description="T(f) T(g) - a0 b0")
    agree: bool


class OrthonormalityReport(BaseModel):
    """토러스 위 지표 내적 수치 점검 결과"""
    alpha: List[str]
    beta: List[str]
    scale: int = Field(..., ge=1)
    points: int = Field(..., ge=1, description="실제 사용한 격자점 수")
    estimate_re: float
    estimate_im: float
    expected: float
    deviation: float = Field(..., ge=0)

"""
비선형 수체(nonlinear number field) 툴킷 커스텀 예외 클래스들

이 모듈은 수체 산술, 필드 대수, 디리클레 급수, 지표, 모듈러 형식, 흐름 계산에서
발생할 수 있는 예외 상황들을 처리하기 위한 구조화된 예외 클래스들을 정의합니다.
"""

from typing import Optional, Dict, Any, List
from enum import Enum
from datetime import datetime


class ErrorSeverity(str, Enum):
    """에러 심각도 레벨"""
    LOW = "낮음"
    MEDIUM = "중간"
    HIGH = "높음"
    CRITICAL = "치명적"


class ErrorCategory(str, Enum):
    """에러 카테고리"""
    VALIDATION = "검증"
    ARITHMETIC = "산술"
    FIELD = "수체구조"
    SERIES = "급수"
    CHARACTER = "지표"
    NUMERIC = "수치계산"
    SYSTEM = "시스템"


class BaseNumberFieldError(Exception):
    """
    툴킷 기본 예외 클래스

    모든 커스텀 예외는 이 클래스를 상속받아 구현됩니다.
    에러 추적과 디버깅을 위한 공통 기능을 제공합니다.
    """

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        severity: ErrorSeverity = ErrorSeverity.MEDIUM,
        category: ErrorCategory = ErrorCategory.SYSTEM,
        details: Optional[Dict[str, Any]] = None,
        suggestions: Optional[List[str]] = None
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self._generate_error_code()
        self.severity = severity
        self.category = category
        self.details = details or {}
        self.suggestions = suggestions or []

    def _generate_error_code(self) -> str:
        """에러 코드 자동 생성"""
        class_name = self.__class__.__name__
        return f"{class_name.upper()}_001"

    def to_dict(self) -> Dict[str, Any]:
        """예외 정보를 딕셔너리로 변환"""
        return {
            "error_type": self.__class__.__name__,
            "message": self.message,
            "error_code": self.error_code,
            "severity": self.severity.value,
            "category": self.category.value,
            "details": self.details,
            "suggestions": self.suggestions
        }

    def __str__(self) -> str:
        return f"[{self.error_code}] {self.category.value} 오류: {self.message}"


class ValidationError(BaseNumberFieldError):
    """
    입력 데이터 검증 관련 예외

    JSON/CSV 입력, Pydantic 모델 검증, 연산 사전조건 위반에서 발생하는 예외를 처리합니다.
    """

    def __init__(
        self,
        message: str,
        field_name: Optional[str] = None,
        field_value: Any = None,
        validation_errors: Optional[List[str]] = None,
        **kwargs
    ):
        kwargs.setdefault("category", ErrorCategory.VALIDATION)
        super().__init__(message, **kwargs)
        self.field_name = field_name
        self.field_value = field_value
        self.validation_errors = validation_errors or []

        if field_name:
            self.details.update({
                "field_name": field_name,
                "field_value": field_value,
                "validation_errors": self.validation_errors
            })


class ConfigurationError(BaseNumberFieldError):
    """실행 설정 관련 예외"""

    def __init__(
        self,
        message: str,
        config_key: Optional[str] = None,
        expected_type: Optional[str] = None,
        **kwargs
    ):
        super().__init__(
            message,
            category=ErrorCategory.SYSTEM,
            severity=ErrorSeverity.HIGH,
            **kwargs
        )
        self.config_key = config_key
        self.expected_type = expected_type

        if config_key:
            self.details.update({
                "config_key": config_key,
                "expected_type": expected_type
            })
        self.suggestions.extend([
            "설정 파일(key=value)이나 환경 변수를 확인하세요",
            "설정값의 범위가 올바른지 확인하세요"
        ])


# === 수체 구조 ===

class FieldStructureError(BaseNumberFieldError):
    """수체 구성 및 갈루아 구조 관련 예외"""

    def __init__(self, message: str, min_poly: Optional[List[int]] = None, **kwargs):
        kwargs.setdefault("category", ErrorCategory.FIELD)
        super().__init__(message, **kwargs)
        self.min_poly = min_poly
        if min_poly is not None:
            self.details["min_poly"] = list(min_poly)


class IrreducibilityError(FieldStructureError):
    """최소다항식이 Q 위에서 기약이 아닌 경우"""

    def __init__(self, min_poly: List[int], **kwargs):
        super().__init__(
            f"최소다항식 {list(min_poly)} 이(가) 기약이 아닙니다",
            min_poly=min_poly,
            severity=ErrorSeverity.HIGH,
            **kwargs
        )
        self.suggestions.append("기약 모닉 정수계수 다항식을 사용하세요")


class NotTotallyRealError(FieldStructureError):
    """최소다항식의 근이 모두 실수가 아닌 경우"""

    def __init__(self, min_poly: List[int], real_roots: int, **kwargs):
        super().__init__(
            f"완전실수체가 아닙니다: 실근 {real_roots}개",
            min_poly=min_poly,
            **kwargs
        )
        self.details["real_roots"] = real_roots


class FieldMismatchError(FieldStructureError):
    """서로 다른 수체 또는 계수 영역의 원소를 결합하려는 경우"""


class NotGaloisError(FieldStructureError):
    """수체가 Q 위에서 갈루아가 아니어서 켤레가 체 안에 없는 경우"""

    def __init__(self, message: str = "수체가 갈루아 확대가 아닙니다", **kwargs):
        super().__init__(message, **kwargs)


class DimensionMismatchError(FieldStructureError):
    """무한 위치 벡터의 차원이 수체 차수와 다른 경우"""

    def __init__(self, expected: int, actual: int, **kwargs):
        super().__init__(
            f"차원 불일치: 기대값 {expected}, 실제값 {actual}",
            **kwargs
        )
        self.details.update({"expected": expected, "actual": actual})


# === 산술 ===

class ArithmeticDomainError(BaseNumberFieldError):
    """정확 산술 및 필드 대수 연산의 사전조건 위반"""

    def __init__(self, message: str, operation: Optional[str] = None, **kwargs):
        kwargs.setdefault("category", ErrorCategory.ARITHMETIC)
        super().__init__(message, **kwargs)
        self.operation = operation
        if operation:
            self.details["operation"] = operation


class DivisionByZeroError(ArithmeticDomainError):
    """수체 원소 0의 역원을 구하려는 경우"""

    def __init__(self, **kwargs):
        super().__init__("0의 역원은 존재하지 않습니다", operation="inv", **kwargs)


class CoefficientDomainError(ArithmeticDomainError):
    """계수 영역(유리수/가우스 유리수/Complex64)이 맞지 않는 경우"""


class TraceZeroError(ArithmeticDomainError):
    """T(f)=0 이라 Z_1 대표원이 없는 경우"""

    def __init__(self, **kwargs):
        super().__init__(
            "T(f)=0: Z[K]의 원소이므로 Z_1 대표원이 없습니다",
            operation="normalize_Z1",
            **kwargs
        )


class NotNormalizedError(ArithmeticDomainError):
    """Z_1(T=1) 원소가 필요한 연산에 T != 1 인 원소가 주어진 경우"""

    def __init__(self, trace_value: Any, **kwargs):
        super().__init__(
            f"T(f)=1 이어야 합니다 (실제값 {trace_value})",
            operation="affine_ops",
            **kwargs
        )
        self.details["trace"] = str(trace_value)


class ZeroShiftError(ArithmeticDomainError):
    """디리클레 이동 T_alpha 에 alpha=0 이 주어진 경우"""

    def __init__(self, **kwargs):
        super().__init__("디리클레 이동은 alpha != 0 에서만 정의됩니다", operation="shift", **kwargs)


# === 급수 ===

class SeriesError(BaseNumberFieldError):
    """절단 급수 연산 관련 예외"""

    def __init__(self, message: str, truncation: Optional[int] = None, **kwargs):
        kwargs.setdefault("category", ErrorCategory.SERIES)
        super().__init__(message, **kwargs)
        self.truncation = truncation
        if truncation is not None:
            self.details["truncation"] = truncation


class TruncationMismatchError(SeriesError):
    """절단 차수 N 이 다른 급수끼리 연산하려는 경우"""

    def __init__(self, left: int, right: int, **kwargs):
        super().__init__(f"절단 차수 불일치: {left} != {right}", **kwargs)
        self.details.update({"left": left, "right": right})
        self.suggestions.append("급수를 같은 N 으로 다시 생성하세요 (암묵적 재절단은 하지 않습니다)")


class NonUnitError(SeriesError):
    """선두 계수가 0 이라 역원이 없는 경우"""


class BoundMismatchError(SeriesError):
    """소수 한계 P 가 맞지 않는 경우"""


class NonIntegerSupportError(SeriesError):
    """정수가 아닌 지수를 N-색인 급수로 되돌리려는 경우"""


class TruncationTooSmallError(SeriesError):
    """헤케 작용소 적용에 필요한 계수가 절단 범위를 벗어나는 경우"""


class CapExceededError(SeriesError):
    """설정된 상한(모듈러스, 절단 차수)을 초과한 경우"""

    def __init__(self, value: int, cap: int, what: str = "value", **kwargs):
        super().__init__(f"{what}={value} 이(가) 상한 {cap} 을(를) 초과합니다", **kwargs)
        self.details.update({"value": value, "cap": cap, "what": what})


# === 지표 ===

class CharacterError(BaseNumberFieldError):
    """디리클레 지표 관련 예외"""

    def __init__(self, message: str, modulus: Optional[int] = None, **kwargs):
        kwargs.setdefault("category", ErrorCategory.CHARACTER)
        super().__init__(message, **kwargs)
        self.modulus = modulus
        if modulus is not None:
            self.details["modulus"] = modulus


class NotMultipleError(CharacterError):
    """유도 대상 모듈러스가 원래 모듈러스의 배수가 아닌 경우"""


class NotPrimeError(CharacterError):
    """소수가 필요한 곳에 합성수가 주어진 경우"""

    def __init__(self, value: int, **kwargs):
        super().__init__(f"{value} 은(는) 소수가 아닙니다", **kwargs)
        self.details["value"] = value


# === 수치 계산 ===

class NumericalError(BaseNumberFieldError):
    """부동소수 및 구간 연산 관련 예외"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("category", ErrorCategory.NUMERIC)
        super().__init__(message, **kwargs)


class UnresolvableSignError(NumericalError):
    """정밀도 상한까지 올려도 임베딩 값의 부호를 결정하지 못한 경우"""

    def __init__(self, embedding_index: int, precision_cap: int, **kwargs):
        super().__init__(
            f"임베딩 {embedding_index} 의 부호를 {precision_cap} 비트 이내에서 결정할 수 없습니다",
            severity=ErrorSeverity.HIGH,
            **kwargs
        )
        self.details.update({"embedding_index": embedding_index, "precision_cap": precision_cap})
        self.suggestions.append("sign_precision_cap_bits 설정을 늘려보세요")


class NotLatticeCharacterError(NumericalError):
    """지수가 선택한 토러스 격자와 맞지 않는 경우"""


class QuadratureFailureError(NumericalError):
    """수치 적분의 오차 추정이 허용치를 넘는 경우"""

    def __init__(self, error_estimate: float, tolerance: float, **kwargs):
        super().__init__(
            f"적분 오차 추정 {error_estimate:.3e} 이(가) 허용치 {tolerance:.1e} 를 넘습니다",
            **kwargs
        )
        self.details.update({"error_estimate": error_estimate, "tolerance": tolerance})


def create_error_response(error: BaseNumberFieldError) -> Dict[str, Any]:
    """
    예외 객체로부터 표준화된 에러 응답을 생성합니다.

    Args:
        error: 기본 예외 클래스의 인스턴스

    Returns:
        표준화된 에러 응답 딕셔너리
    """
    return {
        "success": False,
        "error": error.to_dict(),
        "timestamp": str(datetime.now()),
        "suggestions": error.suggestions
    }


def handle_pydantic_validation_error(pydantic_error) -> ValidationError:
    """
    Pydantic ValidationError를 커스텀 ValidationError로 변환합니다.

    Args:
        pydantic_error: Pydantic의 ValidationError 인스턴스

    Returns:
        커스텀 ValidationError 인스턴스
    """
    errors = []
    for error in pydantic_error.errors():
        field = ".".join(str(loc) for loc in error["loc"])
        msg = error["msg"]
        errors.append(f"{field}: {msg}")

    return ValidationError(
        "데이터 검증에 실패했습니다",
        validation_errors=errors,
        details={"pydantic_errors": [str(e) for e in errors]}
    )

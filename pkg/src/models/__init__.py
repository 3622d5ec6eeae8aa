"""
비선형 수체 툴킷 데이터 모델 패키지

입출력 스키마와 검증 보고서 Pydantic 모델들을 포함합니다.
"""

from .payloads import (
    CoefficientDomainTag,
    NumberFieldPayload,
    AlgElemPayload,
    CharacterPayload,
    GaloisRepPayload,
    SeriesHeader,
    parse_rational,
)
from .reports import (
    VerificationStatus,
    PropertyCheck,
    VerificationReport,
    DeligneReport,
    MellinReport,
    ConstantTermDiagnostic,
    OrthonormalityReport,
)

__all__ = [
    "CoefficientDomainTag",
    "NumberFieldPayload",
    "AlgElemPayload",
    "CharacterPayload",
    "GaloisRepPayload",
    "SeriesHeader",
    "parse_rational",
    "VerificationStatus",
    "PropertyCheck",
    "VerificationReport",
    "DeligneReport",
    "MellinReport",
    "ConstantTermDiagnostic",
    "OrthonormalityReport",
]

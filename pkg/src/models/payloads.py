"""
JSON 입출력 Pydantic 모델들

CLI 와 외부 파일이 주고받는 수체, 필드 대수 원소, 디리클레 지표, 갈루아 표현,
급수 헤더의 스키마를 정의합니다.
- NumberFieldPayload: {"min_poly": [c0, c1, ..., 1]}
- AlgElemPayload: {"field": ..., "domain": ..., "terms": [[<NFElem>, "<re>", "<im>"], ...]}
- CharacterPayload: {"modulus": N, "values": [[r, m, k], ...]}
- GaloisRepPayload: {"summands": [<character>, ...]}
"""

from enum import Enum
from fractions import Fraction
from typing import List, Optional, Annotated

from pydantic import BaseModel, Field, field_validator, model_validator
from typing_extensions import Self


def parse_rational(text: str) -> Fraction:
    """'p/q' 또는 정수 문자열을 Fraction 으로 변환"""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"유리수 형식이 아닙니다: {text!r}") from e


class CoefficientDomainTag(str, Enum):
    """계수 영역 태그"""
    RATIONAL = "rational"
    GAUSSIAN = "gaussian"
    COMPLEX = "complex"


class NumberFieldPayload(BaseModel):
    """수체 직렬화 모델"""
    min_poly: List[int] = Field(..., min_length=2, description="최소다항식 계수 (상수항부터, 마지막은 1)")

    @field_validator("min_poly")
    @classmethod
    def validate_monic(cls, v):
        if v[-1] != 1:
            raise ValueError("최소다항식은 모닉이어야 합니다 (마지막 계수 1)")
        return v


class AlgElemPayload(BaseModel):
    """필드 대수 원소 직렬화 모델"""
    field: NumberFieldPayload = Field(
        default_factory=lambda: NumberFieldPayload(min_poly=[0, 1]),
        description="지수가 속한 수체"
    )
    domain: Optional[CoefficientDomainTag] = Field(None, description="계수 영역 (생략 시 추론)")
    terms: List[List[object]] = Field(default_factory=list, description="[지수 좌표, 실수부, 허수부] 목록")

    @field_validator("terms")
    @classmethod
    def validate_terms(cls, v):
        for term in v:
            if len(term) not in (2, 3):
                raise ValueError("각 항은 [지수, re] 또는 [지수, re, im] 형식이어야 합니다")
            if not isinstance(term[0], list):
                raise ValueError("지수는 유리수 문자열 목록이어야 합니다")
        return v

    @model_validator(mode="after")
    def validate_exponent_length(self) -> Self:
        degree = len(self.field.min_poly) - 1
        for term in self.terms:
            if len(term[0]) != degree:
                raise ValueError(f"지수 좌표 길이가 수체 차수 {degree} 와 다릅니다")
        return self


class CharacterPayload(BaseModel):
    """디리클레 지표 직렬화 모델 (단원 잉여류의 값만 기록)"""
    modulus: Annotated[int, Field(ge=1)] = Field(..., description="모듈러스")
    values: List[Annotated[List[int], Field(min_length=3, max_length=3)]] = Field(
        ..., description="[r, m, k]: chi(r) = exp(2 pi i k / m)"
    )

    @field_validator("values")
    @classmethod
    def validate_orders(cls, v):
        for r, m, k in v:
            if m < 1:
                raise ValueError(f"지표 값의 차수는 1 이상이어야 합니다: {[r, m, k]}")
        return v


class GaloisRepPayload(BaseModel):
    """1차원 지표들의 직합으로 주어진 갈루아 표현"""
    summands: List[CharacterPayload] = Field(..., min_length=1, description="직합 성분")


class SeriesHeader(BaseModel):
    """급수/보고서 출력 머리말 (재현성 기록용)"""
    tool: str = Field("nonlinear-number-field", description="생성 도구")
    command: str = Field(..., description="실행한 하위 명령")
    seed: int = Field(..., description="난수 시드")
    N: Optional[int] = Field(None, description="절단 차수")
    P: Optional[int] = Field(None, description="소수 한계")

"""
중앙화된 실행 설정 관리

이 모듈은 툴킷의 모든 실행 설정을 중앙에서 관리합니다.
환경변수와 key=value 설정 파일을 통해 설정값을 로드하고, Pydantic을 사용하여 타입 안전성을 보장합니다.
우선순위: CLI 플래그 > 설정 파일 > 환경변수 > 기본값
"""

from typing import Optional, Literal, Dict, Any, Union
from pathlib import Path

from dotenv import dotenv_values
from pydantic import Field, field_validator, ValidationError as PydanticValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict


class RunSettings(BaseSettings):
    """실행(절단 차수, 허용오차, 시드) 관련 설정"""

    model_config = SettingsConfigDict(env_prefix="NNF_RUN_", extra="ignore")

    N: int = Field(default=200, ge=1, description="급수 절단 차수")
    P: int = Field(default=100, ge=2, description="소수 한계 (PrimeVector)")
    tolerance: float = Field(default=1e-10, description="부동소수 비교 허용오차")
    sign_precision_cap_bits: int = Field(
        default=256, ge=53, description="부호 결정 시 정밀도 상한 (비트)"
    )
    embedding_precision_bits: int = Field(
        default=53, ge=53, description="임베딩 근사 시작 정밀도 (비트)"
    )
    seed: int = Field(default=20240101, description="성질 검증 샘플링용 난수 시드")
    output_format: Literal["json", "csv"] = Field(default="json", description="출력 포맷")
    emit_seed_header: bool = Field(default=True, description="출력에 시드 헤더 포함")

    @field_validator("tolerance")
    @classmethod
    def validate_tolerance(cls, v):
        if not (0.0 < v <= 1e-3):
            raise ValueError("tolerance must lie in (0, 1e-3]")
        return v


class CharacterSettings(BaseSettings):
    """디리클레 지표 관련 설정"""

    model_config = SettingsConfigDict(env_prefix="NNF_CHAR_", extra="ignore")

    modulus_cap: int = Field(default=1000, ge=1, description="열거 가능한 최대 모듈러스")


class ModularSettings(BaseSettings):
    """모듈러 형식 관련 설정"""

    model_config = SettingsConfigDict(env_prefix="NNF_MODULAR_", extra="ignore")

    weight: int = Field(default=12, ge=12, description="첨점형식 가중치")
    delta_cap: int = Field(default=10**5, ge=1, description="Delta 전개 최대 절단 차수")

    @field_validator("weight")
    @classmethod
    def validate_weight(cls, v):
        if v % 2:
            raise ValueError("weight must be even")
        return v


class QuadratureSettings(BaseSettings):
    """수치 적분 관련 설정"""

    model_config = SettingsConfigDict(env_prefix="NNF_QUAD_", extra="ignore")

    torus_points: int = Field(default=4096, ge=1, description="토러스 적분 격자점 수")
    mellin_tolerance: float = Field(default=1e-6, gt=0, description="멜린 적분 오차 허용치")


class LoggingSettings(BaseSettings):
    """로깅 관련 설정"""

    model_config = SettingsConfigDict(env_prefix="LOG_", extra="ignore")

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="WARNING",
        description="로그 레벨"
    )
    format: Literal["json", "text"] = Field(
        default="text",
        description="로그 포맷"
    )
    file_path: Optional[str] = Field(
        default=None,
        description="로그 파일 경로 (None이면 stderr)"
    )


class Settings(BaseSettings):
    """메인 설정 클래스"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    run: RunSettings = RunSettings()
    characters: CharacterSettings = CharacterSettings()
    modular: ModularSettings = ModularSettings()
    quadrature: QuadratureSettings = QuadratureSettings()
    logging: LoggingSettings = LoggingSettings()


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """설정 인스턴스 반환"""
    return settings


def read_config_file(path: Union[str, Path]) -> Dict[str, str]:
    """
    key=value 형식의 설정 파일을 읽습니다.

    빈 값과 RunSettings 에 없는 키는 무시합니다.
    """
    from src.exceptions import ConfigurationError

    config_path = Path(path)
    if not config_path.is_file():
        raise ConfigurationError(
            f"설정 파일을 찾을 수 없습니다: {config_path}",
            config_key="config",
        )
    raw = dotenv_values(config_path)
    known = set(RunSettings.model_fields)
    return {k: v for k, v in raw.items() if k in known and v not in (None, "")}


def load_run_settings(
    path: Optional[Union[str, Path]] = None,
    overrides: Optional[Dict[str, Any]] = None
) -> RunSettings:
    """
    실효 RunSettings 를 만듭니다.

    환경변수와 기본값 위에 설정 파일 값을, 그 위에 CLI 플래그(overrides)를 덮어씁니다.

    Raises:
        ConfigurationError: 값 검증 실패 시
    """
    from src.exceptions import ConfigurationError

    values: Dict[str, Any] = {}
    if path is not None:
        values.update(read_config_file(path))
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value

    try:
        return RunSettings(**values)
    except PydanticValidationError as e:
        first = e.errors()[0]
        key = ".".join(str(loc) for loc in first["loc"])
        raise ConfigurationError(
            f"설정값이 올바르지 않습니다: {key}: {first['msg']}",
            config_key=key,
            expected_type=first.get("type"),
        ) from e

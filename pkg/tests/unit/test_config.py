"""
설정과 예외 모듈 테스트

RunSettings 기본값과 검증, 설정 파일/플래그 우선순위,
예외의 직렬화와 Pydantic 오류 변환을 점검합니다.
"""

import logging

import pytest
from pydantic import ValidationError as PydanticValidationError

from config.settings import RunSettings, get_settings, load_run_settings, read_config_file
from src.exceptions import (
    ConfigurationError,
    ErrorCategory,
    NotPrimeError,
    TruncationMismatchError,
    ValidationError,
    create_error_response,
    handle_pydantic_validation_error,
)
from src.models.payloads import CharacterPayload, NumberFieldPayload

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


class TestRunSettings:
    """실행 설정 테스트"""

    def test_defaults(self):
        settings = RunSettings()
        assert settings.N == 200
        assert settings.P == 100
        assert settings.tolerance == 1e-10
        assert settings.seed == 20240101
        assert settings.output_format == "json"
        assert settings.emit_seed_header

    def test_environment_variables(self, monkeypatch):
        monkeypatch.setenv("NNF_RUN_SEED", "99")
        assert RunSettings().seed == 99
        assert load_run_settings(overrides={"seed": 5}).seed == 5

    def test_tolerance_range(self):
        with pytest.raises(PydanticValidationError):
            RunSettings(tolerance=0.1)

    def test_global_settings(self):
        settings = get_settings()
        assert settings.characters.modulus_cap >= 1
        assert settings.modular.weight == 12

    def test_settings_sections_only(self):
        """전역 설정에는 계산이 읽는 섹션만 있음"""
        assert set(type(get_settings()).model_fields) == {"run", "characters", "modular", "quadrature", "logging"}


class TestLoadRunSettings:
    """설정 파일 로드 테스트"""

    def test_file_then_flags(self, tmp_path):
        path = tmp_path / "run.env"
        path.write_text("# 실행 설정\nN=32\nP=50\nunknown=1\nseed=\n", encoding="utf-8")
        assert read_config_file(path) == {"N": "32", "P": "50"}
        settings = load_run_settings(path, {"P": 20, "seed": None})
        assert (settings.N, settings.P, settings.seed) == (32, 20, 20240101)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError) as exc_info:
            load_run_settings(tmp_path / "absent.env")
        assert exc_info.value.details["config_key"] == "config"

    def test_invalid_value(self):
        with pytest.raises(ConfigurationError) as exc_info:
            load_run_settings(overrides={"N": 0})
        assert exc_info.value.config_key == "N"


class TestExceptions:
    """예외 직렬화 테스트"""

    def test_to_dict(self):
        error = TruncationMismatchError(10, 12)
        data = error.to_dict()
        assert data["error_type"] == "TruncationMismatchError"
        assert data["details"] == {"left": 10, "right": 12}
        assert data["suggestions"]
        assert error.error_code == "TRUNCATIONMISMATCHERROR_001"

    def test_category_and_str(self):
        error = NotPrimeError(9)
        assert error.category is ErrorCategory.CHARACTER
        assert str(error).startswith("[NOTPRIMEERROR_001]")

    def test_create_error_response(self):
        response = create_error_response(ValidationError("잘못된 입력", field_name="N", field_value=-1))
        assert response["success"] is False
        assert response["error"]["details"]["field_name"] == "N"
        assert "timestamp" in response

    def test_pydantic_conversion(self):
        with pytest.raises(PydanticValidationError) as exc_info:
            NumberFieldPayload(min_poly=[1, 2])
        converted = handle_pydantic_validation_error(exc_info.value)
        assert isinstance(converted, ValidationError)
        assert converted.validation_errors[0].startswith("min_poly")

    def test_character_payload_rejects_zero_order(self):
        with pytest.raises(PydanticValidationError):
            CharacterPayload(modulus=4, values=[[1, 0, 0]])
        logger.info("페이로드 검증 테스트 통과")

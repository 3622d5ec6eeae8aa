"""
비선형 수체 툴킷 구조화 로깅 모듈

structlog 기반 구조화 로깅을 제공합니다.
CLI 산출물(stdout)이 실행마다 바이트 단위로 같도록 모든 로그는 stderr 로 보냅니다.
"""

import sys
import logging
import functools
from typing import Dict, Any, Optional
from datetime import datetime, timezone
from pathlib import Path

import structlog
from structlog.typing import FilteringBoundLogger, Processor


SERVICE_NAME = "nonlinear-number-field"
SERVICE_VERSION = "1.0.0"


class NumberFieldLogFormatter:
    """툴킷 전용 로그 프로세서 모음"""

    @staticmethod
    def add_timestamp(
        logger: FilteringBoundLogger,
        method_name: str,
        event_dict: Dict[str, Any]
    ) -> Dict[str, Any]:
        """타임스탬프 추가"""
        event_dict["timestamp"] = datetime.now(timezone.utc).isoformat()
        return event_dict

    @staticmethod
    def add_service_info(
        logger: FilteringBoundLogger,
        method_name: str,
        event_dict: Dict[str, Any]
    ) -> Dict[str, Any]:
        """서비스 정보 추가"""
        event_dict.setdefault("service", SERVICE_NAME)
        event_dict.setdefault("version", SERVICE_VERSION)
        return event_dict

    @staticmethod
    def stringify_exact_values(
        logger: FilteringBoundLogger,
        method_name: str,
        event_dict: Dict[str, Any]
    ) -> Dict[str, Any]:
        """Fraction 같은 정확값은 JSON 렌더러가 모르므로 문자열로 바꿉니다"""
        for key, value in list(event_dict.items()):
            if not isinstance(value, (str, int, float, bool, type(None), dict, list, tuple)):
                event_dict[key] = str(value)
        return event_dict


class LogContextManager:
    """
    로그 컨텍스트 관리자

    검증 스위트, 필드, 시드 같은 실행 컨텍스트를 모든 로그에 붙입니다.
    """

    def __init__(self):
        self._context: Dict[str, Any] = {}

    def set_context(self, **kwargs) -> None:
        self._context.update(kwargs)

    def clear_context(self) -> None:
        self._context.clear()

    def get_context(self) -> Dict[str, Any]:
        return self._context.copy()

    def context_processor(
        self,
        logger: FilteringBoundLogger,
        method_name: str,
        event_dict: Dict[str, Any]
    ) -> Dict[str, Any]:
        """컨텍스트 정보를 이벤트 딕셔너리에 추가"""
        for key, value in self._context.items():
            event_dict.setdefault(key, value)
        return event_dict


# 전역 컨텍스트 관리자
_context_manager = LogContextManager()


def setup_logging(
    level: str = "WARNING",
    log_format: str = "text",
    log_file: Optional[str] = None,
) -> FilteringBoundLogger:
    """
    로깅 시스템 초기 설정

    Args:
        level: 로그 레벨 (DEBUG, INFO, WARNING, ERROR)
        log_format: "text" 면 콘솔 렌더러, "json" 이면 JSON 렌더러
        log_file: 로그 파일 경로 (None이면 stderr 만 사용)

    Returns:
        설정된 structlog 로거
    """
    log_level = getattr(logging, level.upper(), logging.WARNING)

    processors: list[Processor] = [
        structlog.stdlib.filter_by_level,
        NumberFieldLogFormatter.add_timestamp,
        NumberFieldLogFormatter.add_service_info,
        _context_manager.context_processor,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        NumberFieldLogFormatter.stringify_exact_values,
    ]

    if log_format == "text":
        processors.append(structlog.dev.ConsoleRenderer(colors=False))
    else:
        processors.append(structlog.processors.JSONRenderer())

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.stdlib.BoundLogger,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    if not any(getattr(h, "_nnf_handler", False) for h in root_logger.handlers):
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(logging.Formatter("%(message)s"))
        stream_handler._nnf_handler = True  # type: ignore[attr-defined]
        root_logger.addHandler(stream_handler)

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(log_level)
        root_logger.addHandler(file_handler)

    return structlog.get_logger()


def get_logger(name: str = __name__) -> FilteringBoundLogger:
    """named 로거 반환"""
    return structlog.get_logger(name)


def set_log_context(**kwargs) -> None:
    """로그 컨텍스트 설정"""
    _context_manager.set_context(**kwargs)


def clear_log_context() -> None:
    """로그 컨텍스트 초기화"""
    _context_manager.clear_context()


def get_log_context() -> Dict[str, Any]:
    """현재 로그 컨텍스트 반환"""
    return _context_manager.get_context()


class LogContextDecorator:
    """
    함수 실행시 로그 컨텍스트를 자동으로 설정하는 데코레이터

    검증 스위트 실행처럼 하위 연산 로그에 공통 태그가 필요한 곳에 씁니다.
    """

    def __init__(self, **context_kwargs):
        self.context_kwargs = context_kwargs

    def __call__(self, func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            original_context = get_log_context()
            logger = get_logger(func.__module__)
            try:
                set_log_context(operation=func.__name__, **self.context_kwargs)
                logger.debug("연산 시작", function=func.__name__)
                result = func(*args, **kwargs)
                logger.debug("연산 완료", function=func.__name__)
                return result
            except Exception as e:
                logger.debug("연산 중 오류 발생", function=func.__name__, error=str(e))
                raise
            finally:
                clear_log_context()
                set_log_context(**original_context)

        return wrapper


verification_logger = get_logger("verification")
cli_logger = get_logger("cli")


def log_performance(
    operation: str,
    start_time: datetime,
    end_time: Optional[datetime] = None,
    **additional_data
) -> float:
    """
    성능 로깅 유틸리티

    Returns:
        소요 시간 (초)
    """
    if end_time is None:
        end_time = datetime.now()

    duration = (end_time - start_time).total_seconds()

    perf_logger = get_logger("performance")
    perf_logger.info(
        "성능 메트릭",
        operation=operation,
        duration_seconds=duration,
        **additional_data
    )
    return duration


def log_verification_result(
    suite: str,
    property_name: str,
    passed: int,
    total: int,
    **additional_data
) -> None:
    """
    검증 결과 로깅 유틸리티

    Args:
        suite: 검증 스위트 이름
        property_name: 검증한 성질
        passed: 통과한 표본 수
        total: 전체 표본 수
    """
    method = verification_logger.info if passed == total else verification_logger.warning
    method(
        "검증 결과",
        suite=suite,
        property=property_name,
        passed=passed,
        total=total,
        status="pass" if passed == total else "fail",
        **additional_data
    )


def configure_logging_from_settings() -> FilteringBoundLogger:
    """LoggingSettings(LOG_LEVEL, LOG_FORMAT, LOG_FILE_PATH)로 로깅 구성"""
    from config.settings import get_settings

    log_settings = get_settings().logging
    return setup_logging(
        level=log_settings.level,
        log_format=log_settings.format,
        log_file=log_settings.file_path,
    )


logger = configure_logging_from_settings()

"""
CLI 입출력 코덱

- 필드 대수 원소: AlgElemPayload JSON
- 급수: CSV `n,re,im` 또는 `n,p/q` (`#` 로 시작하는 줄은 머리말)
- 첨점형식 계수: CSV `n,a_n`
"""

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from pydantic import ValidationError as PydanticValidationError

from ..algebra import AlgElem, CoefficientDomain
from ..algebra import coefficients as coeffs
from ..exceptions import TruncationMismatchError, ValidationError, handle_pydantic_validation_error
from ..models.payloads import AlgElemPayload, CharacterPayload, GaloisRepPayload, NumberFieldPayload, SeriesHeader
from ..modular import CuspFormCoeffs
from ..numfield import NumberField
from ..series import ArithSeries


def read_text(path: str) -> str:
    """'-' 이면 표준입력"""
    if path == "-":
        return sys.stdin.read()
    file_path = Path(path)
    if not file_path.is_file():
        raise ValidationError(f"입력 파일을 찾을 수 없습니다: {path}", field_name="path", field_value=path)
    return file_path.read_text(encoding="utf-8")


def _parse_model(model, text: str):
    try:
        return model.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise ValidationError(f"JSON 형식이 아닙니다: {e.msg}", details={"line": e.lineno}) from e
    except PydanticValidationError as e:
        raise handle_pydantic_validation_error(e) from e


def field_from_payload(payload: NumberFieldPayload, **kwargs) -> NumberField:
    return NumberField(tuple(payload.min_poly), **kwargs)


def alg_elem_from_payload(payload: AlgElemPayload, **field_kwargs) -> AlgElem:
    field = field_from_payload(payload.field, **field_kwargs)
    pairs: List[Tuple[str, str]] = [(str(t[1]), str(t[2]) if len(t) == 3 else "0") for t in payload.terms]
    domain = CoefficientDomain(payload.domain.value) if payload.domain else coeffs.infer_domain(pairs)
    terms = []
    for term, (re_text, im_text) in zip(payload.terms, pairs):
        try:
            exponent = field.element([Fraction(str(c)) for c in term[0]])
            value = coeffs.parse_value(re_text, im_text, domain)
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"항을 해석할 수 없습니다: {term}", field_name="terms") from e
        terms.append((exponent, value))
    return AlgElem(field, tuple(terms), domain)


def read_alg_elem(path: str, **field_kwargs) -> AlgElem:
    return alg_elem_from_payload(_parse_model(AlgElemPayload, read_text(path)), **field_kwargs)


def alg_elem_to_payload(elem: AlgElem) -> Dict[str, Any]:
    return {
        "field": {"min_poly": list(elem.field.min_poly)},
        "domain": elem.domain.value,
        "terms": [[alpha.to_strings(), *coeffs.format_value(a)] for alpha, a in elem.terms],
    }


def read_character_payload(path: str) -> CharacterPayload:
    return _parse_model(CharacterPayload, read_text(path))


def read_rep_payload(path: str) -> GaloisRepPayload:
    return _parse_model(GaloisRepPayload, read_text(path))


def parse_series_csv(text: str, N: Optional[int] = None) -> ArithSeries:
    """
    `n,re,im` 또는 `n,p/q` 줄들을 ArithSeries 로 읽습니다.

    N 을 주지 않으면 가장 큰 색인을 절단 차수로 씁니다. 빠진 색인은 0 입니다.
    N 보다 큰 색인이 있으면 잘라내지 않고 TruncationMismatchError 를 냅니다.
    """
    rows: Dict[int, Tuple[str, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.lower().startswith("n,"):
            continue
        cells = [c.strip() for c in line.split(",")]
        if len(cells) not in (2, 3):
            raise ValidationError(f"{lineno}번째 줄: 열 개수가 2 또는 3 이어야 합니다", field_name="csv",
                                  field_value=raw)
        try:
            n = int(cells[0])
        except ValueError as e:
            raise ValidationError(f"{lineno}번째 줄: 색인이 정수가 아닙니다", field_name="csv",
                                  field_value=raw) from e
        if n < 1:
            raise ValidationError(f"{lineno}번째 줄: 색인은 1 이상이어야 합니다", field_name="csv", field_value=raw)
        rows[n] = (cells[1], cells[2] if len(cells) == 3 else "0")
    if not rows and N is None:
        raise ValidationError("급수 CSV 가 비어 있습니다", field_name="csv")
    if N is None:
        N = max(rows)
    elif rows and max(rows) > N:
        raise TruncationMismatchError(max(rows), N)
    domain = coeffs.infer_domain(rows.values())
    try:
        values = {n: coeffs.parse_value(re_text, im_text, domain) for n, (re_text, im_text) in rows.items()}
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"계수를 해석할 수 없습니다: {e}", field_name="csv") from e
    return ArithSeries.from_dict(N, values, domain)


def read_series(path: str, N: Optional[int] = None) -> ArithSeries:
    return parse_series_csv(read_text(path), N)


def header_lines(header: Optional[SeriesHeader]) -> List[str]:
    if header is None:
        return []
    fields = header.model_dump(exclude_none=True)
    return ["# " + " ".join(f"{k}={v}" for k, v in fields.items())]


def format_series_csv(f: ArithSeries, header: Optional[SeriesHeader] = None) -> str:
    lines = header_lines(header) + ["n,re,im"]
    for n, a in f:
        re_text, im_text = coeffs.format_value(a)
        lines.append(f"{n},{re_text},{im_text}")
    return "\n".join(lines) + "\n"


def format_cusp_csv(f: CuspFormCoeffs, header: Optional[SeriesHeader] = None) -> str:
    lines = header_lines(header) + ["n,a_n"]
    lines.extend(f"{n},{f[n]}" for n in range(1, f.N + 1))
    return "\n".join(lines) + "\n"


def format_json(document: Dict[str, Any], header: Optional[SeriesHeader] = None) -> str:
    if header is not None:
        document = {"header": header.model_dump(exclude_none=True), **document}
    return json.dumps(document, ensure_ascii=False, indent=2) + "\n"

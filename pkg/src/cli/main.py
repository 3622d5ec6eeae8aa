"""
nnf 명령줄 진입점

하위 명령: algebra, series, char, rep, delta, hecke, flow, verify
종료 코드: 0 성공, 1 검증 실패, 2 사용법/입력 오류
결과물은 stdout 으로, 로그와 오류 문서는 stderr 로 나갑니다.
"""

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from config.settings import RunSettings, get_settings, load_run_settings
from ..algebra import (
    CoefficientDomain,
    cauchy_product,
    dirichlet_product,
    trace_functional,
    normalize_Z1,
    galois_act,
    shift,
    grade,
    constant_term_diagnostic,
)
from ..algebra import coefficients as coeffs
from ..characters import R_chi, char_enumerate, character_by_index, induce
from ..exceptions import BaseNumberFieldError, create_error_response
from ..flows import FlowParam, cauchy_flow, dirichlet_flow
from ..galois import GaloisRep, R_rho, euler_factor_coeffs
from ..models.payloads import SeriesHeader
from ..models.reports import VerificationStatus
from ..modular import delta_expansion, hecke_Tp
from ..series import dconv, dinv, multiplicativity, polylog_coeffs, rp_conv, rp_inv
from ..utils.logging import cli_logger as logger, setup_logging
from ..verification import run_suite, suite_names
from . import io

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# === 파서 ===

def _float_list(text: str) -> List[float]:
    """'0.1,0.3' -> [0.1, 0.3]"""
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"쉼표로 구분한 실수 목록이 아닙니다: {text!r}") from e


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value 설정 파일")
    common.add_argument("-N", type=int, dest="N", help="절단 차수")
    common.add_argument("-P", type=int, dest="P", help="소수 한계")
    common.add_argument("--tolerance", type=float, help="부동소수 비교 허용오차")
    common.add_argument("--seed", type=int, help="표본 추출 시드")
    common.add_argument("--format", dest="output_format", choices=["json", "csv"], help="보고서 포맷")
    common.add_argument("--emit-seed-header", action=argparse.BooleanOptionalAction, default=None,
                        help="출력 머리말에 시드 기록 (기본 켬)")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="로그 레벨")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="nnf", description="비선형 수체 계산 툴킷")
    commands = parser.add_subparsers(dest="command", required=True)

    algebra = commands.add_parser("algebra", help="필드 대수 연산")
    algebra_ops = algebra.add_subparsers(dest="action", required=True)
    mul = algebra_ops.add_parser("mul", parents=[common], help="코시/디리클레 곱")
    mul.add_argument("--op", choices=["cauchy", "dirichlet"], required=True)
    mul.add_argument("a")
    mul.add_argument("b")
    for name, text in (("trace", "T(f)"), ("normalize", "Z_1 정규화"), ("grade", "부호 성분 분해")):
        sub = algebra_ops.add_parser(name, parents=[common], help=text)
        sub.add_argument("a")
    galois = algebra_ops.add_parser("galois", parents=[common], help="갈루아 작용")
    galois.add_argument("--sigma", type=int, required=True)
    galois.add_argument("a")
    shift_parser = algebra_ops.add_parser("shift", parents=[common], help="S_alpha / T_alpha")
    shift_parser.add_argument("--mode", choices=["cauchy", "dirichlet"], required=True)
    shift_parser.add_argument("--alpha", required=True, help="쉼표로 구분한 거듭제곱 기저 좌표")
    shift_parser.add_argument("a")
    constant = algebra_ops.add_parser("constant-term", parents=[common], help="상수항 공식 비교")
    constant.add_argument("a")
    constant.add_argument("b")

    series = commands.add_parser("series", help="디리클레 급수 연산")
    series_ops = series.add_subparsers(dest="action", required=True)
    for name in ("dconv", "rpconv"):
        sub = series_ops.add_parser(name, parents=[common])
        sub.add_argument("a")
        sub.add_argument("b")
    for name in ("dinv", "rpinv", "multiplicativity"):
        sub = series_ops.add_parser(name, parents=[common])
        sub.add_argument("a")
    polylog = series_ops.add_parser("polylog", parents=[common], help="a_n = n^-s")
    polylog.add_argument("--s", dest="s0", required=True)

    char = commands.add_parser("char", help="디리클레 지표")
    char_ops = char.add_subparsers(dest="action", required=True)
    char_list = char_ops.add_parser("list", parents=[common])
    char_list.add_argument("modulus", type=int)
    for name in ("apply", "induce"):
        sub = char_ops.add_parser(name, parents=[common])
        sub.add_argument("--modulus", type=int, required=True)
        sub.add_argument("--index", type=int, required=True)
        if name == "apply":
            sub.add_argument("series")
        else:
            sub.add_argument("--to", type=int, dest="target", required=True)

    rep = commands.add_parser("rep", help="대각 갈루아 표현")
    rep_ops = rep.add_subparsers(dest="action", required=True)
    rep_apply = rep_ops.add_parser("apply", parents=[common])
    rep_apply.add_argument("rep")
    rep_apply.add_argument("series")
    rep_euler = rep_ops.add_parser("euler", parents=[common])
    rep_euler.add_argument("rep")
    rep_euler.add_argument("-p", type=int, dest="p", required=True)
    rep_euler.add_argument("-k", type=int, dest="k", required=True)

    commands.add_parser("delta", parents=[common], help="Delta 의 q-전개")
    hecke = commands.add_parser("hecke", parents=[common], help="Delta 에 대한 헤케 작용소")
    hecke.add_argument("-p", type=int, dest="p", required=True)
    hecke.add_argument("--variant", choices=["paper", "puiseux", "classical"], default="paper",
                       help="paper 와 puiseux 는 같은 규약")

    flow = commands.add_parser("flow", parents=[common], help="코시/디리클레 흐름")
    flow.add_argument("--mode", choices=["cauchy", "dirichlet"], required=True)
    flow.add_argument("-r", type=_float_list, action="extend", required=True,
                      help="임베딩별 흐름 시간 (쉼표 구분, 반복 가능: -r 0.1,0.3 또는 -r 0.1 -r 0.3)")
    flow.add_argument("--promote", action="store_true", help="정확 계수를 complex 로 승격")
    flow.add_argument("a")

    verify = commands.add_parser("verify", parents=[common], help="검증 스위트 실행")
    verify.add_argument("suite", choices=suite_names())
    verify.add_argument("-M", type=int, dest="scale", default=1, help="토러스 격자 스케일")
    verify.add_argument("--points", type=int, help="토러스 적분 격자점 수")
    verify.add_argument("--samples", type=int, help="성질별 표본 수")
    return parser


# === 실행 ===

RUN_KEYS = ("N", "P", "tolerance", "seed", "output_format", "emit_seed_header")


def resolve_settings(args: argparse.Namespace) -> RunSettings:
    overrides = {key: getattr(args, key, None) for key in RUN_KEYS}
    return load_run_settings(args.config, overrides)


class Command:
    """하위 명령 하나의 실행 문맥"""

    def __init__(self, args: argparse.Namespace, settings: RunSettings, out: Callable[[str], Any]):
        self.args = args
        self.settings = settings
        self.out = out

    @property
    def name(self) -> str:
        action = getattr(self.args, "action", None)
        return f"{self.args.command} {action}" if action else self.args.command

    def header(self, N: Optional[int] = None, P: Optional[int] = None) -> Optional[SeriesHeader]:
        if not self.settings.emit_seed_header:
            return None
        return SeriesHeader(command=self.name, seed=self.settings.seed, N=N, P=P)

    @property
    def field_kwargs(self) -> Dict[str, int]:
        return {
            "embedding_precision_bits": self.settings.embedding_precision_bits,
            "sign_precision_cap_bits": self.settings.sign_precision_cap_bits,
        }

    def read_elem(self, path: str):
        return io.read_alg_elem(path, **self.field_kwargs)

    @property
    def explicit_N(self) -> Optional[int]:
        """플래그, 설정 파일, 환경변수 중 하나로 지정된 N (기본값이면 None)"""
        return self.settings.N if "N" in self.settings.model_fields_set else None

    def read_series(self, path: str):
        return io.read_series(path, self.explicit_N)

    def emit_elem(self, elem) -> int:
        self.out(io.format_json({"element": io.alg_elem_to_payload(elem)}, self.header()))
        return EXIT_OK

    def emit_series(self, f) -> int:
        self.out(io.format_series_csv(f, self.header(N=f.N)))
        return EXIT_OK

    def emit_json(self, document: Dict[str, Any], **header) -> int:
        self.out(io.format_json(document, self.header(**header)))
        return EXIT_OK


def _value(v) -> List[str]:
    return list(coeffs.format_value(v))


def run_algebra(cmd: Command) -> int:
    args = cmd.args
    a = cmd.read_elem(args.a)
    if args.action == "mul":
        b = cmd.read_elem(args.b)
        product = cauchy_product(a, b) if args.op == "cauchy" else dirichlet_product(a, b)
        return cmd.emit_elem(product)
    if args.action == "trace":
        return cmd.emit_json({"trace": _value(trace_functional(a))})
    if args.action == "normalize":
        return cmd.emit_elem(normalize_Z1(a))
    if args.action == "galois":
        return cmd.emit_elem(galois_act(args.sigma, a))
    if args.action == "shift":
        alpha = a.field.element([Fraction(c.strip()) for c in args.alpha.split(",")])
        return cmd.emit_elem(shift(args.mode, alpha, a))
    if args.action == "grade":
        graded = grade(a)
        return cmd.emit_json({
            "constant": _value(graded.constant),
            "components": {str(theta): io.alg_elem_to_payload(part) for theta, part in graded.components.items()},
        })
    diagnostic = constant_term_diagnostic(a, cmd.read_elem(args.b))
    return cmd.emit_json(diagnostic.model_dump())


def run_series(cmd: Command) -> int:
    args = cmd.args
    if args.action == "polylog":
        return cmd.emit_series(polylog_coeffs(Fraction(args.s0) if "." not in args.s0 else float(args.s0),
                                              cmd.settings.N))
    f = cmd.read_series(args.a)
    if args.action in ("dconv", "rpconv"):
        g = cmd.read_series(args.b)
        return cmd.emit_series(dconv(f, g) if args.action == "dconv" else rp_conv(f, g))
    if args.action == "dinv":
        return cmd.emit_series(dinv(f))
    if args.action == "rpinv":
        return cmd.emit_series(rp_inv(f))
    return cmd.emit_json({"multiplicativity": multiplicativity(f, cmd.settings.tolerance).value}, N=f.N)


def _character_entry(index: int, chi) -> Dict[str, Any]:
    return {
        "index": index,
        "conductor": chi.conductor,
        "primitive": chi.is_primitive,
        "order": chi.order,
        "character": chi.to_payload().model_dump(),
    }


def run_char(cmd: Command) -> int:
    args = cmd.args
    if args.action == "list":
        entries = [_character_entry(i, chi) for i, chi in enumerate(char_enumerate(args.modulus))]
        if cmd.settings.output_format == "csv":
            lines = io.header_lines(cmd.header()) + ["index,conductor,primitive,order"]
            lines.extend(f"{e['index']},{e['conductor']},{str(e['primitive']).lower()},{e['order']}" for e in entries)
            cmd.out("\n".join(lines) + "\n")
            return EXIT_OK
        return cmd.emit_json({"modulus": args.modulus, "characters": entries})
    chi = character_by_index(args.modulus, args.index)
    if args.action == "apply":
        return cmd.emit_series(R_chi(chi, cmd.read_series(args.series)))
    return cmd.emit_json(_character_entry(args.index, induce(chi, args.target)))


def run_rep(cmd: Command) -> int:
    args = cmd.args
    rho = GaloisRep.from_payload(io.read_rep_payload(args.rep))
    if args.action == "apply":
        return cmd.emit_series(R_rho(rho, cmd.read_series(args.series)))
    factor = euler_factor_coeffs(rho, args.p, args.k)
    return cmd.emit_json({"p": args.p, "coefficients": [_value(v) for v in factor]})


def run_delta(cmd: Command) -> int:
    delta = delta_expansion(cmd.settings.N, get_settings().modular.delta_cap)
    cmd.out(io.format_cusp_csv(delta, cmd.header(N=delta.N)))
    return EXIT_OK


def run_hecke(cmd: Command) -> int:
    args = cmd.args
    image = hecke_Tp(delta_expansion(cmd.settings.N, get_settings().modular.delta_cap), args.p, args.variant)
    cmd.out(io.format_cusp_csv(image, cmd.header(N=image.N)))
    return EXIT_OK


def run_flow(cmd: Command) -> int:
    args = cmd.args
    f = cmd.read_elem(args.a)
    if args.promote:
        f = f.to_domain(CoefficientDomain.COMPLEX)
    r = FlowParam(tuple(args.r))
    return cmd.emit_elem(cauchy_flow(r, f) if args.mode == "cauchy" else dirichlet_flow(r, f))


def run_verify(cmd: Command) -> int:
    args = cmd.args
    report = run_suite(
        args.suite,
        cmd.settings,
        truncation=cmd.explicit_N,
        samples=args.samples,
        scale=args.scale,
        points=args.points,
    )
    if cmd.settings.output_format == "csv":
        lines = io.header_lines(cmd.header()) + ["name,passed,total,expect_failure,ok"]
        lines.extend(
            f"{c.name},{c.passed},{c.total},{str(c.expect_failure).lower()},{str(c.ok).lower()}"
            for c in report.checks
        )
        cmd.out("\n".join(lines) + "\n")
    else:
        document = report.to_output()
        document["summary"] = [c.summary() for c in report.checks]
        cmd.out(io.format_json(document, cmd.header(N=cmd.explicit_N)))
    logger.info("검증 완료", suite=args.suite, status=report.status.value)
    return EXIT_OK if report.status is VerificationStatus.PASSED else EXIT_FAILED


HANDLERS: Dict[str, Callable[[Command], int]] = {
    "algebra": run_algebra,
    "series": run_series,
    "char": run_char,
    "rep": run_rep,
    "delta": run_delta,
    "hecke": run_hecke,
    "flow": run_flow,
    "verify": run_verify,
}


def main(argv: Optional[Sequence[str]] = None, out: Optional[Callable[[str], Any]] = None) -> int:
    """argv 를 해석해 하위 명령을 실행하고 종료 코드를 돌려줍니다."""
    out = out or sys.stdout.write
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    if args.log_level:
        setup_logging(level=args.log_level)
    try:
        settings = resolve_settings(args)
        return HANDLERS[args.command](Command(args, settings, out))
    except BaseNumberFieldError as e:
        logger.warning("명령 실패", command=args.command, error_code=e.error_code)
        sys.stderr.write(json.dumps(create_error_response(e), ensure_ascii=False, default=str) + "\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

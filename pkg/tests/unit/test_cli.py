"""
nnf CLI 테스트

하위 명령의 출력 형식, 종료 코드(0/1/2), 설정 파일 우선순위,
오류 문서(stderr JSON)를 점검합니다.
"""

import inspect
import json
import logging

import pytest

from src.cli.main import main
from src.models.reports import PropertyCheck, VerificationReport
from src.modular import delta_expansion

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


class Collector:
    """stdout 대신 출력을 모으는 도우미"""

    def __init__(self):
        self.chunks = []

    def __call__(self, text):
        self.chunks.append(text)

    @property
    def text(self):
        return "".join(self.chunks)

    @property
    def lines(self):
        return self.text.splitlines()


def run(argv):
    out = Collector()
    code = main(argv, out=out)
    return code, out


def data_rows(lines):
    return [line for line in lines if not line.startswith("#")][1:]


def last_error(capsys):
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


@pytest.fixture
def series_file(tmp_path):
    path = tmp_path / "ones.csv"
    path.write_text("n,re,im\n1,1,0\n2,1,0\n3,1,0\n4,1,0\n", encoding="utf-8")
    return str(path)


@pytest.fixture
def elem_file(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({
        "field": {"min_poly": [0, 1]},
        "terms": [[["2"], "1"], [["3"], "1"]],
    }), encoding="utf-8")
    return str(path)


class TestModularCommands:
    """delta / hecke 명령 테스트"""

    def test_hecke_classical_is_eigen(self):
        code, out = run(["hecke", "-p", "2", "--variant", "classical", "-N", "64"])
        assert code == 0
        assert out.lines[0].startswith("# tool=nonlinear-number-field command=hecke")
        assert out.lines[1] == "n,a_n"
        delta = delta_expansion(64)
        rows = data_rows(out.lines)
        assert len(rows) == 32
        assert rows == [f"{m},{-24 * delta[m]}" for m in range(1, 33)]

    def test_delta_without_header(self):
        code, out = run(["delta", "-N", "5", "--no-emit-seed-header"])
        assert code == 0
        assert out.lines == ["n,a_n", "1,1", "2,-24", "3,252", "4,-1472", "5,4830"]

    def test_output_is_reproducible(self):
        assert run(["delta", "-N", "30"])[1].text == run(["delta", "-N", "30"])[1].text

    def test_hecke_paper_variant_alias(self):
        """--variant paper 는 puiseux 와 같은 계수, 기본값도 paper"""
        _, paper = run(["hecke", "-p", "2", "--variant", "paper", "-N", "40"])
        _, puiseux = run(["hecke", "-p", "2", "--variant", "puiseux", "-N", "40"])
        code, default = run(["hecke", "-p", "2", "-N", "40"])
        assert code == 0
        assert data_rows(paper.lines) == data_rows(puiseux.lines) == data_rows(default.lines)
        delta = delta_expansion(40)
        assert data_rows(paper.lines)[0] == f"1,{2048 * delta[2]}"


class TestSeriesCommands:
    """series 명령 테스트"""

    def test_dconv(self, series_file):
        code, out = run(["series", "dconv", series_file, series_file, "--no-emit-seed-header"])
        assert code == 0
        assert out.lines == ["n,re,im", "1,1,0", "2,2,0", "3,2,0", "4,3,0"]

    def test_multiplicativity(self, series_file):
        code, out = run(["series", "multiplicativity", series_file])
        assert code == 0
        document = json.loads(out.text)
        assert document["multiplicativity"] == "completely_multiplicative"
        assert document["header"]["N"] == 4

    def test_non_unit_is_usage_error(self, tmp_path, capsys):
        path = tmp_path / "delta2.csv"
        path.write_text("1,0\n2,1\n", encoding="utf-8")
        code, _ = run(["series", "dinv", str(path)])
        assert code == 2
        error = last_error(capsys)
        assert error["success"] is False
        assert error["error"]["error_type"] == "NonUnitError"

    def test_index_above_truncation_is_rejected(self, tmp_path, capsys):
        """-N 보다 큰 색인은 조용히 버리지 않고 오류"""
        path = tmp_path / "five.csv"
        path.write_text("n,re,im\n1,1,0\n5,1,0\n", encoding="utf-8")
        code, _ = run(["series", "dinv", str(path), "-N", "3"])
        assert code == 2
        error = last_error(capsys)["error"]
        assert error["error_type"] == "TruncationMismatchError"

    def test_config_truncation_pads_series(self, tmp_path, series_file):
        """설정 파일의 N 이 급수 절단 차수로 쓰임 (빠진 색인은 0)"""
        config = tmp_path / "run.env"
        config.write_text("N=6\n", encoding="utf-8")
        code, out = run(["series", "dconv", series_file, series_file, "--config", str(config),
                         "--no-emit-seed-header"])
        assert code == 0
        assert data_rows(out.lines) == ["1,1,0", "2,2,0", "3,2,0", "4,3,0", "5,0,0", "6,2,0"]

    def test_default_truncation_follows_file(self, series_file):
        code, out = run(["series", "dinv", series_file])
        assert code == 0
        assert len(data_rows(out.lines)) == 4

    def test_missing_file(self, capsys):
        code, _ = run(["series", "dinv", "/nonexistent/series.csv"])
        assert code == 2
        assert last_error(capsys)["error"]["error_type"] == "ValidationError"


class TestAlgebraAndCharacterCommands:
    """algebra / char / flow 명령 테스트"""

    def test_dirichlet_mul(self, elem_file):
        code, out = run(["algebra", "mul", "--op", "dirichlet", elem_file, elem_file])
        assert code == 0
        terms = json.loads(out.text)["element"]["terms"]
        assert terms == [[["4"], "1", "0"], [["6"], "2", "0"], [["9"], "1", "0"]]

    def test_trace(self, elem_file):
        code, out = run(["algebra", "trace", elem_file])
        assert code == 0
        assert json.loads(out.text)["trace"] == ["2", "0"]

    def test_char_list_csv(self):
        code, out = run(["char", "list", "5", "--format", "csv", "--no-emit-seed-header"])
        assert code == 0
        assert out.lines[0] == "index,conductor,primitive,order"
        assert out.lines[1] == "0,1,false,1"
        assert len(out.lines) == 5

    def test_flow_requires_complex(self, elem_file, capsys):
        code, _ = run(["flow", "--mode", "cauchy", "-r", "0.25", elem_file])
        assert code == 2
        assert last_error(capsys)["error"]["error_type"] == "CoefficientDomainError"
        code, out = run(["flow", "--mode", "cauchy", "-r", "0.25", "--promote", elem_file])
        assert code == 0
        assert json.loads(out.text)["element"]["domain"] == "complex"

    def test_flow_element_after_r(self, elem_file):
        """-r 값 바로 뒤의 위치 인자가 원소 경로로 읽힘"""
        code, out = run(["flow", "--mode", "cauchy", "--promote", "-r", "0.25", elem_file])
        assert code == 0
        terms = {tuple(t[0]): complex(float(t[1]), float(t[2])) for t in json.loads(out.text)["element"]["terms"]}
        assert terms[("2",)] == pytest.approx(-1)
        assert terms[("3",)] == pytest.approx(-1j)

    @pytest.mark.parametrize("r_args", [["-r", "0.1", "-r", "0.2"], ["-r", "0.1,0.2"]])
    def test_flow_r_list_syntax(self, elem_file, capsys, r_args):
        """반복 -r 과 쉼표 목록은 같은 2차원 매개변수 (Q 에서는 차원 불일치)"""
        code, _ = run(["flow", "--mode", "dirichlet", "--promote", *r_args, elem_file])
        assert code == 2
        assert last_error(capsys)["error"]["error_type"] == "DimensionMismatchError"

    def test_flow_r_not_a_number(self, elem_file):
        assert run(["flow", "--mode", "cauchy", "-r", "abc", elem_file])[0] == 2


class TestUsageAndConfig:
    """사용법 오류와 설정 우선순위 테스트"""

    def test_missing_subcommand(self):
        assert run(["series"])[0] == 2

    def test_unknown_command(self):
        assert run(["frobnicate"])[0] == 2

    def test_config_file_and_flag_precedence(self, tmp_path):
        config = tmp_path / "run.env"
        config.write_text("N=6\nseed=3\n", encoding="utf-8")
        code, out = run(["delta", "--config", str(config)])
        assert code == 0
        assert out.lines[0] == "# tool=nonlinear-number-field command=delta seed=3 N=6"
        assert len(data_rows(out.lines)) == 6
        code, out = run(["delta", "--config", str(config), "-N", "4"])
        assert len(data_rows(out.lines)) == 4

    def test_invalid_config_value(self, tmp_path, capsys):
        config = tmp_path / "bad.env"
        config.write_text("tolerance=0.5\n", encoding="utf-8")
        assert run(["delta", "--config", str(config)])[0] == 2
        assert last_error(capsys)["error"]["error_type"] == "ConfigurationError"


class TestVerifyCommand:
    """verify 명령 테스트"""

    def _report(self, passed):
        report = VerificationReport(suite="mobius", seed=20240101)
        report.add(PropertyCheck(name="f∗f⁻¹=ε", passed=passed, total=500))
        return report

    def test_cli_package_keeps_main_submodule(self):
        """src.cli.main 은 함수가 아니라 모듈이어야 패치 대상 경로가 유효"""
        import src.cli

        assert inspect.ismodule(src.cli.main)
        assert callable(src.cli.main.main)

    def test_passing_suite(self, mocker):
        run_suite = mocker.patch("src.cli.main.run_suite", return_value=self._report(500))
        code, out = run(["verify", "mobius", "--samples", "5"])
        assert code == 0
        document = json.loads(out.text)
        assert document["summary"] == ["f∗f⁻¹=ε: 500/500"]
        assert document["status"] == "pass"
        assert run_suite.call_args.kwargs["samples"] == 5

    def test_failing_suite(self, mocker):
        mocker.patch("src.cli.main.run_suite", return_value=self._report(499))
        code, out = run(["verify", "mobius", "--format", "csv", "--no-emit-seed-header"])
        assert code == 1
        assert out.lines == ["name,passed,total,expect_failure,ok", "f∗f⁻¹=ε,499,500,false,false"]
        logger.info("verify 종료 코드 테스트 통과")

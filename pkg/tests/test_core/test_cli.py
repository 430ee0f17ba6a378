from __future__ import annotations

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from isk4_detect import Graph, Isk4Detector, __version__, build_graph
from isk4_detect.__main__ import (
    EXIT_FOUND,
    EXIT_FREE,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    app,
)
from isk4_detect.core import CertificateExtractionError, MinimalityViolation
from tests.graphs import GraphWriter, complete, cycle

runner = CliRunner()


class TestDetect:
    def test_found(self, graph_file: GraphWriter) -> None:
        result = runner.invoke(app, ["detect", str(graph_file(complete(4)))])
        assert result.exit_code == EXIT_FOUND
        assert json.loads(result.stdout) == {"verdict": "isk4", "vertices": [0, 1, 2, 3]}

    def test_free(self, graph_file: GraphWriter) -> None:
        result = runner.invoke(app, ["detect", str(graph_file(cycle(6)))])
        assert result.exit_code == EXIT_FREE
        assert result.stdout.strip() == '{"verdict":"isk4-free"}'

    def test_text_output(self, graph_file: GraphWriter) -> None:
        result = runner.invoke(app, ["detect", str(graph_file(cycle(6))), "--output", "text"])
        assert result.exit_code == EXIT_FREE
        assert "isk4-free" in result.stdout

    @pytest.mark.parametrize("error", [MinimalityViolation, CertificateExtractionError])
    def test_internal_error_has_its_own_status(
        self, graph_file: GraphWriter, monkeypatch: pytest.MonkeyPatch, error: type[Exception]
    ) -> None:
        def broken(self: Isk4Detector, g: Graph) -> None:
            raise error("case refuted")

        monkeypatch.setattr(Isk4Detector, "detect", broken)
        result = runner.invoke(app, ["detect", str(graph_file(cycle(6)))])
        assert result.exit_code == EXIT_INTERNAL_ERROR
        assert EXIT_INTERNAL_ERROR not in (EXIT_FREE, EXIT_FOUND, EXIT_INPUT_ERROR)

    def test_dimacs_by_suffix(self, tmp_path: Path) -> None:
        target = tmp_path / "k4.col"
        target.write_text("p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")
        result = runner.invoke(app, ["detect", str(target)])
        assert result.exit_code == EXIT_FOUND

    def test_missing_file(self, tmp_path: Path) -> None:
        result = runner.invoke(app, ["detect", str(tmp_path / "absent.txt")])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_malformed_file(self, tmp_path: Path) -> None:
        target = tmp_path / "bad.txt"
        target.write_text("3 1\n0 7\n")
        result = runner.invoke(app, ["detect", str(target)])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_unknown_format(self, graph_file: GraphWriter) -> None:
        result = runner.invoke(app, ["detect", str(graph_file(cycle(4))), "--format", "gml"])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestVerify:
    @pytest.fixture()
    def k4_file(self, graph_file: GraphWriter) -> Path:
        return graph_file(complete(5))

    def _certificate(self, tmp_path: Path, text: str) -> str:
        target = tmp_path / "cert.json"
        target.write_text(text)
        return str(target)

    def test_valid(self, k4_file: Path, tmp_path: Path) -> None:
        cert = self._certificate(tmp_path, '{"verdict":"isk4","vertices":[1,2,3,4]}')
        result = runner.invoke(app, ["verify", str(k4_file), cert])
        assert result.exit_code == EXIT_FREE
        assert result.stdout.strip() == "valid"

    def test_invalid(self, k4_file: Path, tmp_path: Path) -> None:
        cert = self._certificate(tmp_path, '{"verdict":"isk4","vertices":[0,1,2]}')
        result = runner.invoke(app, ["verify", str(k4_file), cert])
        assert result.exit_code == EXIT_FOUND
        assert result.stdout.strip() == "invalid"

    def test_free_certificate_proves_nothing(self, k4_file: Path, tmp_path: Path) -> None:
        cert = self._certificate(tmp_path, '{"verdict":"isk4-free"}')
        result = runner.invoke(app, ["verify", str(k4_file), cert])
        assert result.exit_code == EXIT_FOUND

    @pytest.mark.parametrize(
        "text",
        [
            '{"verdict":"maybe"}',
            '{"verdict":"isk4"}',
            "not json",
            '{"verdict":"isk4","vertices":[-1]}',
        ],
    )
    def test_malformed(self, k4_file: Path, tmp_path: Path, text: str) -> None:
        result = runner.invoke(app, ["verify", str(k4_file), self._certificate(tmp_path, text)])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestOracle:
    def test_found(self, graph_file: GraphWriter) -> None:
        result = runner.invoke(app, ["oracle", str(graph_file(complete(4)))])
        assert result.exit_code == EXIT_FOUND
        assert json.loads(result.stdout)["vertices"] == [0, 1, 2, 3]

    def test_budget_from_environment(self, graph_file: GraphWriter) -> None:
        path = str(graph_file(cycle(6)))
        result = runner.invoke(app, ["oracle", path], env={"ISK4_ORACLE_MAX_N": "5"})
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_flag_overrides_environment(self, graph_file: GraphWriter) -> None:
        path = str(graph_file(cycle(6)))
        args = ["oracle", path, "--max-n", "6"]
        result = runner.invoke(app, args, env={"ISK4_ORACLE_MAX_N": "5"})
        assert result.exit_code == EXIT_FREE

    def test_default_budget_refuses_large_graphs(self, graph_file: GraphWriter) -> None:
        result = runner.invoke(app, ["oracle", str(graph_file(build_graph(17, [])))])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestGen:
    def test_stdout(self) -> None:
        args = ["gen", "--family", "twin_wheel", "--n", "6", "--seed", "1"]
        first = runner.invoke(app, args)
        second = runner.invoke(app, args)
        assert first.exit_code == EXIT_FREE
        assert first.stdout == second.stdout
        assert first.stdout.splitlines()[0] == "6 8"

    def test_output_file(self, tmp_path: Path) -> None:
        target = tmp_path / "g.txt"
        result = runner.invoke(
            app, ["gen", "--family", "subdivided_k4", "--n", "10", "--output", str(target)]
        )
        assert result.exit_code == EXIT_FREE
        assert target.read_text().splitlines()[0] == "10 12"

    def test_generated_file_feeds_detect(self, tmp_path: Path) -> None:
        target = tmp_path / "g.txt"
        runner.invoke(app, ["gen", "--family", "cubic_line", "--n", "8", "--output", str(target)])
        assert runner.invoke(app, ["detect", str(target)]).exit_code == EXIT_FREE

    @pytest.mark.parametrize(
        "args",
        [["--family", "nope", "--n", "5"], ["--family", "cubic_line", "--n", "7"]],
    )
    def test_invalid_spec(self, args: list[str]) -> None:
        assert runner.invoke(app, ["gen", *args]).exit_code == EXIT_INPUT_ERROR


class TestFuzz:
    def test_agreement(self) -> None:
        result = runner.invoke(app, ["fuzz", "--trials", "6", "--max-n", "7", "--seed", "3"])
        assert result.exit_code == EXIT_FREE
        assert "trials: 6" in result.stdout
        assert "mismatches: 0" in result.stdout
        assert "first failing seed: -" in result.stdout

    def test_json_report(self, tmp_path: Path) -> None:
        report = tmp_path / "fuzz.json"
        result = runner.invoke(
            app, ["fuzz", "--trials", "3", "--max-n", "6", "--report", str(report)]
        )
        assert result.exit_code == EXIT_FREE
        data = json.loads(report.read_text())
        assert data["ok"] is True
        assert data["summary"]["trials"] == 3

    def test_html_report(self, tmp_path: Path) -> None:
        report = tmp_path / "fuzz.html"
        runner.invoke(app, ["fuzz", "--trials", "2", "--max-n", "5", "--report", str(report)])
        assert "detector and oracle agree" in report.read_text()

    def test_trial_size_above_oracle_budget(self) -> None:
        args = ["fuzz", "--trials", "1", "--max-n", "20", "--oracle-max-n", "16"]
        result = runner.invoke(app, args)
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_bad_grid(self) -> None:
        result = runner.invoke(app, ["fuzz", "--trials", "1", "--p-grid", "0.2,1.5"])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestBench:
    def test_csv(self) -> None:
        result = runner.invoke(
            app, ["bench", "--family", "cubic_line", "--sizes", "8,12", "--reps", "1"]
        )
        assert result.exit_code == EXIT_FREE
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "family,n,median_ms"
        rows = [line.split(",")[:2] for line in lines[1:]]
        assert rows == [["cubic_line", "8"], ["cubic_line", "12"]]

    def test_unknown_family(self) -> None:
        result = runner.invoke(app, ["bench", "--family", "nope", "--sizes", "8"])
        assert result.exit_code == EXIT_INPUT_ERROR


def test_version() -> None:
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout

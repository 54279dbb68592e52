import json

import pytest
from click.testing import CliRunner

from indcomp.cli import main
from indcomp.formats import encode_graph6
from indcomp.graphs import Graph


@pytest.fixture()
def runner() -> CliRunner:
    return CliRunner()


def _json_lines(output: str) -> list[dict]:
    return [json.loads(line) for line in output.strip().splitlines()]


class TestHomologyCommand:
    def test_literal_graph6(self, runner):
        result = runner.invoke(main, ["homology", "Dhc"])
        assert result.exit_code == 0
        payload = _json_lines(result.output)[0]
        assert payload["betti"] == [0, 1] and payload["homology_class"] == "sphere-like(1)"

    def test_file_of_graphs(self, runner, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("Dhc\nA_\n")
        result = runner.invoke(main, ["homology", str(path)])
        assert result.exit_code == 0
        assert len(_json_lines(result.output)) == 2

    def test_edge_list_file(self, runner, tmp_path):
        path = tmp_path / "c5.txt"
        path.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
        result = runner.invoke(main, ["homology", str(path)])
        assert result.exit_code == 0
        assert _json_lines(result.output)[0]["graph6"] == encode_graph6(Graph.cycle(5))

    def test_csv_format(self, runner):
        result = runner.invoke(main, ["homology", "A_", "--format", "csv"])
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0].startswith("graph6,n,betti")
        assert lines[1].startswith("A_,2,1,1,1,0,sphere-like(0)")

    def test_parse_error_exits_2(self, runner):
        result = runner.invoke(main, ["homology", "A_?"])
        assert result.exit_code == 2
        assert "byte offset" in result.output


class TestClassifyCommand:
    def test_sphere(self, runner):
        result = runner.invoke(main, ["classify", "Dhc"])
        assert result.exit_code == 0
        assert _json_lines(result.output)[0]["result"] == "sphere"

    def test_non_ternary_exit_code_1(self, runner):
        g6 = encode_graph6(Graph.cycle(6))
        result = runner.invoke(main, ["classify", g6])
        assert result.exit_code == 1
        assert _json_lines(result.output)[0]["result"] == "non-ternary"


class TestTernaryCommand:
    def test_witness_csv(self, runner):
        g6 = encode_graph6(Graph.complete(3))
        result = runner.invoke(main, ["ternary", g6, "--format", "csv"])
        assert result.exit_code == 0
        assert result.output.strip().splitlines()[1].endswith("0,0;1;2")


class TestOracleCyclesCommand:
    def test_json(self, runner):
        result = runner.invoke(main, ["oracle-cycles", "--max", "5"])
        assert result.exit_code == 0
        rows = _json_lines(result.output)
        assert [r["length"] for r in rows] == [3, 4, 5]

    def test_rejects_small_max(self, runner):
        result = runner.invoke(main, ["oracle-cycles", "--max", "2"])
        assert result.exit_code == 2


class TestVerifyCommand:
    def test_exhaustive_json(self, runner):
        result = runner.invoke(main, ["verify", "--max-n", "3"])
        assert result.exit_code == 0
        rows = _json_lines(result.output)
        summary = rows[-1]["summary"]
        assert summary["graphs"] == 7 and summary["failures"] == 0
        assert len(rows) == 8  # 7 reports + summary

    def test_requires_exactly_one_source(self, runner):
        assert runner.invoke(main, ["verify"]).exit_code == 2
        assert runner.invoke(main, ["verify", "--max-n", "2", "--stdin"]).exit_code == 2

    def test_stdin_stream(self, runner):
        result = runner.invoke(main, ["verify", "--stdin"], input="Dhc\nA_\n")
        assert result.exit_code == 0
        assert _json_lines(result.output)[-1]["summary"]["graphs"] == 2

    def test_stdin_with_bad_line_exits_2(self, runner):
        result = runner.invoke(main, ["verify", "--stdin"], input="Dhc\nnope!\n")
        assert result.exit_code == 2
        summary = _json_lines(result.output)[-1]["summary"]
        assert summary["parse_errors"][0]["line"] == 2

    def test_checks_subset_and_csv(self, runner):
        result = runner.invoke(
            main, ["verify", "--max-n", "2", "--checks", "main,euler", "--format", "csv"]
        )
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0].startswith("g6,")
        summary = json.loads(result.stderr.strip())["summary"]
        assert summary["checks"] == ["main", "euler"]

    def test_no_reports(self, runner):
        result = runner.invoke(main, ["verify", "--max-n", "2", "--no-reports"])
        assert result.exit_code == 0
        rows = _json_lines(result.output)
        assert len(rows) == 1 and "summary" in rows[0]

    def test_jobs_flag(self, runner):
        result = runner.invoke(main, ["verify", "--max-n", "3", "--jobs", "2", "--no-reports"])
        assert result.exit_code == 0
        assert _json_lines(result.output)[0]["summary"]["failures"] == 0

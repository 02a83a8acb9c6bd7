import json
from importlib import resources

import jsonschema
import pytest

from ecctrees.cli import main


@pytest.fixture(scope="module")
def schemas():
    text = (
        resources.files("ecctrees") / "schemas" / "cli_output.schema.json"
    ).read_text()
    return json.loads(text)["commands"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, schemas, command, *argv):
    code, out, _ = run(capsys, command, *argv, "--format", "json")
    payload = json.loads(out)
    jsonschema.validate(payload, schemas[command])
    return code, payload


class TestValidate:
    def test_valid_sequence(self, capsys):
        code, out, _ = run(capsys, "validate", "2,3,3,4,4")
        assert code == 0
        assert "valid" in out

    def test_invalid_sequence(self, capsys):
        code, out, _ = run(capsys, "validate", "2,3,4,4")
        assert code == 2
        assert "CondII" in out

    def test_empty_is_usage_error(self, capsys):
        code, _, err = run(capsys, "validate", "")
        assert code == 1

    def test_json(self, capsys, schemas):
        code, payload = run_json(capsys, schemas, "validate", "2,3,3,4,4")
        assert code == 0
        assert payload["valid"] is True
        assert payload["mult"] == [1, 2, 2]


class TestExtremal:
    def test_seven_vertex_example(self, capsys, schemas):
        code, payload = run_json(capsys, schemas, "extremal", "2,3,3,4,4,4,4")
        assert code == 0
        assert payload["wiener"] == 46
        assert payload["subtrees"] == "41"
        assert payload["tree"].startswith("7\n")

    def test_star(self, capsys, schemas):
        code, payload = run_json(capsys, schemas, "extremal", "1,2,2,2")
        assert code == 0
        assert payload["wiener"] == 9
        assert payload["subtrees"] == "11"

    def test_invalid_sequence(self, capsys):
        code, _, _ = run(capsys, "extremal", "2,3,4,4")
        assert code == 2


class TestInvariants:
    def test_p5(self, tmp_path, capsys, schemas):
        f = tmp_path / "p5.tree"
        f.write_text("5\n0 1\n1 2\n2 3\n3 4\n")
        code, payload = run_json(capsys, schemas, "invariants", str(f))
        assert code == 0
        assert payload["wiener"] == 20
        assert payload["subtrees"] == "15"
        assert all(v == 0 for v in payload["relation_residuals"].values())

    def test_star_file(self, tmp_path, capsys, schemas):
        f = tmp_path / "s4.tree"
        f.write_text("4\n0 1\n0 2\n0 3\n")
        code, payload = run_json(capsys, schemas, "invariants", str(f))
        assert payload["subtrees"] == "11"

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "invariants", "/nonexistent.tree")
        assert code == 1


class TestVerifyAuditExplore:
    def test_verify(self, capsys, schemas):
        code, payload = run_json(capsys, schemas, "verify", "2,3,3,4,4,4,4")
        assert code == 0
        assert payload["unique_min_w"] and payload["unique_max_n"]

    def test_audit(self, capsys, schemas):
        code, payload = run_json(capsys, schemas, "audit", "--max-n", "8")
        assert code == 0
        deltas = {row["sequence"]: row["delta_W"] for row in payload["rows"]}
        assert deltas["2^1,3^2,4^4"] == 2

    def test_explore(self, capsys, schemas):
        code, payload = run_json(
            capsys, schemas, "explore", "--max-n", "7", "--lambda", "1"
        )
        assert code == 0
        assert all(r["construction_is_min"] for r in payload["rows"])

    def test_byte_identical_across_jobs(self, capsys):
        outputs = []
        for jobs in ("1", "2", "3"):
            code, out, _ = run(
                capsys,
                "verify",
                "3,4,4,5,5,5,6,6,6,6",
                "--jobs",
                jobs,
                "--format",
                "json",
            )
            assert code == 0
            outputs.append(out)
        assert outputs[0] == outputs[1] == outputs[2]


class TestUsage:
    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 1

    def test_bad_max_n(self, capsys):
        assert run(capsys, "audit", "--max-n", "2")[0] == 1

    def test_bad_lambda(self, capsys):
        assert run(capsys, "explore", "--max-n", "5", "--lambda", "0")[0] == 1

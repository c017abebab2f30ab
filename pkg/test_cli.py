import io
import json
import tempfile
from contextlib import redirect_stdout
from pathlib import Path

from src.cli import main

ALGEBRAS = Path(__file__).resolve().parent / "algebras"
R_FILE = str(ALGEBRAS / "triangular_r.yaml")
LAMBDA_FILE = str(ALGEBRAS / "lambda_a2.yaml")
GAMMA_FILE = str(ALGEBRAS / "gamma_a3_zero.yaml")
ONE_POINT_FILE = str(ALGEBRAS / "a3_one_point.yaml")


def _run(argv):
    """Exit code and captured stdout."""
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(argv)
    return code, buffer.getvalue()


def _run_json(argv):
    code, text = _run(argv + ["--json", "-"])
    return code, (json.loads(text) if code == 0 else None)


def test_algebra_info_with_split():
    code, document = _run_json(["algebra", "info", R_FILE, "--split", "A=1,2;B=3,4,5"])
    assert code == 0
    assert document["kind"] == "algebra_info"
    assert document["dim"] == 11
    assert document["basis_by_degree"]["2"] == ["epsilon.delta"]
    assert document["split"]["dim_M"] == 3
    assert document["split"]["M_lambda"] == "P1P2"
    assert document["split"]["gamma_M_projective"] is True


def test_algebra_info_text():
    code, text = _run(["algebra", "info", LAMBDA_FILE])
    assert code == 0
    assert "dim 3" in text
    assert "idempotents: e1 e2" in text


def test_field_override():
    code, document = _run_json(["algebra", "info", R_FILE, "--field", "2"])
    assert code == 0
    assert document["p"] == 2
    code, _ = _run(["algebra", "info", R_FILE, "--field", "4"])
    assert code == 2


def test_malformed_file_exits_with_2():
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "broken.yaml"
        path.write_text("name: broken\nvertices: [1]\ncolour: red\n", encoding="utf-8")
        code, _ = _run(["algebra", "info", str(path)])
    assert code == 2
    code, _ = _run(["algebra", "info", str(ALGEBRAS / "missing.yaml")])
    assert code == 2


def test_swapped_split_exits_with_4():
    code, _ = _run(["algebra", "info", R_FILE, "--split", "A=3,4,5;B=1,2"])
    assert code == 4
    code, _ = _run(["tri", "sweep", R_FILE, "--split", "A=1;B=3,4,5"])
    assert code == 4


def test_node_budget_exits_with_3():
    code, _ = _run(["stt", "enumerate", GAMMA_FILE, "--node-budget", "2"])
    assert code == 3


def test_stt_enumerate_with_oracle_and_dot():
    with tempfile.TemporaryDirectory() as tmp:
        dot_path = Path(tmp) / "hasse.dot"
        json_path = Path(tmp) / "poset.json"
        code, text = _run(
            ["stt", "enumerate", LAMBDA_FILE, "--oracle", "--dot", str(dot_path), "--json", str(json_path)]
        )
        assert code == 0
        assert text.startswith("5 support tau-tilting pairs over lambda_a2")
        assert "oracle agrees: 5 pairs" in text
        assert dot_path.read_text(encoding="utf-8").count("->") == 5
        document = json.loads(json_path.read_text(encoding="utf-8"))
    assert document["oracle"]["agrees"] is True
    assert [node["label"] for node in document["nodes"]][0] == "(0,P1P2)"


def test_module_tau_and_check():
    code, document = _run_json(["module", "tau", LAMBDA_FILE, "--module", "S1"])
    assert code == 0
    assert document["tau"] == "P2"
    code, document = _run_json(["module", "check", LAMBDA_FILE, "--module", "S1", "--predicate", "stt"])
    assert code == 0
    assert document["verdict"] is True
    assert document["pair"] == "(S1,P2)"
    code, document = _run_json(["module", "check", LAMBDA_FILE, "--module", "P2+S1", "--predicate", "tau-rigid"])
    assert code == 0
    assert document["verdict"] is False
    code, _ = _run(["module", "tau", LAMBDA_FILE, "--module", "P9"])
    assert code == 2


def test_sweep_document():
    code, document = _run_json(["tri", "sweep", R_FILE, "--split", "A=1,2;B=3,4,5"])
    assert code == 0
    assert document["kind"] == "lift_sweep"
    assert document["summary"]["passing"] == 29
    assert len(document["rows"]) == 60
    assert len(document["gamma_pairs"]) == 12


def test_sweep_output_does_not_depend_on_workers():
    argv = ["tri", "sweep", R_FILE, "--split", "A=1,2;B=3,4,5", "--json", "-"]
    code, serial = _run(argv + ["--workers", "1"])
    assert code == 0
    code, parallel = _run(argv + ["--workers", "4"])
    assert code == 0
    assert parallel == serial


def test_tilting_sweep_on_the_one_point_extension():
    code, document = _run_json(["tri", "sweep", ONE_POINT_FILE, "--split", "A=1,2;B=3", "--verify", "--tilting"])
    assert code == 0
    assert len(document["rows"]) == 10
    assert document["summary"]["tilting"] == 2
    assert {row["x_label"] for row in document["rows"] if row["tilting"]} == {"(P1P2,0)", "(P1S1,0)"}
    code, text = _run(["tri", "sweep", ONE_POINT_FILE, "--split", "A=1,2;B=3", "--tilting"])
    assert code == 0
    assert "2 lifts are tilting" in text


if __name__ == "__main__":
    test_algebra_info_with_split()
    test_algebra_info_text()
    test_field_override()
    test_malformed_file_exits_with_2()
    test_swapped_split_exits_with_4()
    test_node_budget_exits_with_3()
    test_stt_enumerate_with_oracle_and_dot()
    test_module_tau_and_check()
    test_sweep_document()
    test_sweep_output_does_not_depend_on_workers()
    test_tilting_sweep_on_the_one_point_extension()
    print("cli tests passed")

import io
import json
import subprocess
import sys

import pytest

from fdrtheta.cli import run
from fdrtheta.exterior import BigradedTable
from fdrtheta.macdonald import macdonald_schur
from fdrtheta.symfunc import SymF, schur


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_fdr_formula_json():
    code, text = call("fdr", "--n", "2", "--method", "formula", "--json")
    assert code == 0
    table = BigradedTable.from_json(json.loads(text))
    assert table.nonzero() == {(0, 0): schur((2,)), (0, 1): schur((1, 1)), (1, 0): schur((1, 1))}


@pytest.mark.parametrize("method", ["oracle", "formula", "theta"])
def test_fdr_methods_agree(method):
    code, text = call("fdr", "--n", "3", "--method", method)
    assert code == 0
    assert text.splitlines()[:2] == ["(0,0): s[3]", "(0,1): s[2,1]"]
    assert "(1,1): s[2,1] + s[1,1,1]" in text


def test_verify_main_theorem_exit_zero():
    code, text = call("verify", "main-theorem", "--n", "3", "--methods", "formula,recursion")
    assert code == 0
    assert text.strip().endswith("16/16 equal")


def test_verify_failure_exit_one():
    code, text = call("verify", "zero-index", "--n", "1", "--json")
    assert code == 1
    data = json.loads(text)
    assert data["all_equal"] is False and len(data["reports"]) == 2


def test_verify_theta_recursion_positive_k():
    code, _ = call("verify", "theta-recursion", "--degree", "2", "--min-k", "1")
    assert code == 0
    code, _ = call("verify", "theta-recursion", "--degree", "2")
    assert code == 1


def test_verify_single_cases():
    assert call("verify", "kron-skew", "--a", "2,1", "--b", "2,1", "--j", "1")[0] == 0
    assert call("verify", "hook-skew", "--k", "1", "--l", "1", "--m", "0", "--j", "1")[0] == 0
    assert call("verify", "hook-skew", "--n", "3", "--form", "telescoped-inclusive")[0] == 1
    assert call("verify", "nabla-hk", "--m", "1", "--l", "0", "--k", "1")[0] == 0


def test_lr_and_kronecker():
    assert call("lr", "--a", "1", "--b", "2", "--c", "2,1") == (0, "1\n")
    assert call("kronecker", "--a", "2,1", "--b", "2,1") == (0, "s[3] + s[2,1] + s[1,1,1]\n")


def test_char_table_json():
    code, text = call("char-table", "--n", "3", "--json")
    data = json.loads(text)
    assert code == 0
    assert data["classes"] == [[3], [2, 1], [1, 1, 1]]
    assert data["rows"][1] == {"lambda": [2, 1], "values": [-1, 0, 2]}


def test_macdonald_nabla_theta_enk_emit_symf_json():
    code, text = call("macdonald", "--mu", "2,1", "--json")
    assert code == 0
    assert SymF.from_json(json.loads(text)) == macdonald_schur((2, 1))
    code, text = call("enk", "--n", "2", "--k", "1")
    assert text == "-1/q*s[2]\n"
    code, text = call("nabla", "--e", "2", "--q", "0", "--t", "0")
    assert text == "s[2]\n"


def test_theta_from_file(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps(schur((1,)).to_json()))
    code, text = call("theta", "--d", "1", "--f", str(path), "--json")
    assert code == 0
    assert SymF.from_json(json.loads(text)) == schur((1, 1))
    code, text = call("schur-expand", "--f", str(path))
    assert text == "s[1]\n"


def test_schur_expand_htilde(tmp_path):
    path = tmp_path / "h.json"
    path.write_text(json.dumps({"basis": "Htilde", "degree": 2, "terms": [{"lambda": [2], "coeff": "1"}]}))
    assert call("schur-expand", "--f", str(path)) == (0, "s[2] + q*s[1,1]\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["kronecker", "--a", "2,x", "--b", "1"],
        ["kronecker", "--a", "2", "--b", "1"],
        ["fdr", "--n", "9", "--method", "oracle"],
        ["fdr", "--n", "3", "--method", "oracle", "--bound", "9"],
        ["macdonald", "--mu", "4,3"],
        ["schur-expand", "--f", "/nonexistent.json"],
        ["verify", "kron-skew"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    code, text = call(*argv)
    assert code == 2 and text == ""
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 1 and err[0].startswith("fdrtheta: error:")


def test_unsafe_prints_cost(capsys):
    code, _ = call("fdr", "--n", "2", "--method", "oracle", "--unsafe")
    assert code == 0
    assert "expected cost" in capsys.readouterr().err


def test_deterministic_output():
    assert call("fdr", "--n", "4", "--json") == call("fdr", "--n", "4", "--json")


def test_empty_table_rendering():
    from fdrtheta.cli import emit

    assert emit(BigradedTable(3), as_json=True) == "{}"
    assert emit(BigradedTable(3), as_json=False) == "(empty)"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fdrtheta", "lr", "--a", "1", "--b", "2", "--c", "2,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "1\n"

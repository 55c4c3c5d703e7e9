import io
import json
import subprocess
import sys


from crossdim import Matrix, parse_matrix
from crossdim.cli import run

EX_A = "1 2 -3 0 2 1; 2 1 -2 -1 1 0; 0 -1 -1 3 1 -2"


def call(capsys, *argv, stdin=None):
    code = run(list(argv), stdin=io.StringIO(stdin) if stdin is not None else None)
    out, err = capsys.readouterr()
    return code, out, err


def test_root_of_identity(capsys):
    code, out, _ = call(capsys, "root", "1 0 0 0; 0 1 0 0; 0 0 1 0; 0 0 0 1")
    assert code == 0
    assert out.splitlines() == ["root:", "1", "multiplicity: 4"]


def test_project_example(capsys):
    code, out, _ = call(capsys, "project", EX_A, "--target", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "projection:"
    assert parse_matrix("\n".join(lines[1:3])) == Matrix.from_rows([[1, 0, "1/3", 0], [0, "-1/3", 0, -1]])
    assert "residual:" not in out
    code, out, _ = call(capsys, "project", EX_A, "--target", "2", "--residual")
    assert out.splitlines()[-7] == "residual:"
    assert "4/3" in out and "-2/3" in out


def test_dist_of_self_is_zero(capsys):
    code, out, _ = call(capsys, "dist", "1 2; 3 4", "1 2; 3 4")
    assert code == 0
    assert out.splitlines() == ["dist_sq: 0", "dist: 0"]


def test_exact_by_default_decimal_on_request(capsys):
    _, out, _ = call(capsys, "norm", "1 0; 0 3")
    assert out.splitlines() == ["norm_sq: 5"]
    _, out, _ = call(capsys, "norm", "1 0; 0 3", "--decimal")
    assert out.splitlines()[1] == "norm: 2.236067977500"
    _, out, _ = call(capsys, "--precision", "3", "norm", "1 0; 0 3")
    assert out.splitlines()[1] == "norm: 2.236"
    _, out, _ = call(capsys, "dist", "1 0; 0 3", "2", "--precision", "4")
    assert out.splitlines() == ["dist_sq: 1", "dist: 1"]


def test_other_subcommands(capsys):
    assert call(capsys, "stp", "1 2", "1 3")[1].split() == ["1", "2", "3", "6"]
    assert call(capsys, "kron", "1 2", "1 0; 0 1")[1].split() == ["1", "0", "2", "0", "0", "1", "0", "2"]
    _, out, _ = call(capsys, "equiv", "1", "1 0; 0 1")
    assert out.splitlines()[0] == "equivalent: true"
    assert "theta:" in out and "lambda:" in out
    _, out, _ = call(capsys, "equiv", "1 2", "1 3")
    assert out.strip() == "equivalent: false"
    _, out, _ = call(capsys, "info", "0 0 0 0 0 0; 0 0 0 0 0 0; 0 0 0 0 0 0")
    assert "mu: 1/2" in out and "index: 3" in out
    _, out, _ = call(capsys, "add", "1", "1 0; 0 2")
    assert out.split() == ["root:", "2", "0", "0", "3"]
    _, out, _ = call(capsys, "sub", "1 0; 0 3", "1 0; 0 3")
    assert out.split() == ["root:", "0"]
    _, out, _ = call(capsys, "inner", "2", "1 0; 0 3")
    assert out.strip() == "inner: 4"


def test_exit_codes(capsys):
    code, _, err = call(capsys, "add", "1", "1 2")
    assert code == 3 and "lplus" in err and "1x1" in err and "1x2" in err
    code, _, err = call(capsys, "stp", "1 2", "1 /")
    assert code == 2 and "line 1, column 3" in err
    assert call(capsys, "stp", "1 2")[0] == 1
    assert call(capsys, "frobnicate")[0] == 1
    assert call(capsys, "project", "1")[0] == 1
    assert call(capsys, "project", "1", "--target", "0")[0] == 3
    assert call(capsys, "norm", "1", "--precision", "-1")[0] == 1
    assert call(capsys, "--help")[0] == 0


def test_structured_output_pipes_back(capsys, tmp_path):
    _, out, _ = call(capsys, "--format", "structured", "project", EX_A, "--target", "2", "--residual")
    doc = json.loads(out)
    assert doc["target_index"] == 2 and doc["distance_sq"] == "128/9"
    proj = parse_matrix(out)
    assert proj == Matrix.from_rows([[1, 0, "1/3", 0], [0, "-1/3", 0, -1]])
    residual = parse_matrix(json.dumps(doc["residual"]))
    assert residual.shape == (6, 12)
    # feeding the projection back through stdin: projecting again is idempotent
    _, out2, _ = call(capsys, "--format", "structured", "project", "@-", "--target", "2", stdin=out)
    assert parse_matrix(out2) == proj
    f = tmp_path / "p.json"
    f.write_text(out)
    _, out3, _ = call(capsys, "--format", "structured", "root", f"@{f}")
    assert parse_matrix(out3) == proj and json.loads(out3)["multiplicity"] == 1


def test_verify_suite(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "example-6-4")
    assert code == 0
    assert "FAIL" not in out and out.count("[PASS]") == 5
    code, out, _ = call(capsys, "verify", "--suite", "metric", "--cases", "20", "--format", "structured")
    assert code == 0 and json.loads(out)["passed"] is True


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "crossdim.cli", "root", "1 0; 0 1"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.split() == ["root:", "1", "multiplicity:", "2"]

import json

from singzeta.cli import dispatch, EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, _emit_reports
from singzeta.report import VerificationReport
from singzeta.tables import table_text


def run(capsys, *argv):
    code = dispatch(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_nz_text(capsys):
    code, out = run(capsys, "nz", "--family", "node", "--m", "1", "--d", "1")
    assert code == EXIT_PASS
    assert out.strip() == "1 - t + q*t^2"


def test_nz_json_roundtrip(capsys):
    code, out = run(capsys, "nz", "--family", "cusp", "--m", "2", "--d", "1",
                    "--format", "json")
    assert code == EXIT_PASS
    obj = json.loads(out)
    assert obj["vars"] == ["q", "t"]
    assert obj["terms"] == sorted(obj["terms"], key=lambda x: (x[0], x[1]))


def test_z_command(capsys):
    # cusp m=1 d=2: NZ = 1 + (q^2+q^3) t^2 + q^4 t^4, so the t^2 Quot count is
    # h_2(1,q) + q^2 + q^3 (equals 19 at q=2, matching the census)
    code, out = run(capsys, "z", "--family", "cusp", "--m", "1", "--d", "2",
                    "--tprec", "3")
    assert code == EXIT_PASS
    lines = out.strip().splitlines()
    assert lines[0] == "t^0: 1"
    assert lines[1] == "t^1: 1 + q"
    assert lines[2] == "t^2: 1 + q + 2*q^2 + q^3"


def test_cl_command(capsys):
    code, out = run(capsys, "cl", "--family", "node", "--m", "1",
                    "--uprec", "4", "--tprec", "3")
    assert code == EXIT_PASS
    assert out.startswith("numerator: 1 - (u + u^2 + u^3)*t")


def test_hall_command(capsys):
    code, out = run(capsys, "hall", "--lambda", "1,1", "--mu", "1")
    assert code == EXIT_PASS
    assert out.strip() == "1 + q"
    code, out = run(capsys, "hall", "--lambda", "1,1", "--mu", "1", "--oracle", "2")
    assert "oracle count at p=2: 3 (formula gives 3)" in out


def test_verify_pass_exit_code(capsys):
    code, out = run(capsys, "verify", "funceq", "--family", "node", "--m", "2", "--d", "2")
    assert code == EXIT_PASS
    assert "[PASS]" in out


def test_verify_json(capsys):
    code, out = run(capsys, "verify", "node22", "--d", "2", "--format", "json")
    assert code == EXIT_PASS
    payload = json.loads(out)
    assert payload[0]["status"] == "pass"
    assert payload[0]["check"] == "node22"


def test_table_commands(capsys):
    for which in ("1", "2", "3"):
        code, out = run(capsys, "table", which)
        assert code == EXIT_PASS
        assert out.strip() == table_text(int(which), computed=False)


def test_usage_errors(capsys):
    assert dispatch(["nonsense"]) == EXIT_USAGE
    capsys.readouterr()
    assert dispatch(["nz", "--family", "node", "--m", "1"]) == EXIT_USAGE
    capsys.readouterr()
    assert dispatch(["table", "4"]) == EXIT_USAGE
    capsys.readouterr()


def test_budget_exit_code(capsys):
    code, _ = run(capsys, "oracle", "quot", "--family", "node", "--m", "1",
                  "--d", "2", "--p", "2", "--max-codim", "3", "--budget", "5")
    assert code == EXIT_BUDGET


def test_fail_exit_path(capsys):
    bad = VerificationReport("demo", {}, "fail", discrepancy=(0, 0))
    assert _emit_reports([bad], "text") == EXIT_FAIL
    capsys.readouterr()


def test_oracle_commands(capsys):
    code, out = run(capsys, "oracle", "matrix", "--n", "1", "--p", "3")
    assert code == EXIT_PASS and out.strip() == "3"
    code, out = run(capsys, "oracle", "solomon", "--d", "1", "--p", "2", "--N", "3")
    assert code == EXIT_PASS and out.strip() == "[1, 1, 1, 1]"
    code, out = run(capsys, "oracle", "hall", "--lambda", "2", "--mu", "1",
                    "--nu", "1", "--p", "5")
    assert code == EXIT_PASS and out.strip() == "1"
    code, out = run(capsys, "oracle", "quot", "--family", "node", "--m", "1",
                    "--d", "1", "--p", "2", "--max-codim", "2", "--format", "json")
    assert code == EXIT_PASS
    payload = json.loads(out)
    assert payload["census"]["(0,0)"] == "1"


def test_verify_conversion(capsys):
    code, out = run(capsys, "verify", "conversion", "--m", "1", "--d", "2",
                    "--uprec", "5", "--tprec", "3")
    assert code == EXIT_PASS
    assert out.count("[PASS]") == 3


def test_verify_matrix_count(capsys):
    code, out = run(capsys, "verify", "matrix-count", "--n", "2", "--p", "2")
    assert code == EXIT_PASS

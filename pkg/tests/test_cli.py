import subprocess
import sys

import pytest

from siltglue.cli import main

SPEC_TEXT = """curve points=[x:3] V={x}
point x
[0,2]
[0,inf)
[2,inf)
"""


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ext_kronecker(capsys):
    code, out, _ = run_cli(capsys, "ext", "Q1", "P1", "--kronecker")
    assert code == 0 and out == "2\n"


def test_ext_default_is_kronecker(capsys):
    code, out, _ = run_cli(capsys, "ext", "P1", "Q3")
    assert code == 0 and out == "0\n"


def test_hom_kronecker(capsys):
    code, out, _ = run_cli(capsys, "hom", "P1", "Q3")
    assert code == 0 and out == "2\n"


def test_ext_sums_add_up(capsys):
    code, out, _ = run_cli(capsys, "ext", "Q1^2", "P1")
    assert code == 0 and out == "4\n"
    # Ext(Q1, P1) = 2 and Ext(Q1, P2) = 3 summand-wise
    code, out, _ = run_cli(capsys, "ext", "Q1", "P1+P2")
    assert code == 0 and out == "5\n"


def test_tube_ext_and_tau(capsys):
    code, out, _ = run_cli(capsys, "ext", "[1,3]", "[0,2]", "--tube", "3")
    assert code == 0 and out == "1\n"
    code, out, _ = run_cli(capsys, "tau", "[1,3]", "--tube", "3")
    assert code == 0 and out == "[0,2]\n"


def test_tau_kronecker(capsys):
    code, out, _ = run_cli(capsys, "tau", "Q1")
    assert code == 0 and out == "Q3\n"
    code, out, _ = run_cli(capsys, "tau", "P1")
    assert code == 0 and out == "none\n"


def test_symbolic_ext(capsys):
    code, out, _ = run_cli(capsys, "ext", "Pruefer(1:0)", "Pruefer(0:1)")
    assert code == 0 and out == "0\n"
    code, _, err = run_cli(capsys, "hom", "Pruefer(1:0)", "Pruefer(0:1)")
    assert code == 1 and "error" in err


def test_glue_kronecker(capsys):
    code, out, _ = run_cli(capsys, "glue-kronecker", "--row", "P1",
                           "--left", "Q1", "--right", "P1")
    assert code == 0 and out == "Q1 + Q2\n"


def test_glue_kronecker_zero_output(capsys):
    code, out, _ = run_cli(capsys, "glue-kronecker", "--row", "P3",
                           "--left", "P2[1]", "--right", "P3")
    assert code == 0 and out == "0 w.r.t. P1[1] + P2[1]\n"


def test_glue_kronecker_inadmissible_is_domain_error(capsys):
    code, _, err = run_cli(capsys, "glue-kronecker", "--row", "P1",
                           "--left", "P1", "--right", "P1")
    assert code == 1 and "not a silting complex" in err


def test_domain_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "tau", "[0,1]", "--tube", "3")
    assert code == 1 and "error" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_enumerate_rigid(capsys):
    code, out, _ = run_cli(capsys, "enumerate-rigid", "--rank", "2",
                           "--max-len", "2", "--pruefer")
    assert code == 0
    assert out.splitlines() == ["{[0,2], [0,inf)}",
                                "{[0,inf), [1,inf)}",
                                "{[1,3], [1,inf)}"]


def test_classify_silting(capsys):
    code, out, _ = run_cli(capsys, "classify-silting", "--bound", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0 w.r.t. P1[1] + P2[1] [silting non-tilting]"
    assert any("Lukas" in ln for ln in lines)


def test_oracle_check(capsys):
    code, out, _ = run_cli(capsys, "oracle-check", "--rank", "2",
                           "--max-len", "3")
    assert code == 0
    assert "0 mismatches" in out


def test_emit_quiver(capsys):
    code, out, _ = run_cli(capsys, "emit-quiver", "--rank", "2",
                           "--max-len", "2")
    assert code == 0
    assert out.startswith("digraph tube {")


def test_maxlen_env_override(capsys, monkeypatch):
    monkeypatch.setenv("SILTGLUE_MAXLEN", "1")
    code, out, _ = run_cli(capsys, "enumerate-rigid", "--rank", "2",
                           "--max-len", "5", "--pruefer")
    assert code == 0 and len(out.splitlines()) == 3


def test_spec_file_pipeline(tmp_path, capsys):
    spec = tmp_path / "datum.txt"
    spec.write_text(SPEC_TEXT, encoding="utf-8")
    code, out, _ = run_cli(capsys, "choose-seed", "--spec", str(spec),
                           "--point", "x")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "side right"
    assert lines[1] == "lambda [1,3]"
    reduced = tmp_path / "reduced.txt"
    reduced.write_text("\n".join(lines[2:]) + "\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "glue-tube", "--spec", str(reduced),
                           "--side", "right", "--lambda", "[1,3]",
                           "--point", "x")
    assert code == 0
    assert out.splitlines()[0] == "outcome new-summand [0,2]"
    assert "\n".join(out.splitlines()[1:]) + "\n" == SPEC_TEXT


def test_reduce_verb(tmp_path, capsys):
    spec = tmp_path / "datum.txt"
    spec.write_text(SPEC_TEXT, encoding="utf-8")
    code, out, _ = run_cli(capsys, "reduce", "--spec", str(spec),
                           "--lambda", "[1,3]", "--adjoint", "right",
                           "--point", "x")
    assert code == 0
    assert out.splitlines()[0] == "curve points=[x:2] V={x}"


def test_outputs_byte_stable(capsys):
    first = run_cli(capsys, "classify-silting")[1]
    second = run_cli(capsys, "classify-silting")[1]
    assert first == second
    first = run_cli(capsys, "enumerate-rigid", "--rank", "3", "--max-len",
                    "4", "--pruefer")[1]
    second = run_cli(capsys, "enumerate-rigid", "--rank", "3", "--max-len",
                     "4", "--pruefer")[1]
    assert first == second


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "siltglue.cli", "ext", "Q1",
                          "P1", "--kronecker"], capture_output=True,
                         text=True)
    assert out.returncode == 0 and out.stdout == "2\n"

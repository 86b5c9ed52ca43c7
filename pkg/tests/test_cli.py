from __future__ import annotations

import json
import subprocess
import sys

import pytest

from paramodular.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mul_monomial(capsys):
    code, out, _ = run(capsys, "mul", "X", "Y1", "--basis", "monomial")
    assert code == 0
    assert out.strip() == "X*Y1"


def test_mul_zero_divisor(capsys):
    code, out, _ = run(capsys, "mul", "Y1 + (1+q)*V^2 + V*X", "Y2 + (q^2+q^3)*V^2 - q*V*X")
    assert code == 0 and out.strip() == "0"


def test_mul_coset_basis(capsys):
    code, out, _ = run(capsys, "mul", "T(0,0,1)", "T(0,0,1)", "--basis", "coset")
    assert code == 0
    assert out.strip() == "T(0,0,2) + (1+q)*T(0,1,2) + (1+q)*T(1,0,2) + (q+2*q^2+q^3)*T(1,1,2) + (-1+q)*W*T(0,0,1)"


def test_convert_to_monomial(capsys):
    code, out, _ = run(capsys, "convert", "--to", "monomial", "T(0,0,2)")
    assert code == 0
    assert out.strip() == "-(q+2*q^2+q^3)*V^2 - (-1+q)*V*X + X^2 - (1+q)*Y1 - (1+q)*Y2"


def test_convert_json_records(capsys):
    code, out, _ = run(capsys, "convert", "--to", "coset", "V^2", "--json")
    assert code == 0
    assert json.loads(out) == [{"basis": "coset", "label": [0, 1, 1, 2], "coefficients": ["1"]}]
    code, out, _ = run(capsys, "convert", "--to", "monomial", "T(0,0,2)", "--json")
    recs = json.loads(out)
    assert {"basis": "monomial", "exponents": [2, 0, 0, 0], "coefficients": ["0", "-1", "-2", "-1"]} in recs


def test_tqk(capsys):
    code, out, _ = run(capsys, "tqk", "1")
    assert code == 0 and out.strip() == "T(0,0,1) + W*T(0,0,0)"
    code, out, _ = run(capsys, "tqk", "1", "--basis", "monomial")
    assert out.strip() == "V + X"


def test_series_index(capsys):
    code, out, _ = run(capsys, "series", "--char-kind", "2", "--eps", "+1", "--lambda", "q^3+2*q^2+q",
                       "--order", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "S[0] = 1"
    assert lines[1] == "S[1] = 1+q+2*q^2+q^3"
    assert lines[2] == "S[2] = 1+q+2*q^2+3*q^3+3*q^4+2*q^5+q^6"
    assert lines[-1] == "residual = 0"


def test_char_series_alias_and_json(capsys):
    code, out, _ = run(capsys, "char-series", "--char-kind", "1", "--eps", "-1", "--order", "5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["valid"] and data["order"] == 5 and len(data["S"]) == 6


def test_series_kind3_is_usage_error(capsys):
    code, _, err = run(capsys, "series", "--char-kind", "3", "--order", "4")
    assert code == 2 and "kinds 1 and 2" in err


def test_index_table(capsys):
    code, out, _ = run(capsys, "index-table", "--kmax", "3")
    assert code == 0
    assert out.splitlines()[3] == "3\t1+q+2*q^2+3*q^3+3*q^4+4*q^5+5*q^6+3*q^7+2*q^8+q^9"


def test_center_commands(capsys):
    code, out, _ = run(capsys, "center-basis", "--degree", "2")
    assert code == 0 and len(out.splitlines()) == 3
    assert run(capsys, "is-central", "(q-1)*V*X - Y1 - Y2")[1].strip() == "true"
    assert run(capsys, "is-central", "Y1")[1].strip() == "false"
    assert run(capsys, "center-hilbert", "--order", "9")[1].strip() == "1 1 3 3 6 6 10 10 15 15"


@pytest.mark.parametrize("argv", [["mul", "V^-1", "X"], ["convert", "--to", "coset", "T(0,3,2)"],
                                  ["tqk"], ["bogus"], ["series", "--char-kind", "5"],
                                  ["series", "--char-kind", "1", "--lambda", "q+"],
                                  ["tqk", "-1"]])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_output_is_deterministic(capsys):
    argv = ["convert", "--to", "coset", "X^3 - q*Y2*X + (q^2+1)*V*Y1"]
    first = run(capsys, *argv)[1]
    assert first == run(capsys, *argv)[1]


def test_module_entry_point_verify():
    proc = subprocess.run([sys.executable, "-m", "paramodular", "verify", "--acceptance-only"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    lines = proc.stdout.splitlines()
    assert len(lines) == 11 and all(line.startswith("PASS") for line in lines)

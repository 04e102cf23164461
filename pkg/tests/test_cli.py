import json
import subprocess
import sys

import pytest

from diagcubic import __version__
from diagcubic.cli import run


def _json(capsys, argv):
    code = run(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_symbol_envelope(capsys):
    code, env = _json(capsys, ["symbol", "2", "2+3w"])
    assert code == 0
    assert set(env) == {"command", "inputs", "result", "conditional_hypotheses", "version"}
    assert env["version"] == __version__
    assert env["result"]["exponent"] == 1


def test_symbol_negative_prime_after_separator(capsys):
    code = run(["symbol", "--json", "2", "--", "-1-3w"])
    env = json.loads(capsys.readouterr().out)
    assert code == 0 and env["result"]["exponent"] == 2


def test_selmer_550(capsys):
    code, env = _json(capsys, ["selmer", "550"])
    r = env["result"]
    assert code == 0
    assert (r["dimension"], r["s"], r["s0"], r["root_sign"]) == (2, 1, 1, -1)
    assert env["conditional_hypotheses"] == ["Sha(E_550/Q) finite"]


def test_json_is_stable(capsys):
    _, first = _json(capsys, ["local", "1", "2", "5", "--all"])
    _, second = _json(capsys, ["local", "1", "2", "5", "--all"])
    assert first == second
    assert json.loads(json.dumps(first, sort_keys=True)) == first


def test_surface_search_exit_codes(capsys):
    code, env = _json(capsys, ["surface", "1", "1", "1", "1", "--search", "2"])
    assert code == 0
    code, _ = _json(capsys, ["surface", "5", "9", "10", "12", "--search", "3"])
    assert code == 1


def test_theorem28(capsys):
    code, env = _json(capsys, ["theorem28", "2", "11", "5"])
    assert code == 0
    assert any("Sha(E_550/Q)" in h for h in env["conditional_hypotheses"])


def test_oracle_commands(capsys):
    code, env = _json(capsys, ["oracle", "count", "1", "2", "5", "--mod", "9"])
    assert code == 0
    code, env = _json(capsys, ["oracle", "brute", "1", "2", "5", "--place", "3"])
    assert code == 0
    code, env = _json(capsys, ["oracle", "points", "1", "1", "1", "--place", "5"])
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [["selmer", "16"], ["selmer", "abc"], ["symbol", "2"], ["local", "1", "0", "5", "--all"]],
)
def test_invalid_input_exit_2(capsys, argv):
    assert run(argv) == 2
    assert capsys.readouterr().err


def test_human_output(capsys):
    assert run(["selmer", "7"]) == 0
    out = capsys.readouterr().out
    assert "dimension" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "diagcubic", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and __version__ in proc.stdout

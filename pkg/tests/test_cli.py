import io
import json
import subprocess
import sys

import pytest

from gencartan.cli import main

WITT_N = {"algebraType": "witt", "k": 1, "n": 1, "kinds": "N", "gradingMaps": [["1"]]}
BAD = {"algebraType": "witt", "k": 1, "n": 1, "kinds": "0", "gradingMaps": [["0"]]}


@pytest.fixture
def cfg_path(tmp_path):
    def write(data, name="cfg.json"):
        p = tmp_path / name
        p.write_text(json.dumps(data))
        return str(p)

    return write


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_bracket_example(cfg_path):
    code, text = run("bracket", cfg_path(WITT_N), "x[(1);(0)]d1", "x[(0);(1)]d1")
    assert code == 0
    assert text.strip() == "(1)*x[(1);(0)]d1 + (-1)*x[(1);(1)]d1"


def test_validate_ok_and_failure(cfg_path):
    assert run("validate", cfg_path(WITT_N)) == (0, "ok\n")
    code, text = run("validate", cfg_path(BAD))
    assert code == 1
    assert "(2.6)" in text and "(2.7)" in text


def test_validation_failure_blocks_commands(cfg_path):
    code, _ = run("bracket", cfg_path(BAD), "x[(0);()]d1", "x[(1);()]d1")
    assert code == 1


def test_verify_preset_jacobi():
    code, text = run("verify", "preset:example-2", "--suite", "jacobi", "--samples", "200", "--rng-seed", "7")
    assert code == 0
    assert text.startswith("suite jacobi: 200 samples")
    assert "0 violations" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["validate", "preset:example-2", "--loud"],
        ["verify", "preset:example-2", "--suite", "nope"],
        ["verify", "preset:example-2", "--suite", "oracle-3.8"],
        ["validate", "/nonexistent/cfg.json"],
        ["validate", "preset:example-9"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2


def test_malformed_element_exit_2(cfg_path, capsys):
    code, _ = run("bracket", cfg_path(WITT_N), "x[(1);(0)d1", "x[(0);(1)]d1")
    assert code == 2
    assert "position" in capsys.readouterr().err


def test_structure_constants_records(cfg_path):
    code, text = run("structure-constants", cfg_path(WITT_N), "--window", "-1..1/1")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 36
    assert all(line.count(" | ") == 2 for line in lines)
    assert lines[0].startswith("(1)*x[(-1);(0)]d1 | (1)*x[(-1);(0)]d1 | ")
    assert lines[0].endswith(" | 0")


def test_structure_constants_special_labels(cfg_path):
    cfg = {"algebraType": "special", "n": 2, "kinds": "00", "deltaNonzero": [True, True]}
    code, text = run("structure-constants", cfg_path(cfg), "--window", "-1..1")
    assert code == 0
    assert text.splitlines()[0].startswith("D[1,2](x[(-1,-1);(0,0)]) | ")


def test_probe_output():
    code, text = run("probe", "preset:example-4:k=2", "--seed-element", "x[(1,0,0,0);(0,0)]", "--window", "-1..1,-1..1,0..0,0..0")
    assert code == 0
    assert "reached" in text


def test_repeated_runs_identical(cfg_path):
    p = cfg_path(WITT_N)
    a = run("structure-constants", p, "--window", "-2..2/1")
    b = run("structure-constants", p, "--window", "-2..2/1")
    assert a == b
    a = run("verify", "preset:example-5", "--suite", "oracle-5.21", "--samples", "30", "--rng-seed", "3")
    b = run("verify", "preset:example-5", "--suite", "oracle-5.21", "--samples", "30", "--rng-seed", "3")
    assert a == b


def test_module_entry_point(cfg_path):
    p = cfg_path(WITT_N)
    res = subprocess.run(
        [sys.executable, "-m", "gencartan", "bracket", p, "x[(1);(0)]d1", "x[(0);(1)]d1"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert res.stdout == "(1)*x[(1);(0)]d1 + (-1)*x[(1);(1)]d1\n"

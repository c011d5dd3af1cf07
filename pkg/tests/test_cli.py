import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from conftest import permutations_of
from permgrammar.cli import main
from permgrammar.identities import REGISTRY, _Entry
from permgrammar.permstat import triangle


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_triangle_csv(capsys):
    code, out, _ = run(capsys, "triangle", "--stat", "updown", "--n", "6", "--format", "csv")
    lines = out.split()
    assert code == 0 and lines[0] == "n,k,count" and lines[-1] == "6,6,61"


def test_triangle_json(capsys):
    code, out, _ = run(capsys, "triangle", "--stat", "updownrun", "--n", "4", "--format", "json")
    assert code == 0 and [r["count"] for r in json.loads(out)["rows"]] == [1, 7, 11, 5]


def test_bound_error_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("PERMGRAMMAR_BRUTE_MAX", "5")
    code, _, err = run(capsys, "triangle", "--stat", "updown", "--n", "6")
    assert code == 2 and "recurrence" in err
    code, out, _ = run(capsys, "triangle", "--stat", "updown", "--n", "6", "--method", "recurrence")
    assert code == 0 and "61" in out


def test_derive(capsys):
    code, out, _ = run(capsys, "derive", "--grammar", "peak", "--seed", "x", "--n", "2")
    assert code == 0 and "x^3" in out


def test_label_and_decompose(capsys):
    code, out, _ = run(capsys, "label", "--scheme", "a", "--perm", "3,7,5,8,6,1,4,9,2")
    assert code == 0 and "0 y 3 x 7 x 5 x 8 x 6 y 1 y 4 x 9 x 2 a" in out
    code, out, _ = run(capsys, "decompose", "--kind", "lw", "--perm", "2,6,1,3,8,4,7,9,5")
    assert code == 0 and "2 6 1 | 3 | 8 4 | 7 9 5" in out


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--formula", "bg", "--order", "3", "--format", "json")
    assert code == 0 and json.loads(out)["order"] == 3


def test_biject_json(capsys):
    code, out, _ = run(capsys, "biject", "--map", "updown", "--perm", "1,5,4,6,7,3,9,8,2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["parent"] == [0, 1, 0, 2, 3, 3, 6, 2, 2]
    assert data["map"] == "updown" and data["perm"] == [1, 5, 4, 6, 7, 3, 9, 8, 2]


def test_biject_trace(capsys):
    code, out, _ = run(capsys, "biject", "--map", "updown", "--perm", "1,5,4,6,7,3,9,8,2", "--trace")
    assert code == 0 and "0 y 1 x 5 x 4 y 6 x 7 x 3 x 9 x 8 y 2 a" in out


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7).flatmap(permutations_of), st.sampled_from(("updown", "leftpeak", "exterior", "unified")))
def test_biject_round_trip(p, kind):
    import io
    from contextlib import redirect_stdout
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(["biject", "--map", kind, "--perm", ",".join(map(str, p)), "--format", "json"]) == 0
    parent = json.loads(buf.getvalue())["parent"]
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(["biject", "--map", kind, "--tree", ",".join(map(str, parent)), "--format", "json"]) == 0
    assert tuple(json.loads(buf.getvalue())["perm"]) == p


def test_bad_input_exit_codes(capsys):
    assert run(capsys, "label", "--scheme", "a", "--perm", "1,3")[0] == 2
    assert run(capsys, "biject", "--map", "updown", "--tree", "0,2")[0] == 2
    assert run(capsys, "biject", "--map", "updown", "--tree", "[0,")[0] == 2
    assert run(capsys, "verify", "--suite", "eq-nope")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["triangle", "--stat", "nonsense", "--n", "3"])
    assert exc.value.code == 2


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--nmax", "7", "--order", "10")
    assert code == 0 and "FAIL" not in out
    monkeypatch.setitem(REGISTRY, "broken", _Entry(lambda n, o: "n=1: 0 != 1", "test", "always fails"))
    code, out, _ = run(capsys, "verify", "--suite", "broken", "--format", "json")
    assert code == 1 and json.loads(out)[0]["witness"] == "n=1: 0 != 1"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "permgrammar", "triangle", "--stat", "updown", "--n", "3"],
                       capture_output=True, text=True, check=True)
    assert "3" in r.stdout


def test_numpy_fallback_backend():
    code = ("from permgrammar import _kernels, permstat;"
            "print(_kernels.backend(), permstat.triangle('updownrun', 7).row)")
    expected = str(triangle("updownrun", 7).row)
    env = dict(os.environ, PERMGRAMMAR_DISABLE_NUMBA="1")
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True, env=env)
    assert r.stdout.split()[0] == "numpy"
    assert expected in r.stdout

import json
import os
import subprocess
import sys

import jsonschema
import pytest

from drinfeld_tensor.cli import run, main, sample_config
from drinfeld_tensor.serialize import report_schema, validate, encode, laurent_json
from drinfeld_tensor.fields import GF
from drinfeld_tensor.laurent import Laurent

SRC = os.path.join(os.path.dirname(__file__), "..", "src")


def cfg(**kw):
    c = sample_config()
    c.update(kw)
    return c


def test_sample_config_fields():
    c = sample_config()
    assert c["p"] == 3 and c["phi"] == [1, 1]


def test_charpoly_carlitz_theta():
    code, rep = run("charpoly", cfg(phi=[1], f="theta"))
    assert code == 0
    P = rep["result"]["charpolys"][0]["P"]
    # X - theta, constant term first
    assert P == [[0, 2], [1]]
    validate(rep)


def test_schema_round_trip_charpoly():
    code, rep = run("charpoly", cfg(dmax=2))
    again = json.loads(json.dumps(rep))
    validate(again)
    assert again == rep


def test_schema_validates_regulator():
    code, rep = run("regulator", cfg(kind="alt2", precision=8))
    assert code == 0
    validate(rep)
    assert rep["precision"] == 8
    assert rep["result"]["closed_form"]["coefficients"][0] == 1


def test_lvalue_zeta_cutoff_zero():
    code, rep = run("lvalue", cfg(series="twisted_zeta", s=2, cutoff=0))
    assert code == 0
    assert rep["result"]["value"] == {"top_exponent": 0, "coefficients": [1], "precision": 12}
    assert rep["cutoff"] == 0 and rep["precision"] == 12


def test_exit_codes():
    assert run("nonsense", cfg())[0] == 2
    assert run("charpoly", cfg(f="theta^2"))[0] == 2
    assert run("charpoly", {"p": 4})[0] == 2
    assert run("charpoly", cfg(unknown_key=1))[0] == 2
    assert run("tmodule", cfg(kind="sym2", p=2, phi=[1, 1], psi=[1]))[0] == 2
    assert run("regulator", cfg(kind="sym2", phi=["theta^2", 1]))[0] == 3
    assert run("lvalue", cfg(series="goss_dual", s=0, precision=6))[0] == 3
    code, rep = run("order-check", cfg(kind="alt2", dmax=2))
    assert code == 0 and rep["status"] == "pass"


@pytest.mark.parametrize("command,extra", [
    ("irreducibles", {"dmax": 3}),
    ("mu", {"f": "theta+1", "m_max": 5}),
    ("boldmu", {"f": "theta", "bound": 2}),
    ("tmodule", {"kind": "tensor"}),
    ("explog", {"kind": "sym2", "m_max": 2}),
    ("euler-check", {"kind": "sym2", "dmax": 2, "W": 4}),
    ("special-value", {"kind": "alt2", "precision": 10}),
])
def test_commands_pass_and_validate(command, extra):
    code, rep = run(command, cfg(**extra))
    assert code == 0, rep.get("error")
    validate(rep)


def test_deterministic_across_workers():
    a = run("charpoly", cfg(dmax=2, workers=1))[1]
    b = run("charpoly", cfg(dmax=2, workers=3))[1]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_main_writes_out(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["irreducibles", "--q", "2", "--dmax", "2", "--out", str(out)])
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["result"]["by_degree"][1]["polys"] == ["theta^2+theta+1"]


def test_config_file_and_polynomial_sugar(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"p": 3, "phi": ["theta", "2"], "f": "theta + 2", "m_max": 3}))
    code = main(["mu", "--config", str(path)])
    rep = json.loads(capsys.readouterr().out)
    assert code == 0
    assert rep["config"]["phi"] == ["theta", "2"] and rep["config"]["f"] == "theta+2"


def test_module_entry_point():
    env = dict(os.environ, PYTHONPATH=SRC)
    res = subprocess.run([sys.executable, "-m", "drinfeld_tensor", "bogus"], capture_output=True, text=True, env=env)
    assert res.returncode == 2
    assert json.loads(res.stdout)["error"]["class"] == "config"


def test_encode_laurent():
    F = GF(3)
    x = Laurent(F, 1, [1, 0, 2], 4)
    assert laurent_json(x) == {"top_exponent": 1, "coefficients": [1, 0, 2], "precision": 4}
    assert encode(Laurent.zero(F, 3)) == {"top_exponent": None, "coefficients": [], "precision": 3}


def test_schema_rejects_bad_report():
    with pytest.raises(jsonschema.ValidationError):
        validate({"command": "x", "status": "maybe", "precision": None, "cutoff": None})
    assert report_schema()["$defs"]["laurent"]["required"] == ["top_exponent", "coefficients", "precision"]

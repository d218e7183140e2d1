import io
import json
import subprocess
import sys

import pytest

from singmod.cli import main, parse_poly
from singmod.shimura import bundled_path


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_gznorm():
    code, out = run("gznorm", "-d1", "39", "-d2", "4")
    assert code == 0
    assert out.splitlines()[0] == "3^12 * 7^8 * 19^4 * 23^2"
    code, out = run("--expanded", "gznorm", "-d1", "39", "-d2", "4")
    assert out.splitlines()[0] == str(3**12 * 7**8 * 19**4 * 23**2)


def test_classnum():
    code, out = run("classnum", "-d", "39")
    assert out.splitlines() == ["h=4 omega=2", "(1, 1, 10)", "(2, -1, 5)", "(2, 1, 5)", "(3, 3, 4)"]


def test_minpoly_classical():
    code, out = run("minpoly", "classical", "-d", "39")
    lines = out.splitlines()
    assert lines[0] == "x^4 + 331531596*x^3 - 429878960946*x^2 + 109873509788637459*x + 20919104368024767633"
    assert lines[1] == (
        "x^4 + (2^2 * 3^3 * 11 * 29 * 9623)*x^3 - (2 * 3^6 * 41 * 1303 * 5519)*x^2"
        " + (3^12 * 103 * 2007246533)*x + 3^15 * 17^3 * 23^3 * 29^3"
    )
    assert lines[2] == "signs=(+,+,-,-,-)"


def test_minpoly_shimura_default_file():
    code, out = run("minpoly", "shimura")
    lines = out.splitlines()
    assert "/14357588953446649)*x^2" in lines[0]
    assert lines[-1] == "signs=(-,+,-,+)"
    assert run("minpoly", "shimura", "--file", str(bundled_path()))[1] == out


def test_abc_commands():
    assert run("abc", "alpha", "-a", "1", "-b", "80")[1] == "alpha(1,80,81)=1.292030\n"
    code, out = run("abc", "gamma", "--poly", "w^2 - w - 3", "--triple", "w, (w+1)^10*(w-1), -2^9*(w+1)^5")
    assert code == 0 and out.startswith("gamma=2.029229")
    code, out = run("abc", "median", "--bound", "100")
    assert out.startswith("median=0.4298")
    assert "alpha(1,80,81)" in out


def test_abc_gamma_minpoly_inputs(tmp_path):
    code, out = run("abc", "gamma", "--minpoly", str(bundled_path()))
    assert code == 0 and "disc=-2^2 * 61" in out
    p = tmp_path / "m.txt"
    p.write_text("x^4 + 331531596*x^3 - 429878960946*x^2 + 109873509788637459*x + 20919104368024767633\n")
    code, out2 = run("abc", "gamma", "--minpoly", str(p), "--curve", "classical")
    assert code == 0 and "disc=-3 * 13^2" in out2


def test_abc_sweep(tmp_path):
    (tmp_path / "s244.json").write_text(bundled_path().read_text())
    (tmp_path / "classical.json").write_text(json.dumps({"curve": "classical", "discriminants": [39, 4, 95]}))
    csv_path = tmp_path / "out.csv"
    code, _ = run("abc", "sweep", "--input", str(tmp_path), "--out", str(csv_path))
    assert code == 0
    data = csv_path.read_bytes()
    assert b"\r" not in data
    lines = data.decode().splitlines()
    assert lines[0] == "discriminant,curve,degree,gamma,lnH,lnRad,lnDisc,error"
    assert any(l.startswith("39,classical,4,") for l in lines)
    assert any(l.startswith("244,shimura6,3,") for l in lines)
    assert lines[-1].startswith("95,classical,,") and "coprime" in lines[-1]


def test_validate_data(tmp_path):
    code, out = run("validate-data", str(bundled_path()))
    assert code == 0 and out == "valid: 4 points, degree 3\n"
    doc = json.loads(bundled_path().read_text())
    doc["points"][1]["zeta"] = "0"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out = run("validate-data", str(bad))
    assert code == 1 and "duplicate abscissa 0" in out


def test_domain_errors_exit_1(capsys):
    assert run("gznorm", "-d1", "39", "-d2", "3")[0] == 1
    assert "not coprime" in capsys.readouterr().err
    assert run("abc", "gamma", "--minpoly", "x - 1728")[0] == 1
    assert run("minpoly", "classical", "-d", "95")[0] == 1


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["gznorm", "-d1", "39"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["classnum", "-d", "39", "--bogus"])
    assert exc.value.code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "singmod", "classnum", "-d", "23"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("h=3 omega=2")
    r = subprocess.run([sys.executable, "-m", "singmod"], capture_output=True, text=True)
    assert r.returncode == 2 and "usage" in r.stderr


def test_deterministic():
    a = run("--seed", "3", "abc", "gamma", "--minpoly", str(bundled_path()))
    b = run("abc", "gamma", "--minpoly", str(bundled_path()), "--seed", "3")
    assert a == b


def test_parse_poly():
    assert parse_poly("x^2 - 1/2")[0] == [-0.5, 0, 1]
    assert parse_poly("2w + 3")[1] == "w"
    from singmod.exact import DomainError

    with pytest.raises(DomainError):
        parse_poly("x*y")
    with pytest.raises(DomainError):
        parse_poly("sqrt(2)*x")

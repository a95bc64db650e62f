import json
import subprocess
import sys

import pytest

from plethstat.cli import main
from plethstat.exactalg import MultiPoly, poly_from_json

t, y, z = (MultiPoly.var(v) for v in "tyz")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_oracle_seven_cycles(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "cyclic", "--n", "7", "--profile", "pkdes")
    assert code == 0
    obj = json.loads(out)
    assert (obj["n"], obj["family"], obj["profile"]) == (7, "cyclic", "pkdes")
    p = poly_from_json(obj)
    assert p.coefficient(y=1, t=2) == 1 and p.coefficient(y=2, t=2) == 17
    assert p.coefficient(y=4, t=4) == 39
    assert p.evaluate({"y": 1, "t": 1}) == 720


def test_oracle_csv(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "involutions", "--n", "3",
                       "--profile", "des,fix", "--format", "csv")
    assert code == 0
    assert out == "t,z,coeff\n1,3,1/1\n2,1,2/1\n3,1,1/1\n"


def test_oracle_single_point(capsys):
    code, out, _ = run(capsys, "oracle", "--family", "all", "--n", "1", "--profile", "pkdes")
    assert code == 0 and poly_from_json(json.loads(out)) == y * t


def test_formula_cycpkdes(capsys):
    code, out, _ = run(capsys, "formula", "--id", "thm:cycpkdes", "--n", "7")
    obj = json.loads(out)
    assert code == 0 and obj["id"] == "thm:cycpkdes" and obj["t_prec"] == 11
    p = poly_from_json(obj["poly"])
    assert p.coefficient(y=3, t=5) == 102


@pytest.mark.parametrize("fid, n, expected", [("cor:cycpk-b", 3, 2 * t ** 2),
                                              ("eulerian:B", 2, 1 + 6 * t + t ** 2)])
def test_formula_small(capsys, fid, n, expected):
    code, out, _ = run(capsys, "formula", "--id", fid, "--n", str(n))
    assert code == 0 and poly_from_json(json.loads(out)["poly"]) == expected


def test_unknown_formula_lists_ids(capsys):
    code, _, err = run(capsys, "formula", "--id", "thm:nope", "--n", "3")
    assert code == 2 and "thm:cycpkdes" in err


def test_cap_and_unsafe(capsys):
    code, _, err = run(capsys, "oracle", "--n", "10")
    assert code == 2 and "cap" in err
    code, _, err = run(capsys, "oracle", "--n", "11", "--unsafe-n")
    assert code == 2


def test_bad_input_exit_codes(capsys):
    assert run(capsys, "oracle", "--n", "3", "--profile", "nonsense")[0] == 2
    assert run(capsys, "oracle", "--n", "3", "--family", "fix_count")[0] == 2
    assert run(capsys, "oracle", "--profile", "des")[0] == 2
    assert run(capsys, "verify", "--n-max", "0")[0] == 2
    assert run(capsys, "verify", "--threads", "0")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--n", "3", "--family", "cyclic")
    assert code == 0
    assert json.loads(out)["rows"] == [{"composition": [1, 2], "count": 1},
                                       {"composition": [2, 1], "count": 1}]
    code, out, _ = run(capsys, "table", "--n", "2", "--family", "involutions", "--format", "csv")
    assert out == "composition,count\n2,1\n1-1,1\n"


def test_verify_stream(capsys):
    code, out, err = run(capsys, "verify", "--suite", "cyclic", "--n-max", "4", "--k-max", "3")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines and all(r["status"] == "pass" for r in lines)
    assert {r["n"] for r in lines} == {2, 3, 4}
    assert "0 failed" in err


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "desmaj", "--n-max", "2", "--format", "csv")
    rows = out.splitlines()
    assert code == 0 and rows[0] == "id,n,k_max,status,witness,ms"
    assert all(",pass,," in r for r in rows[1:])


def test_verify_failure_exit_code(capsys, monkeypatch):
    from plethstat.formulas import cyclic
    monkeypatch.setattr(cyclic, "cycpk_b_poly", lambda n: t)
    code, _, err = run(capsys, "verify", "--suite", "cyclic", "--n-max", "3", "--k-max", "2")
    assert code == 1 and "FAIL cor:cycpk-b n=2" in err


def test_config_file_and_flag_override(capsys, tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"family": "cyclic", "profile": "des", "n": 4}))
    code, out, _ = run(capsys, "oracle", "--config", str(cfg))
    assert code == 0 and json.loads(out)["family"] == "cyclic" and json.loads(out)["n"] == 4
    code, out, _ = run(capsys, "oracle", "--config", str(cfg), "--n", "3")
    assert poly_from_json(json.loads(out)) == 2 * t ** 2


def test_config_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"colour": "red"}))
    assert run(capsys, "oracle", "--config", str(bad))[0] == 2
    assert run(capsys, "oracle", "--config", str(tmp_path / "missing.json"))[0] == 2
    bad.write_text("[1, 2]")
    assert run(capsys, "oracle", "--config", str(bad))[0] == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / "dist.json"
    code, out, _ = run(capsys, "oracle", "--n", "3", "--output", str(target))
    assert code == 0 and out == ""
    assert poly_from_json(json.loads(target.read_text())) == t + 4 * t ** 2 + t ** 3


def test_output_is_deterministic(capsys, monkeypatch):
    # --threads writes the environment variable; let monkeypatch restore it
    monkeypatch.setenv("PERMSTAT_THREADS", "1")
    first = run(capsys, "oracle", "--n", "6", "--profile", "lpkdes,fix")[1]
    second = run(capsys, "oracle", "--n", "6", "--profile", "lpkdes,fix", "--threads", "2")[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "plethstat", "formula", "--id", "eulerian:A",
                           "--n", "3", "--format", "csv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "t,coeff\n1,1/1\n2,4/1\n3,1/1\n"

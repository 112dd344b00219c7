import json

from rm3.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_zeta_json(capsys):
    code, out, _ = run(capsys, "zeta", "--p", "5", "--threads", "1")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1
    assert data["counts"] == [7, 51, 115]
    assert data["numerator"] == [1, 1, 13, 9, 65, 25, 125]


def test_zeta_then_factor_via_file(capsys, tmp_path):
    path = tmp_path / "h5.json"
    assert main(["zeta", "--p", "5", "--output", str(path)]) == 0
    code, out, _ = run(capsys, "rm-factor", "--from-json", str(path))
    assert code == 0 and json.loads(out)["alpha"] == [-1, 1, 1]


def test_rm_factor_inline_and_failure(capsys):
    code, out, _ = run(capsys, "rm-factor", "--p", "13", "--h", "10,70,289")
    assert code == 0 and json.loads(out)["alpha_text"] == "2 + t + t^2"
    code, _, err = run(capsys, "rm-factor", "--p", "5", "--h", "0,15,1")
    assert code == 1 and "error" in err
    code, _, _ = run(capsys, "rm-factor", "--p", "5", "--h", "1,2")
    assert code == 2


def test_count(capsys):
    assert run(capsys, "count", "--p", "13", "--nu", "2")[1].strip() == "210"
    assert run(capsys, "count", "--p", "5", "--naive")[1].strip() == "7"


def test_exit_codes(capsys):
    assert run(capsys, "count", "--p", "8")[0] == 2
    assert run(capsys, "count", "--p", "7")[0] == 3
    assert run(capsys, "family", "show", "--t", "0")[0] == 3
    assert run(capsys, "count", "--p", "5", "--threads", "0")[0] == 2
    assert run(capsys, "count", "--p", "5", "--curve", "/nonexistent")[0] == 2


def test_geom(capsys):
    code, out, _ = run(capsys, "geom", "ramify", "--t", "-2", "--p", "13")
    assert code == 0 and out.count("{2,2,2,1}") == 4
    assert "singular" in run(capsys, "geom", "smooth", "--p", "73")[1]
    assert "smooth" in run(capsys, "geom", "smooth", "--p", "89")[1]


def test_family_show_and_hyper(capsys):
    code, out, _ = run(capsys, "family", "show", "--s", "0", "--t", "-2")
    assert code == 0 and "genus 3" in out
    code, out, _ = run(capsys, "family", "hyper", "--s", "0", "--t", "-2")
    assert code == 0 and "y^2" in out
    code, out, _ = run(capsys, "family", "show", "--symbolic")
    assert code == 0 and "s" in out and "t" in out


def test_verify_table_small(capsys):
    code, out, _ = run(capsys, "verify-table", "--pmax", "13")
    assert code == 0
    assert [l.split()[1] for l in out.splitlines() if l.startswith("PASS")] == [
        "p=5", "p=11", "p=13"]
    code, out, _ = run(capsys, "verify-table", "--pmax", "4", "--json")
    data = json.loads(out)
    assert code == 0 and not [r for r in data["rows"] if r["status"] == "PASS"]


def test_verify_table_fixture_mismatch(capsys, tmp_path, monkeypatch):
    (tmp_path / "table1.tsv").write_text("p\tu\tv\tw\ttrace\n5\t0\t1\t0\t-1\n")
    (tmp_path / "quartic.txt").write_text(open(_shipped("quartic.txt")).read())
    monkeypatch.setenv("RM3_FIXTURES", str(tmp_path))
    code, out, _ = run(capsys, "verify-table", "--pmax", "11")
    assert code == 1
    assert "FAIL    p=5" in out and "UNKNOWN p=11" in out


def _shipped(name):
    from importlib import resources
    return str(resources.files("rm3") / "data" / name)


def test_verify_identities_modes(capsys):
    code, out, _ = run(capsys, "verify-identities", "--t", "0", "--t", "-2")
    assert code == 0 and "SKIP" in out and "FAIL" not in out.split("\n")[-2]
    code, out, _ = run(capsys, "verify-identities", "--perturb-w", "--json")
    data = json.loads(out)
    assert code == 1 and not data["ok"]

import json

import pytest

from twouniform.cli import EXIT_IO, EXIT_OK, EXIT_VIOLATION, RunConfig, main, parse_selection


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_lists_twenty(capsys):
    code, out, _ = _run(capsys, "catalog")
    rows = out.splitlines()[1:]
    assert code == EXIT_OK and len(rows) == 20
    assert rows[8].split()[0] == "9" and rows[8].split()[-2] == "6"
    assert "[3,4,6,4;4,6,12]" in rows[19]
    assert all(r.endswith("yes") for r in rows)


def test_catalog_dump_roundtrip(capsys):
    from twouniform.catalog import catalog, loads

    code, out, _ = _run(capsys, "catalog", "--dump", "15")
    assert code == EXIT_OK
    t = loads(out)
    assert t.id == 15 and len(t.sites) == len(catalog(15).sites)


def test_verify_single_tiling(capsys, tmp_path):
    code, out, _ = _run(capsys, "verify", "--tilings", "4", "--max-index", "4", "--out", str(tmp_path))
    assert code == EXIT_OK
    rows = json.loads((tmp_path / "report.json").read_text())
    assert {r["verdict"] for r in rows} <= {"pass", "excluded"}
    assert all(r["m"] == 2 for r in rows if r["polyhedral"])
    assert any(r["polyhedral"] for r in rows)
    assert set(rows[0]) == {"tiling", "sublattice", "V", "E", "F", "polyhedral", "aut_order", "m", "bound", "verdict"}
    csv_lines = (tmp_path / "report.csv").read_text().splitlines()
    assert len(csv_lines) == len(rows) + 1


def test_verify_reports_violation(capsys, tmp_path):
    code, out, _ = _run(capsys, "verify", "--tilings", "16", "--max-index", "6", "--out", str(tmp_path))
    assert code == EXIT_VIOLATION
    assert "K16 lattice" in out


@pytest.mark.parametrize("sel", ["", "0", "21", "3..1"])
def test_bad_selection_is_config_error(capsys, tmp_path, sel):
    code, _, err = _run(capsys, "verify", "--tilings", sel, "--out", str(tmp_path))
    assert code == EXIT_IO and "config error" in err


def test_unwritable_output(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _, err = _run(capsys, "verify", "--tilings", "3", "--max-index", "1", "--out", str(blocker / "sub"))
    assert code == EXIT_IO


def test_parse_selection():
    assert parse_selection("1..3,15") == [1, 2, 3, 15]
    with pytest.raises(ValueError):
        RunConfig(tilings=[])


def test_export_is_deterministic(capsys, tmp_path):
    args = ["export", "--tiling", "12", "--lattice", "2,1,3", "--formats", "dot,off,json,tiling"]
    assert main(args + ["--out", str(tmp_path / "a")]) == EXIT_OK
    assert main(args + ["--out", str(tmp_path / "b")]) == EXIT_OK
    capsys.readouterr()
    for f in ("dot", "off", "json", "tiling"):
        a = (tmp_path / "a" / f"K12_2_1_3.{f}").read_bytes()
        assert a == (tmp_path / "b" / f"K12_2_1_3.{f}").read_bytes()
    off = (tmp_path / "a" / "K12_2_1_3.off").read_text().splitlines()
    assert off[1].split()[0] == str(3 * 6)
    dot = (tmp_path / "a" / "K12_2_1_3.dot").read_text()
    assert dot.count("[label=") == 18


def test_export_bad_lattice(capsys, tmp_path):
    code, _, err = _run(capsys, "export", "--tiling", "3", "--lattice", "2,5,3", "--out", str(tmp_path))
    assert code == EXIT_IO


def test_km_radius_too_small(capsys):
    code, _, err = _run(capsys, "km", "--m", "2", "--radius", "2")
    assert code == EXIT_IO and "radius" in err


def test_km_runs_differ(capsys):
    _, out2, _ = _run(capsys, "km", "--m", "2", "--radius", "8")
    _, out3, _ = _run(capsys, "km", "--m", "3", "--radius", "11")
    assert "interior types: 2" in out2 and "interior types: 2" in out3
    assert "column run: 2" in out2 and "column run: 3" in out3


def test_verify_is_deterministic(capsys, tmp_path):
    for sub in ("a", "b"):
        assert main(["verify", "--tilings", "3,15", "--max-index", "3", "--out", str(tmp_path / sub)]) == EXIT_OK
    capsys.readouterr()
    for f in ("report.json", "report.csv"):
        assert (tmp_path / "a" / f).read_bytes() == (tmp_path / "b" / f).read_bytes()

import json
import subprocess
import sys

import numpy as np
import pytest

from plasmonio import cli, io

COLUMNS = {
    "spectrum": "omega_norm,re_t,im_t,re_r,im_r,alpha",
    "thermal": "omega_meV,n_out,planck_Tel,planck_Tph,alpha",
    "dispersion": "k_norm,omega_norm,weight",
    "transitions": "i,f,w_meV,dN_cm2,intJ",
    "modes": "n,omega_meV,weight,gamma0_meV",
    "absorption": "omega_meV,A_sp,A_msp",
    "gamma": "theta_deg,gamma_meV",
    "critical_angle": "Ns_cm2,theta_c_deg",
    "halfmax": "ratio,omega_minus,omega_plus,markov_minus,markov_plus",
}


@pytest.fixture
def well_json(tmp_path):
    path = tmp_path / "well.json"
    path.write_text(json.dumps({"well_nm": 15, "Ns_cm2": 1.5e13}))
    return path


def columns_of(path):
    lines = path.read_text().splitlines()
    body = [ln for ln in lines if not ln.startswith("#")]
    return lines, body[0]


def test_spectrum_csv(tmp_path):
    out = tmp_path / "o"
    assert cli.main(["spectrum", "--g", "15", "--Q", "15", "--variant", "full", "--out", str(out)]) == 0
    lines, header = columns_of(out / "spectrum.csv")
    assert lines[0].startswith("# plasmonio 0.1.0")
    assert "# g = 15.0" in lines and "# variant = full" in lines
    assert header == COLUMNS["spectrum"]
    data = np.genfromtxt(out / "spectrum.csv", delimiter=",", comments="#", skip_header=1)
    data = data[~np.isnan(data).all(axis=1)]
    assert data.shape == (4001, 6)
    t2 = data[:, 1] ** 2 + data[:, 2] ** 2
    r2 = data[:, 3] ** 2 + data[:, 4] ** 2
    np.testing.assert_allclose(t2 + r2 + data[:, 5], 1.0, atol=1e-10)


@pytest.mark.parametrize("argv,names", [
    (["thermal", "--mirror", "--Tel", "500"], ["thermal"]),
    (["dispersion", "--gamma0", "1/30", "--gamma", "1/15", "--points", "64"], ["dispersion"]),
    (["halfmax", "--points", "5"], ["halfmax"]),
])
def test_abstract_commands(tmp_path, argv, names):
    assert cli.main(argv + ["--out", str(tmp_path)]) == 0
    for name in names:
        assert columns_of(tmp_path / f"{name}.csv")[1] == COLUMNS[name]


def test_dispersion_fraction_flags(tmp_path):
    cli.main(["dispersion", "--gamma0", "1/30", "--gamma", "1/15", "--points", "32", "--out", str(tmp_path)])
    lines = (tmp_path / "dispersion.csv").read_text().splitlines()
    assert f"# gamma0 = {1 / 30}" in lines and f"# gamma = {1 / 15}" in lines
    assert "# ridges = 2" in lines


def test_well_commands(tmp_path, well_json):
    for cmd in (["subbands"], ["plasmons"], ["gamma"], ["critical-angle", "--Ns", "1e13", "3e13"]):
        assert cli.main(cmd + ["--config", str(well_json), "--out", str(tmp_path)]) == 0
    for name in ("transitions", "modes", "absorption", "gamma", "critical_angle"):
        assert columns_of(tmp_path / f"{name}.csv")[1] == COLUMNS[name]
    _, header = columns_of(tmp_path / "subbands.csv")
    assert header.startswith("z_nm,psi_1,psi_2,psi_3")


def test_json_format(tmp_path):
    assert cli.main(["peaks", "--points", "5", "--format", "json", "--out", str(tmp_path)]) == 0
    doc = json.loads((tmp_path / "peaks.json").read_text())
    assert doc["columns"][0] == "g" and len(doc["rows"]) == 5
    assert doc["parameters"]["Q"] == 15.0


def test_svg_written(tmp_path):
    assert cli.main(["spectrum", "--points", "101", "--svg", "--out", str(tmp_path)]) == 0
    text = (tmp_path / "spectrum.svg").read_text()
    assert text.lstrip().startswith("<?xml") and "<svg" in text


def test_invalid_variant_writes_nothing(tmp_path, capsys):
    out = tmp_path / "o"
    assert cli.main(["spectrum", "--variant", "bogus", "--out", str(out)]) == 2
    assert not out.exists()


@pytest.mark.parametrize("doc,field", [
    ({"well_nm": -1, "Ns_cm2": 1e12}, "well_nm"),
    ({"Ns_cm2": 1e12}, "(root)"),
    ({"well_nm": 10, "Ns_cm2": 1e12, "colour": "red"}, "(root)"),
    ({"well_nm": 10, "Ns_cm2": 1e12, "grid_points": 10.5}, "grid_points"),
])
def test_schema_violation(tmp_path, capsys, doc, field):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps(doc))
    out = tmp_path / "o"
    assert cli.main(["subbands", "--config", str(cfg), "--out", str(out)]) == 2
    assert f"field {field}" in capsys.readouterr().err
    assert not out.exists()


def test_malformed_json_reports_line(tmp_path, capsys):
    cfg = tmp_path / "broken.json"
    cfg.write_text('{"well_nm": 15,\n "Ns_cm2": }')
    assert cli.main(["subbands", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 2
    assert "broken.json:2:" in capsys.readouterr().err


def test_missing_config(tmp_path):
    assert cli.main(["subbands", "--out", str(tmp_path / "o")]) == 2


def test_physics_error_exit(tmp_path, capsys):
    cfg = tmp_path / "coarse.json"
    cfg.write_text(json.dumps({"well_nm": 15, "Ns_cm2": 1e12, "grid_points": 20}))
    out = tmp_path / "o"
    assert cli.main(["subbands", "--config", str(cfg), "--out", str(out)]) == 3
    assert "GridTooCoarse" in capsys.readouterr().err
    assert not out.exists()


def test_bad_numbers_are_usage_errors(tmp_path):
    assert cli.main(["spectrum", "--g", "-1", "--out", str(tmp_path / "a")]) == 2
    assert cli.main(["spectrum", "--theta-deg", "95", "--out", str(tmp_path / "b")]) == 2
    assert cli.main(["dispersion", "--gamma0", "1/0", "--out", str(tmp_path / "c")]) == 2


def test_byte_identical_reruns(tmp_path, well_json):
    for run in ("a", "b"):
        cli.main(["plasmons", "--config", str(well_json), "--out", str(tmp_path / run)])
        cli.main(["thermal", "--svg", "--out", str(tmp_path / run)])
    for name in ("modes.csv", "absorption.csv", "thermal.csv", "thermal.svg"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_help_lists_flags(capsys):
    assert cli.main(["spectrum", "--help"]) == 0
    text = capsys.readouterr().out
    for flag in ("--g", "--Q", "--theta-deg", "--variant"):
        assert flag in text


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "plasmonio", "peaks", "--points", "3", "--out", str(tmp_path)],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert (tmp_path / "peaks.csv").exists()


def test_config_defaults_and_profile():
    cfg = io.parse_well_config('{"well_nm": 12, "Ns_cm2": 1e12}')
    assert cfg["barrier_meV"] == 520.0 and cfg["grid_points"] == 1024
    profile = io.profile_from_config(cfg)
    assert profile.sheet_density == 1e12
    assert profile.potential.max() == 520.0


def test_csv_format_is_stable():
    text = io.format_csv(["a", "n"], [(0.1, 3), (1 / 3, 4)], {"z": 1, "a": 2})
    assert text == "# plasmonio 0.1.0\n# a = 2\n# z = 1\na,n\n0.1,3\n0.333333333333,4\n"

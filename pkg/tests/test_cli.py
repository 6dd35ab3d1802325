import json
import math

import numpy as np
import pytest

from quakebend import cli


TORUS_SCENARIO = {
    "version": 1,
    "surface": {"g": 1, "r": 1},
    "pants": {"num_pants": 1, "interior": [[[0, 0], [0, 1]]],
              "boundary": [[0, 2]]},
    "fn": {"l": [1.0, 2.0], "t": [0.3]},
    "lamination": {"family": "multicurve", "weights": [0.5]},
}

# l_C = 2, I_C = 1, spiraling +1 (negative shears make sigma positive)
FLOW_SCENARIO = {
    "version": 1,
    "surface": {"g": 1, "r": 1},
    "shear": {"tri": {"num_triangles": 2,
                      "gluing": [[[0, 0], [1, 0]], [[0, 1], [1, 1]],
                                 [[0, 2], [1, 2]]]},
              "s": [-1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0]},
    "lamination": {"family": "triangulation",
                   "weights": [1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0]},
    "times": [0.0, 1.0, 2.0, 3.0],
}


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line]


def write_scenario(tmp_path, data, name="sc.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


class TestClassify:
    def test_hyperbolic(self, capsys):
        code, recs = run(capsys, ["classify", "--matrix",
                                  f"{math.e},0,0,{1/math.e}"])
        assert code == 0
        assert recs[0]["kind"] == "hyperbolic"
        assert recs[0]["translation_length"] == pytest.approx(2.0)

    def test_bad_matrix_exit_code(self, capsys):
        code, _ = run(capsys, ["classify", "--matrix", "1,1,1,1"])
        assert code == cli.EXIT_DOMAIN

    def test_parse_error_exit_code(self, capsys):
        code, _ = run(capsys, ["classify", "--matrix", "1,2,3"])
        assert code == cli.EXIT_PARSE


class TestScenarios:
    def test_holonomy_lengths(self, tmp_path, capsys):
        path = write_scenario(tmp_path, TORUS_SCENARIO)
        code, recs = run(capsys, ["holonomy", path])
        assert code == 0
        by_curve = {r["curve"]: r for r in recs if "curve" in r}
        assert by_curve["C0"]["length"] == pytest.approx(1.0, abs=1e-9)
        assert by_curve["z0"]["length"] == pytest.approx(2.0, abs=1e-9)

    def test_missing_file(self, capsys):
        code, _ = run(capsys, ["holonomy", "/nonexistent.json"])
        assert code == cli.EXIT_PARSE

    def test_bad_version(self, tmp_path, capsys):
        path = write_scenario(tmp_path, {"version": 99})
        code, _ = run(capsys, ["holonomy", path])
        assert code == cli.EXIT_PARSE

    def test_determinism(self, tmp_path, capsys):
        path = write_scenario(tmp_path, TORUS_SCENARIO)
        cli.main(["quake", path, "--depth", "6"])
        out1 = capsys.readouterr().out
        cli.main(["quake", path, "--depth", "6"])
        out2 = capsys.readouterr().out
        assert out1 == out2

    def test_spectrum(self, tmp_path, capsys):
        path = write_scenario(tmp_path, FLOW_SCENARIO)
        code, recs = run(capsys, ["spectrum", path])
        assert code == 0
        p0 = next(r for r in recs if r.get("puncture") == 0)
        assert p0["I"] == pytest.approx(1.0)


class TestFlow:
    def test_ray_quake_bounce(self, tmp_path, capsys):
        # l(0)=2... here l(0)=2? shears sum to l=2: s=1/3 each -> l=2, I=1
        path = write_scenario(tmp_path, FLOW_SCENARIO)
        code, recs = run(capsys, ["flow", path])
        assert code == 0
        ls = [r["l"][0] for r in recs]
        assert ls == pytest.approx([2.0, 1.0, 0.0, 1.0])
        sig = [r["sigma"][0] for r in recs]
        assert sig[0] == 1 and sig[-1] == -1
        assert recs[2]["cusp"][0] is True


class TestBtz:
    def test_static(self, capsys):
        code, recs = run(capsys, ["btz", "--rp", "1", "--rm", "0"])
        assert code == 0
        assert recs[0]["M"] == 1.0 and recs[0]["J"] == 0.0

    def test_bad_ordering(self, capsys):
        code, _ = run(capsys, ["btz", "--rp", "0.5", "--rm", "0.7"])
        assert code == cli.EXIT_DOMAIN


class TestVerify:
    @pytest.mark.parametrize("suite", ["quake", "wick", "ds", "btz"])
    def test_suites_pass(self, capsys, suite):
        code, recs = run(capsys, ["verify", "--suite", suite])
        assert code == 0
        assert all(r["ok"] for r in recs)

    def test_wick_residual_bound(self, capsys):
        code, recs = run(capsys, ["verify", "--suite", "wick"])
        assert code == 0
        assert recs[0]["residual"] < 1e-4

    def test_failure_exit_code(self, capsys):
        code, _ = run(capsys, ["verify", "--suite", "wick", "--tol", "1e-30"])
        assert code == cli.EXIT_VERIFY


class TestWickCommand:
    def test_grid_records(self, capsys):
        code, recs = run(capsys, ["wick", "--grid",
                                  "T=1.5:2.5:2,u=0:0.5:2,zeta=-0.4:0.4:2"])
        assert code == 0
        assert recs[-1]["max_curvature_residual"] < 1e-4
        pt = recs[0]
        v = np.array(pt["image"])
        assert v @ np.diag([-1., 1., 1., 1.]) @ v == pytest.approx(-1.0, abs=1e-9)

    def test_mesh_output(self, tmp_path, capsys):
        mesh = tmp_path / "level.off"
        code, recs = run(capsys, ["wick", "--grid",
                                  "T=1.5:1.5:1,u=0:1:3,zeta=-0.5:0.5:3",
                                  "--mesh-out", str(mesh)])
        assert code == 0
        lines = mesh.read_text().splitlines()
        assert lines[0] == "OFF"
        nv, nf, _ = map(int, lines[1].split())
        assert nv == 9 and nf == 4


class TestBendCommand:
    def test_mesh(self, tmp_path, capsys):
        path = write_scenario(tmp_path, TORUS_SCENARIO)
        mesh = tmp_path / "bent.off"
        code, recs = run(capsys, ["bend", path, "--depth", "5",
                                  "--grid", "x=-0.5:0.5:3,y=0.7:1.5:3",
                                  "--mesh-out", str(mesh)])
        assert code == 0
        assert mesh.read_text().startswith("OFF")


class TestBlackholeCommand:
    def test_records(self, tmp_path, capsys):
        path = write_scenario(tmp_path, TORUS_SCENARIO)
        code, recs = run(capsys, ["blackhole", path, "--depth", "6"])
        assert code == 0
        p0 = next(r for r in recs if r.get("puncture") == 0)
        assert not p0["degenerate"]
        assert p0["M"] + p0["J"] == pytest.approx(p0["size"] ** 2, abs=1e-9)
        assert p0["M"] - p0["J"] == pytest.approx(p0["momentum"] ** 2, abs=1e-9)
        count = next(r["meridians"] for r in recs if "meridians" in r)
        assert count == 2  # one non-degenerate rectangle

import json
import subprocess
import sys

import pytest

from conftest import DATA

from fatgraph_reembed.cli import run

FIG1 = str(DATA / "fig1.emb")
B2 = str(DATA / "b2.emb")
B2_PLANAR = str(DATA / "b2_planar.emb")


def test_genus():
    res = run(["genus", FIG1])
    assert res.exit_code == 0
    assert res.stdout == "faces: 1, genus: 1\n"


def test_genus_json():
    obj = json.loads(run(["genus", FIG1, "--json"]).stdout)
    assert obj["faces"] == 1 and obj["genus"] == 1 and obj["betti"] == 2


def test_reembed_both():
    res = run(["reembed", FIG1, "--vertex", "B", "--method", "both"])
    assert res.exit_code == 0
    lines = res.stdout.splitlines()
    assert "-1\t3\t0" in lines
    assert "0\t3\t1" in lines
    assert lines[-1] == "# oracle and formula agree"


def test_reembed_json_matches_text():
    text = run(["reembed", FIG1, "--vertex", "B"]).stdout
    obj = json.loads(run(["reembed", FIG1, "--vertex", "B", "--json"]).stdout)[0]
    assert obj["distribution"] == {"-1": "3", "0": "3"}
    for dg, count in obj["distribution"].items():
        assert any(line.startswith(f"{dg}\t{count}\t") for line in text.splitlines())


def test_reembed_all_vertices():
    out = run(["reembed", FIG1]).stdout
    assert out.count("# vertex") == 3


def test_count_pk():
    res = run(["count-pk", "--lambda", "3,1", "--method", "both"])
    assert res.exit_code == 0
    assert res.stdout.splitlines()[:2] == ["1\t3", "3\t3"]
    obj = json.loads(run(["count-pk", "--lambda", "3,1", "--json"]).stdout)
    assert obj["counts"] == {"1": "3", "3": "3"}


def test_count_pk_big_integers_in_full():
    res = run(["count-pk", "--lambda", "21", "--method", "formula", "--json"])
    counts = json.loads(res.stdout)["counts"]
    assert counts["1"] == str(2 * 2432902008176640000 // 22)


def test_count_pk_needs_lambda():
    assert run(["count-pk"]).exit_code == 2
    assert run(["count-pk", "--lambda", "3,x"]).exit_code == 2


def test_check_min_genus():
    res = run(["check-min-genus", FIG1])
    assert res.exit_code == 1
    assert "vertex B: 2+1 ≠ 5" in res.stdout
    assert res.stdout.splitlines()[-1].startswith("NOT minimum genus")
    assert run(["check-min-genus", str(DATA / "fig1_planar.emb")]).exit_code == 0


def test_check_max_genus():
    res = run(["check-max-genus", B2_PLANAR])
    assert res.exit_code == 1
    assert "q=3" in res.stdout
    assert run(["check-max-genus", B2]).exit_code == 0


def test_range():
    out = run(["range", B2_PLANAR]).stdout
    assert out.splitlines()[1] == "v\t0\t1\t0\t1"
    # A and B of fig1 share the only face
    assert run(["range", FIG1, "--vertex", "A", "--vertex", "B"]).exit_code == 2


def test_faces_and_localize():
    out = run(["faces", FIG1]).stdout
    assert "(1 2 3 4 5 6 7 8)" in out
    out = run(["localize", FIG1, "--vertex", "B"]).stdout
    assert "[2] 4 6   8\n  6 8 4 [2]" in out


def test_oneface_bound():
    out = run(["oneface-bound", B2]).stdout
    assert "lower bound on P(one face): 1/3" in out
    assert "2 of 6" in out
    obj = json.loads(run(["oneface-bound", FIG1, "--json"]).stdout)
    assert obj["bound"] == "4/45"
    assert obj["one_face"] == "6"


def test_enumerate():
    assert run(["enumerate", FIG1]).stdout.splitlines()[:3] == ["genus\tcount", "0\t6", "1\t6"]


def test_write_round_trip(tmp_path):
    text = run(["write", FIG1]).stdout
    path = tmp_path / "copy.emb"
    path.write_text(text)
    for cmd in (["genus"], ["reembed"], ["check-min-genus"], ["enumerate"]):
        assert run(cmd + [str(path)]).stdout == run(cmd + [FIG1]).stdout


def test_deterministic():
    args = ["oneface-bound", FIG1, "--json"]
    assert run(args) == run(args)


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["genus"],
        ["genus", "/nonexistent.emb"],
        ["reembed", FIG1, "--vertex", "Z"],
        ["genus", FIG1, "--unknown-flag"],
    ],
)
def test_input_errors(argv):
    res = run(argv)
    assert res.exit_code == 2
    assert res.stderr.startswith("error:")


def test_parse_error_reports_line(tmp_path):
    path = tmp_path / "bad.emb"
    path.write_text("vertices:\nA: 1 2\nedges:\n1 3\n")
    res = run(["genus", str(path)])
    assert res.exit_code == 2
    assert "line 4" in res.stderr


def test_cap_exceeded_and_force(monkeypatch):
    b5 = str(DATA / "b5.emb")
    res = run(["reembed", b5, "--method", "oracle", "--cap", "8"])
    assert res.exit_code == 3
    monkeypatch.setenv("FGR_CAP", "8")
    assert run(["reembed", b5, "--method", "oracle"]).exit_code == 3
    # default falls back to the formula when the oracle would exceed the cap
    res = run(["reembed", b5])
    assert res.exit_code == 0 and "# method: formula" in res.stdout
    assert run(["reembed", b5, "--method", "oracle", "--force"]).exit_code == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fatgraph_reembed", "genus", FIG1],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "faces: 1, genus: 1\n"


def test_selftest_quick():
    res = run(["selftest"])
    assert res.exit_code == 0
    lines = res.stdout.splitlines()
    assert len(lines) == 2 and all(line.startswith("PASS") for line in lines)

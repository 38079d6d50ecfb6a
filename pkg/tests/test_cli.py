import json

from rollercoaster.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_warp_dt(capsys):
    code, out, _ = run(capsys, "warp", "--dt", "[4,6,2]")
    assert code == 0
    assert out.splitlines()[0] == "min_warp: 1"
    assert out.splitlines()[1] == "basepoint: edge 0 forward"


def test_warp_eight_eighteen(capsys):
    code, out, _ = run(capsys, "warp", "--dt", "[12,14,16,2,4,6,8,10]")
    assert code == 0
    assert out.splitlines()[0] == "min_warp: 2"


def test_warp_rejects_odd_entry(capsys):
    code, _, err = run(capsys, "warp", "--dt", "[4,5,2]")
    assert code == 2
    assert "odd entry" in err


def test_warp_json_profile(capsys):
    code, out, _ = run(capsys, "warp", "--dt", "[4,6,2]", "--json", "--all-basepoints")
    payload = json.loads(out)
    assert payload["min_warp"] == 1
    assert payload["profile_forward"] == [1, 2, 1, 2, 1, 2]
    assert payload["basepoint"] == {"edge": 0, "forward": True}


def test_warp_mirror_flag(capsys):
    # per-basepoint degrees complement to 3, so the profile flips while
    # the minimum stays 1
    code, out, _ = run(capsys, "warp", "--dt", "[4,6,2]", "--mirror", "--json",
                       "--all-basepoints")
    payload = json.loads(out)
    assert code == 0
    assert payload["min_warp"] == 1
    assert payload["profile_forward"] == [2, 1, 2, 1, 2, 1]


def test_warp_gauss_file(tmp_path, capsys):
    path = tmp_path / "knot.gauss"
    path.write_text("# trefoil\n1 -3 2 -1 3 -2\n")
    code, out, _ = run(capsys, "warp", "--gauss", str(path))
    assert code == 0
    assert out.splitlines()[0] == "min_warp: 1"


def test_braid_counts(capsys):
    code, out, _ = run(capsys, "braid", "--word", "1 1 1", "counts")
    assert code == 0
    assert out.strip() == "(2, 1)"


def test_braid_unknotting(capsys):
    code, out, _ = run(capsys, "braid", "--word", "1 2 1 2", "unknotting")
    assert code == 0
    assert out.strip() == "1"


def test_braid_link_closure_rejected(capsys):
    code, _, err = run(capsys, "braid", "--word", "1 1", "counts")
    assert code == 2
    assert "closure has 2 components" in err


def test_braid_closure_dt(capsys):
    code, out, _ = run(capsys, "braid", "--word", "1 1 1", "closure-dt")
    assert code == 0
    assert out.strip() == "[4, 6, 2]"


def test_braid_reduce_prints_identities(capsys):
    code, out, _ = run(capsys, "braid", "--word", "1 2 1 2 1 2 1 2", "reduce")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("smooth")
    assert "(5, 3) -> (4, 2)" in lines[0]
    assert lines[-1] == "base case: counts (2, 0) on 3 strands"


def test_braid_reduce_requires_positive(capsys):
    code, _, err = run(capsys, "braid", "--word", "-1 -1 -1", "reduce")
    assert code == 2
    assert "positive" in err


def test_verify_catalog_shipped(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify-catalog", "--json", str(out_path))
    assert code == 0
    lines = out.splitlines()
    assert lines[-2] == "verified 86 rows, 0 failures"
    assert lines[-1] == "SRC=12 RC=32 Neither=34 Unknown=6"
    payload = json.loads(out_path.read_text())
    assert payload["pass"] is True
    assert len(payload["rows"]) == 86
    assert payload["counts"] == {"src": 12, "rc": 32, "neither": 34, "unknown": 6}


def test_verify_catalog_flags_edited_row(capsys, tmp_path):
    from importlib import resources

    lines = resources.files("rollercoaster.data").joinpath("catalog.csv").read_text().splitlines()
    lines[1] = lines[1].replace("3_1,Y,1,1", "3_1,Y,1,2")
    bad = tmp_path / "catalog.csv"
    bad.write_text("\n".join(lines))
    code, _, err = run(capsys, "verify-catalog", "--catalog", str(bad))
    assert code == 1
    assert "row 2" in err


def test_verify_catalog_missing_refs(capsys):
    code, _, err = run(capsys, "verify-catalog", "--refs", "/nonexistent/refs.dat")
    assert code == 2
    assert "refs not found" in err


def test_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "--max", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "c=3 computed=1 predicted=1 match witness=[4, 6, 2]"
    assert len(lines) == 2


def test_enumerate_with_csv(capsys, tmp_path):
    out_csv = tmp_path / "codes.csv"
    code, out, _ = run(capsys, "enumerate", "--crossings", "3", "--csv", str(out_csv))
    assert code == 0
    assert out.splitlines() == ["[4, 6, 2]", "1 diagrams at c=3"]
    assert out_csv.read_text().splitlines() == ["crossings,dt", '3,"[4, 6, 2]"']


def test_stdin_dt(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("[4, 6, 8, 2]"))
    code, out, _ = run(capsys, "warp", "--dt", "-")
    assert code == 0
    assert out.splitlines()[0] == "min_warp: 1"

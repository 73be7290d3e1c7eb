import json

from rectkostka.cli import run

S_TEXT = "1 1 1 3 4 5\n2 2 2 4 5 6\n3 3 6\n4 7 7\n"
T_TEXT = "1 1 1 3 3 5\n2 2 2 4 5 6\n3 4 6\n4 7 7\n"


def test_lrt_enumerate(capsys):
    assert run(["lrt", "enumerate", "--shape", "5,4,3,3,2,1", "--rects", "4x3,2x3"]) == 0
    assert capsys.readouterr().out == "1 1 1 5 5\n2 2 2 6\n3 3 3\n4 4 4\n5 6\n6\n"


def test_ctype(tmp_path, capsys):
    f = tmp_path / "S.txt"
    f.write_text(S_TEXT)
    assert run(["ctype", str(f)]) == 0
    assert capsys.readouterr().out == "(); (3); (2,2)\n"


def test_catabolize_trace(tmp_path, capsys):
    f = tmp_path / "S.txt"
    f.write_text(S_TEXT)
    assert run(["catabolize", str(f), "--rects", "2x3,2x3,3x2", "--mode", "col", "--trace"]) == 0
    out = capsys.readouterr().out
    assert "# colcat_2x3\n3 3 3 6 7\n4 4 4 7\n5 5\n6\n" in out
    assert out.endswith("# verdict: catabolizable\n")
    assert run(["catabolize", str(f), "--rects", "2x3,2x3,3x2", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] is True


def test_transpose(tmp_path, capsys):
    f = tmp_path / "T.txt"
    f.write_text(T_TEXT)
    assert run(["transpose", str(f), "--rects", "2x3,2x3,3x2"]) == 0
    assert capsys.readouterr().out == "1 1 4 4\n2 2 5 7\n3 3 7 8\n5 6\n6 7\n8 8\n"
    assert run(["transpose", "--rects", "2x1", "--word", "2,1"]) == 0
    assert capsys.readouterr().out == "1,1\n"


def test_poly(capsys):
    assert run(["poly", "kf", "--shape", "2,1", "--mu", "1,1,1"]) == 0
    assert capsys.readouterr().out == "q + q^2\n"
    assert run(["poly", "kostka", "--rects", "4x3,2x3", "--shape", "5,4,3,3,2,1", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["polys"][0]["coefficients"] == [0, 0, 0, 1]
    assert run(["poly", "dual", "--rects", "4x3,2x3"]) == 0
    capsys.readouterr()
    assert run(["poly", "mono", "--rects", "4x3,2x3", "--to", "3x3,3x3"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_poset_export(tmp_path, capsys):
    assert run(["poset", "export", "--rects", "1x2,1x1", "--format", "dot"]) == 0
    assert capsys.readouterr().out.startswith("digraph poset {")
    out = tmp_path / "p.json"
    assert run(["poset", "export", "--rects", "1x2,1x1", "--order", "cyclage", "--format", "json",
                "--out", str(out), "--figures", str(tmp_path / "fig")]) == 0
    assert json.loads(out.read_text())["meta"]["order"] == "cyclage"
    assert (tmp_path / "fig" / "poset.png").exists()


def test_embed(tmp_path, capsys):
    f = tmp_path / "T.txt"
    f.write_text("1 1 1 5 5\n2 2 2 6\n3 3 3\n4 4 4\n5 6\n6\n")
    assert run(["embed", "apply", "--from", "4x3,2x3", "--to", "3x3,3x3", str(f)]) == 0
    assert "->\n1 1 1 4 4\n2 2 2 5\n3 3 3\n4 5 6\n5 6\n6\n" in capsys.readouterr().out
    g = tmp_path / "S.txt"
    g.write_text(S_TEXT)
    assert run(["embed", "image-test", str(g), "--rects", "2x3,2x3,3x2"]) == 0
    assert capsys.readouterr().out == "in image: yes\ncatabolizable: yes\n"


def test_atom_list(capsys):
    assert run(["atom", "list", "--gamma", "2,2,1", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert sum(len(a["tableaux"]) for a in obj["atoms"]) == 7


def test_verify(tmp_path, capsys):
    assert run(["verify", "charge-comp", "--max-cells", "5", "--figures", str(tmp_path)]) == 0
    assert capsys.readouterr().out.startswith("PASS\tcharge-comp")
    assert (tmp_path / "summary.tsv").exists() and (tmp_path / "suites.png").exists()


def test_verify_cap_warning(capsys):
    from rectkostka import cli
    assert cli._max_cells(20) == 12
    assert "capped" in capsys.readouterr().err


def test_report(tmp_path, capsys):
    assert run(["report", "--rects", "2x2,1x2", "--figures", str(tmp_path)]) == 0
    for name in ("kostka.tsv", "kostka.png", "poset.tsv", "poset.png"):
        assert (tmp_path / name).exists()


def test_usage_errors(tmp_path, capsys):
    assert run(["lrt", "enumerate", "--shape", "2", "--rects", "2y2"]) == 2
    assert "ROWSxCOLS" in capsys.readouterr().err
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n")
    assert run(["ctype", str(bad)]) == 2
    assert run(["ctype", str(tmp_path / "missing.txt")]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["poly", "mono", "--rects", "3x3,3x3", "--to", "4x3,2x3"]) == 2


def test_counterexample_dump_is_input(tmp_path, capsys):
    dump = {"suite": "embed-image", "ok": False, "counterexample": {
        "rects": "2x3,2x3,3x2",
        "tableau": {"shape": [6, 6, 3, 3], "inner": [], "rows": [[1, 1, 1, 3, 4, 5], [2, 2, 2, 4, 5, 6], [3, 3, 6], [4, 7, 7]]}}}
    f = tmp_path / "dump.json"
    f.write_text(json.dumps(dump))
    assert run(["catabolize", str(f)]) == 0
    assert capsys.readouterr().out == "catabolizable\n"


def test_deterministic(capsys):
    run(["atom", "list", "--gamma", "3,2,2,1"])
    a = capsys.readouterr().out
    run(["atom", "list", "--gamma", "3,2,2,1"])
    assert capsys.readouterr().out == a

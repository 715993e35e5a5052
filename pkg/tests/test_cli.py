import json
import subprocess
import sys

import pytest

from ncx import cli, verify


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def tableau_file(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"k": 3, "n": 7, "rows": [[3, 7, 8, 8], [2, 4, 6, 8], [1, 2, 6, 6]]}))
    return path


def test_decompose(capsys, tableau_file):
    code, out, _ = run(capsys, "decompose", "--tableau", str(tableau_file), "--mode", "nc")
    assert code == 0
    assert json.loads(out)["columns"][2] == [1, 5, 7]
    assert "marks" not in json.loads(out)
    code, out, _ = run(capsys, "decompose", "--tableau", str(tableau_file), "--mode", "nn",
                       "--marks")
    assert json.loads(out)["marks"][0] == [1, 3]
    assert out == out.strip() + "\n" and " " not in out


def test_decompose_zero(capsys, tmp_path):
    path = tmp_path / "z.json"
    path.write_text('{"k":2,"n":5,"rows":[[0,0,0],[0,0,0]]}')
    code, out, _ = run(capsys, "decompose", "--tableau", str(path), "--marks")
    assert (code, out) == (0, '{"columns":[],"marks":[]}\n')


def test_decompose_bad_input(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"rows":[[2,1]]}')
    assert run(capsys, "decompose", "--tableau", str(bad))[0] == 2
    assert run(capsys, "decompose", "--tableau", str(tmp_path / "missing.json"))[0] == 2
    good = tmp_path / "good.json"
    good.write_text('{"rows":[[1,2]]}')
    code, _, err = run(capsys, "decompose", "--tableau", str(good), "--n", "9")
    assert code == 2 and "does not match" in err


def test_facets(capsys):
    code, out, _ = run(capsys, "facets", "--k", "2", "--n", "5", "--complex", "nc", "--method", "flip")
    facets = json.loads(out)
    assert code == 0 and len(facets) == 5
    code, out2, _ = run(capsys, "facets", "--k", "2", "--n", "5")
    assert out2 == out
    code, out, _ = run(capsys, "facets", "--k", "3", "--n", "6", "--complex", "sep")
    assert len(json.loads(out)) == 34


def test_facets_usage_errors(capsys):
    assert run(capsys, "facets", "--k", "5", "--n", "5")[0] == 2
    assert run(capsys, "facets", "--k", "2", "--n", "5", "--complex", "nn", "--method", "flip")[0] == 2


def test_guard(capsys):
    code, _, err = run(capsys, "facets", "--k", "4", "--n", "9")
    assert code == 3 and "--force" in err
    assert run(capsys, "tamari", "--k", "3", "--n", "9")[0] == 3
    assert run(capsys, "cube", "--dim", "7")[0] == 3


def test_tamari_checks(capsys):
    code, out, err = run(capsys, "tamari", "--k", "2", "--n", "5", "--check",
                         "acyclic,shelling,lattice,selfdual,geom-orientation")
    assert code == 0
    assert out.splitlines() == ["PASS acyclic", "PASS shelling", "PASS lattice",
                                "PASS selfdual", "PASS geom-orientation"]


def test_tamari_export_keeps_stdout_clean(capsys):
    code, out, err = run(capsys, "tamari", "--k", "2", "--n", "5", "--out", "json", "--check",
                         "acyclic")
    assert code == 0
    assert json.loads(out)["arcs"] == [[0, 1], [0, 2], [1, 4], [2, 3], [3, 4]]
    assert err.strip() == "PASS acyclic"
    code, out, _ = run(capsys, "tamari", "--k", "2", "--n", "5", "--out", "dot")
    assert out.startswith("digraph tamari_2_5 {") and "0 -> 1;" in out


def test_tamari_failing_check(capsys, monkeypatch):
    monkeypatch.setattr(cli.tamari, "check_selfdual", lambda D: False)
    code, out, _ = run(capsys, "tamari", "--k", "2", "--n", "5", "--check", "selfdual")
    assert code == 1 and out.strip() == "FAIL selfdual"


def test_tamari_unknown_check(capsys):
    assert run(capsys, "tamari", "--k", "2", "--n", "5", "--check", "bogus")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--k", "2", "--n", "5")
    report = json.loads(out)
    assert code == 0 and report["ok"] and report["counts"]["fail"] == 0
    assert {r["suite"] for r in report["results"]} == set(verify.SUITES)
    code, out, _ = run(capsys, "verify", "--k", "3", "--n", "6", "--suite", "tableaux")
    assert code == 0 and {r["suite"] for r in json.loads(out)["results"]} == {"tableaux"}


def test_verify_failure_exit(capsys, caplog, monkeypatch):
    def broken(c):
        yield verify._rec("core", "broken", False)

    monkeypatch.setitem(verify.RUNNERS, "core", broken)
    code, out, _ = run(capsys, "verify", "--k", "2", "--n", "5", "--suite", "core")
    assert code == 1 and not json.loads(out)["ok"]
    assert "FAIL core/broken" in caplog.text


def test_cube(capsys):
    assert run(capsys, "cube", "--dim", "4", "--triangulation", "standard", "--diameter")[1] == "6\n"
    assert run(capsys, "cube", "--dim", "2", "--triangulation", "noncrossing", "--diameter")[1] == "1\n"
    assert run(capsys, "cube", "--dim", "5", "--triangulation", "noncrossing", "--diameter")[1] == "20\n"
    code, out, _ = run(capsys, "cube", "--dim", "2")
    assert code == 0 and len(json.loads(out)) == 2
    assert run(capsys, "cube", "--dim", "0")[0] == 2


def test_bad_threads(capsys, monkeypatch):
    monkeypatch.setenv("NCX_THREADS", "zero")
    code, _, err = run(capsys, "facets", "--k", "2", "--n", "5")
    assert code == 2 and "NCX_THREADS" in err
    monkeypatch.setenv("NCX_THREADS", "0")
    assert run(capsys, "facets", "--k", "2", "--n", "5")[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["facets", "--k", "2"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ncx", "cube", "--dim", "3", "--diameter"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3\n"

import json

import pytest

from projspace.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_distance(capsys):
    code, out, _ = run(capsys, "distance", "--q", "2", "--n", "2", "--a", "1 0", "--b", "0 1")
    assert code == 0 and json.loads(out)["d_s"] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--q", "2", "--n", "4", "--k", "2")
    assert code == 0 and len(out.splitlines()) == 35
    code, out, _ = run(capsys, "enumerate", "--q", "2", "--n", "4", "--count-only")
    assert json.loads(out) == {"count": 67}


def test_derive_then_verify_and_profile(capsys, tmp_path):
    path = tmp_path / "code.json"
    code, _, _ = run(capsys, "derive", "--q", "2", "--n", "3", "--basis", "1 0 0;0 1 0;0 0 1", "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "verify", "--in", str(path))
    report = json.loads(out)
    assert code == 0 and report["all_ok"] and report["matches_embedded"]
    code, out, _ = run(capsys, "profile", "--in", str(path))
    assert code == 0 and json.loads(out)["counts"] == [1, 3, 3, 1]


def test_verify_flags_a_broken_table(capsys, tmp_path):
    path = tmp_path / "code.json"
    run(capsys, "derive", "--q", "2", "--n", "2", "--basis", "1 0;0 1", "--out", str(path))
    doc = json.loads(path.read_text())
    doc["table"][1][2] = doc["table"][2][1] = 1
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--in", str(path))
    assert code == 1 and not json.loads(out)["all_ok"]


def test_search_and_reverify(capsys, tmp_path):
    path = tmp_path / "search.json"
    code, out, _ = run(capsys, "search", "--q", "2", "--n", "3", "--require-full-space", "--out", str(path))
    summary = json.loads(out)
    assert code == 0 and summary["max_cardinality"] == 8 and summary["extremal_count"] == 28
    code, out, _ = run(capsys, "verify", "--in", str(path))
    doc = json.loads(out)
    assert code == 0 and doc["all_ok"] and len(doc["reports"]) == 28
    assert all(r["matches_embedded"] for r in doc["reports"])


def test_search_output_is_byte_identical(capsys):
    argv = ["search", "--q", "3", "--n", "2", "--require-full-space", "--seed", "4"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    parallel = run(capsys, *argv, "--workers", "2")
    assert first[1] == second[1] == parallel[1]


def test_search_budget_from_environment(capsys, caplog, monkeypatch):
    monkeypatch.setenv("PROJSPACE_NODE_BUDGET", "20")
    code, out, _ = run(capsys, "search", "--q", "2", "--n", "3", "--require-full-space")
    assert code == 3 and json.loads(out)["exhaustive"] is False
    assert "budget" in caplog.text


def test_lovasz_round_trip(capsys, tmp_path):
    code_path, out_path = tmp_path / "code.json", tmp_path / "lovasz.json"
    run(capsys, "derive", "--q", "2", "--n", "4", "--basis", "1 0 0 0;0 1 0 0;0 0 1 0;0 0 0 1", "--out", str(code_path))
    code, out, _ = run(capsys, "lovasz", "--in", str(code_path), "--k", "2")
    verdict = json.loads(out)["verdict"]
    assert code == 0 and verdict["m"] == 6 and verdict["bound"] == 6
    out_path.write_text(out)
    again = run(capsys, "lovasz", "--in", str(out_path))
    assert again[0] == 0 and again[1] == out


def test_lovasz_needs_k_for_codes(capsys, tmp_path):
    path = tmp_path / "code.json"
    run(capsys, "derive", "--q", "2", "--n", "2", "--basis", "1 0;0 1", "--out", str(path))
    assert run(capsys, "lovasz", "--in", str(path))[0] == 2


def test_nonlinear(capsys):
    code, out, _ = run(capsys, "nonlinear", "--q", "2", "--n", "3")
    assert code == 0 and json.loads(out)["method"] == "exhaustive"
    code, out, _ = run(capsys, "nonlinear", "--q", "2", "--n", "1")
    assert code == 1 and json.loads(out)["nonlinear"] is False
    assert run(capsys, "nonlinear", "--q", "2", "--n", "3", "--budget", "5")[0] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["distance", "--q", "6", "--n", "2", "--a", "1 0", "--b", "0 1"],
        ["distance", "--q", "2", "--n", "2", "--a", "1 0 1", "--b", "0 1"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        raise SystemExit(main(argv))
    assert info.value.code == 2


def test_malformed_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, out, err = run(capsys, "verify", "--in", str(path))
    assert code == 2 and out == "" and err
    path.write_text(json.dumps({"hello": 1}))
    assert run(capsys, "verify", "--in", str(path))[0] == 2


def test_feasibility_abort(capsys):
    assert run(capsys, "search", "--q", "2", "--n", "8")[0] == 3
    assert run(capsys, "enumerate", "--q", "3", "--n", "12")[0] == 3

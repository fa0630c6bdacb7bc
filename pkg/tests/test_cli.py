import json

import pytest

from schurlab.cli import main
from schurlab.store import Cache, ResultRecord, cached, canonical_json, digest


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_group_subgroups_table(capsys):
    code, out, _ = run(capsys, "group", "subgroups", "--group", "C3xC3", "--table", "--no-cache")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "order\tmembers" and len(lines) == 1 + 6


def test_ci_check_and_scan(capsys, tmp_path):
    code, out, _ = run(capsys, "ci", "check", "--group", "Z8", "--set", "1,2,5",
                       "--cache-dir", str(tmp_path))
    rec = json.loads(out)
    assert code == 0 and rec["ci"] is False and rec["witness"]["T"] == [[1], [5], [6]]
    code, out, _ = run(capsys, "ci", "scan", "--group", "Z6", "--cache-dir", str(tmp_path))
    assert code == 0 and json.loads(out)["dci"] is True


def test_ci_check_coordinates(capsys):
    code, out, _ = run(capsys, "ci", "check", "--group", "C2xC4", "--set", "(0,1);(1,0)",
                       "--no-cache")
    assert code == 0 and json.loads(out)["set"] == [[0, 1], [1, 0]]


def test_rat_analyze_m2(capsys):
    code, out, _ = run(capsys, "rat", "analyze", "--p", "3", "--q", "5", "--matrix", "M2",
                       "--no-cache")
    rep = json.loads(out)["reports"][0]
    assert code == 0 and rep["gap"] == 26


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "group", "info", "--group", "Q8")[0] == 2
    assert run(capsys, "lemma", "run")[0] == 2
    assert run(capsys, "lemma", "run", "--id", "Nope")[0] == 2
    assert run(capsys, "ci", "check", "--group", "Z8", "--set", "0,1")[0] == 2
    assert run(capsys, "ci", "scan", "--group", "Z16")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    code, _, err = run(capsys, "ci", "check", "--group", "Z8", "--set", "9")
    assert code == 2 and "out of range" in err


def test_violation_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"group": "Z4", "classes": [[[0]], [[1], [2]], [[3]]]}))
    code, out, _ = run(capsys, "sring", "validate", "--file", str(bad))
    assert code == 1 and json.loads(out)["error"] == "NotInverseClosed"
    pcp = tmp_path / "pcp.json"
    pcp.write_text(json.dumps({"group": "C6xC6", "k": 2, "subgroups": [[[0, 1]], [[0, 2], [3, 0]]]}))
    code, out, _ = run(capsys, "net", "verify", "--pcp", str(pcp))
    assert code == 1


def test_lemma_run_exit_0(capsys):
    code, out, _ = run(capsys, "lemma", "run", "--id", "PropW", "--groups", "Z6,Z10", "--no-cache")
    assert code == 0 and json.loads(out)["reports"][0]["failed"] == 0


def test_net_search_and_verify_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "net", "search", "--group", "C6xC6", "--k", "3", "--no-cache")
    res = json.loads(out)
    assert code == 0 and res["count"] == 1
    net = res["nets"][0]
    assert net["srg"] == [36, 15, 6, 6] and net["lines_are_only_n_cliques"]
    f = tmp_path / "pcp.json"
    f.write_text(json.dumps(net["pcp"]))
    code, out, _ = run(capsys, "net", "verify", "--pcp", str(f))
    assert code == 0 and json.loads(out)["srg"] == [36, 15, 6, 6]


def test_out_file_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for f in (a, b):
        assert main(["sring", "enumerate", "--group", "C2xC4", "--out", str(f), "--no-cache"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cache_hit_is_byte_identical(capsys, tmp_path):
    args = ["ci", "scan", "--group", "Z8", "--cache-dir", str(tmp_path)]
    _, first, _ = run(capsys, *args)
    files = list(tmp_path.rglob("*.json"))
    assert len(files) == 1
    _, second, _ = run(capsys, *args)
    assert first == second


def test_corrupt_cache_is_recomputed(tmp_path, caplog):
    cache = Cache(tmp_path)
    calls = []

    def compute():
        calls.append(1)
        return {"x": 1}

    v, hit = cached(cache, "cmd", {"a": 1}, compute)
    assert not hit
    path = next(tmp_path.rglob("*.json"))
    path.write_text("{not json")
    v2, hit = cached(cache, "cmd", {"a": 1}, compute)
    assert not hit and v2 == v == {"x": 1} and len(calls) == 2
    assert "corrupt cache entry" in caplog.text
    assert json.loads(path.read_text())["verdict"] == {"x": 1}
    v3, hit = cached(cache, "cmd", {"a": 1}, compute)
    assert hit and len(calls) == 2


def test_disabled_cache_recomputes(monkeypatch):
    monkeypatch.delenv("SCHURLAB_CACHE", raising=False)
    cache = Cache()
    assert not cache.enabled
    n = []
    cached(cache, "c", {}, lambda: n.append(1) or 1)
    cached(cache, "c", {}, lambda: n.append(1) or 1)
    assert len(n) == 2


def test_record_round_trip_and_digest():
    rec = ResultRecord("c", digest("c", {"b": 1, "a": 2}), {"v": [1, 2]}, "0.1.0", 5)
    assert ResultRecord.from_json(json.loads(canonical_json(rec.to_json()))) == rec
    assert digest("c", {"a": 2, "b": 1}) == rec.inputs_digest


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        from schurlab.cli import build_parser
        build_parser().parse_args(["--version"])
    assert exc.value.code == 0
    assert "schurlab" in capsys.readouterr().out

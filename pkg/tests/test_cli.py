from __future__ import annotations

import csv
import io
import json

import pytest

from fatpoints import cli, wlp
from fatpoints.cache import CACHE_ENV, ResultCache, request_hash
from fatpoints.verify import Check


@pytest.fixture(autouse=True)
def _no_env_cache(monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)


def run_json(*argv):
    code, text = cli.run(["--format", "json", *argv])
    return code, json.loads(text)


@pytest.mark.parametrize("argv,value", [
    (["eulerian", "4", "1"], 11),
    (["linsys", "--n", "2", "--deg", "4", "--mults", "2^5"], 1),
    (["alpha", "--class", "n2", "--n", "3", "--dept", "2", "--k", "2"], None),
    (["spline", "--i", "4", "--eval", "2"], "2/3"),
    (["spline", "--i", "6", "--eval", "3"], "11/20"),
    (["verlinde", "--n", "2", "--j", "1"], 5),
    (["wlp", "--n", "12", "--d", "145"], "Fails"),
])
def test_examples(argv, value):
    code, out = run_json(*argv)
    assert code == 0
    assert set(out) >= {"command", "inputs", "value", "status", "source", "seed", "field"}
    if value is not None:
        assert out["value"] == value


def test_linsys_text_trace():
    code, text = cli.run(["--format", "pretty", "linsys", "--n", "2", "--deg", "3", "--mults", "2^4"])
    assert code == 0
    assert text.splitlines()[-1].startswith("BASE")


def test_global_flags_after_subcommand():
    _, a = run_json("eulerian", "5", "2", "--seed", "4")
    _, b = run_json("--seed", "4", "eulerian", "5", "2")
    assert a["seed"] == b["seed"] == 4


@pytest.mark.parametrize("argv", [
    ["eulerian", "-1", "0"],
    ["linsys", "--n", "2", "--deg", "3", "--mults", "x"],
    ["eulerian", "3"],
    ["--field", "prime:4", "eulerian", "3", "1"],
    ["spline", "--i", "4"],
    ["spline", "--i", "65", "--eval", "1"],
    ["wlp", "--n", "12", "--d", "1"],
    ["wlp", "--n", "12"],
    ["--jobs", "0", "eulerian", "3", "1"],
])
def test_user_errors_exit_1(argv, capsys):
    assert cli.main(argv) == 1
    assert "error" in capsys.readouterr().err


def test_mismatch_exits_2(monkeypatch, capsys):
    def fake_suite(name, cfg):
        yield Check("fake", "case", 1, 2)

    monkeypatch.setattr(cli, "run_suite", fake_suite)
    assert cli.main(["--format", "json", "verify", "--suite", "base", "--seeds", "1"]) == 2
    out = json.loads(capsys.readouterr().out)
    assert out["mismatches"] and out["value"] is False


def test_verify_small_suite():
    code, out = run_json("verify", "--suite", "base", "--seeds", "1")
    assert code == 0 and out["value"] is True


def test_wlp_csv_schema():
    code, text = cli.run(["--format", "csv", "wlp", "--scan", "--nmin", "8", "--nmax", "10", "--dmax", "30"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert tuple(rows[0]) == tuple(wlp.CSV_COLUMNS)
    assert {r["verdict"] for r in rows} <= {"Fails", "Unknown"}


def test_cache_round_trip(tmp_path, monkeypatch):
    path = tmp_path / "c.jsonl"
    argv = ["--cache", str(path), "eulerian", "6", "2"]
    _, first = run_json(*argv)
    assert len(path.read_text().splitlines()) == 1

    def boom(args):
        raise AssertionError("recomputed")

    monkeypatch.setattr(cli, "cmd_eulerian", boom)
    parser_fn = cli.build_parser
    monkeypatch.setattr(cli, "build_parser", lambda: _patched(parser_fn(), "eulerian", boom))
    _, second = run_json(*argv)
    assert second == first


def _patched(parser, name, fn):
    for action in parser._subparsers._group_actions:
        action.choices[name].set_defaults(func=fn)
    return parser


def test_cache_env(tmp_path, monkeypatch):
    path = tmp_path / "env.jsonl"
    monkeypatch.setenv(CACHE_ENV, str(path))
    run_json("eulerian", "3", "1")
    assert path.exists()


def test_cache_skips_corrupted_line(tmp_path, caplog):
    path = tmp_path / "c.jsonl"
    cache = ResultCache(path)
    key = request_hash("x", {"a": 1}, 0, "prime")
    path.write_text("{not json\n")
    cache.store(key, {"value": 3})
    with caplog.at_level("WARNING"):
        assert cache.lookup(key) == {"value": 3}
    assert "malformed" in caplog.text


def test_cache_version_bypass(tmp_path):
    path = tmp_path / "c.jsonl"
    key = request_hash("x", {}, 0, "prime")
    ResultCache(path, version="0.0.0").store(key, {"value": 1})
    assert ResultCache(path, version="9.9.9").lookup(key) is None
    assert ResultCache(path, version="0.0.0").lookup(key) == {"value": 1}


def test_hash_depends_on_seed_and_field():
    a = request_hash("alpha", {"n": 3}, 0, "prime")
    assert a != request_hash("alpha", {"n": 3}, 1, "prime")
    assert a != request_hash("alpha", {"n": 3}, 0, "rational")
    assert a == request_hash("alpha", {"n": 3}, 0, "prime")


def test_verify_is_not_cached(tmp_path):
    path = tmp_path / "c.jsonl"
    cli.run(["--cache", str(path), "--format", "json", "verify", "--suite", "base", "--seeds", "1"])
    assert not path.exists()

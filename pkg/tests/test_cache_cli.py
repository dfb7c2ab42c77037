import json

import pytest

from schubpuzzle import cli
from schubpuzzle.cache import SCHEMA_VERSION, CacheStore, cached_class, cached_product
from schubpuzzle.puzzle import enumerate_puzzles, to_structured, to_text


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cachedir(tmp_path, monkeypatch):
    monkeypatch.setenv("SCHUBPUZZLE_CACHE", str(tmp_path / "cache"))
    return tmp_path / "cache"


def test_cache_hit_is_identical(tmp_path):
    store = CacheStore(tmp_path)
    a = cached_product("0101", "1010", "gkm", store)
    fresh = CacheStore(tmp_path)
    b = cached_product("0101", "1010", "gkm", fresh)
    assert a == b and a.format() == b.format()
    assert cached_class("0101", store) == cached_class("0101", CacheStore(tmp_path))


def test_stale_version_ignored(tmp_path):
    store = CacheStore(tmp_path)
    cached_product("010", "100", "gkm", store)
    path = store.path("products-gkm", 3, 1)
    data = json.loads(path.read_text())
    assert data["version"] == SCHEMA_VERSION
    data["version"] = SCHEMA_VERSION + 1
    data["records"]["010,100"] = {"100": "999"}
    path.write_text(json.dumps(data))
    t = cached_product("010", "100", "gkm", CacheStore(tmp_path))
    assert t.format() == "100: y3 - y1"


def test_multiply(capsys, cachedir):
    assert run(capsys, "multiply", "4", "2", "0101", "1010")[1] == "1010: y4 - y1 | 1100: 1\n"
    assert run(capsys, "multiply", "3", "1", "010", "100")[1] == "100: y3 - y1\n"
    code, out, _ = run(capsys, "multiply", "4", "2", "0101", "1010", "--engine", "both")
    assert code == 0 and out.strip().endswith("match")
    code, out, _ = run(capsys, "--no-cache", "multiply", "4", "2", "0101", "1010", "--engine", "gkm",
                       "--format", "structured")
    assert json.loads(out)["gkm"]["entries"]["1100"] == [[1, []]]
    assert cachedir.exists()


def test_usage_errors(capsys):
    assert run(capsys, "multiply", "4", "2", "010", "1010")[0] == 1
    assert run(capsys, "multiply", "4", "2", "0111", "1010")[0] == 1
    assert run(capsys, "multiply", "4", "2", "01a1", "1010")[0] == 1
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nonsense", "4", "2"])
    assert exc.value.code == 1


def test_puzzle_counts(capsys):
    assert run(capsys, "puzzles", "6", "3", "010101", "010101", "101010", "--count-only")[1] == "2\n"
    assert run(capsys, "puzzles", "4", "2", "0110", "0110", "0110", "--count-only")[1] == "1\n"
    out = run(capsys, "puzzles", "6", "3", "100101", "101010", "110100", "--count-only", "--ordinary-only")[1]
    assert out == "0\n"
    code, out, _ = run(capsys, "puzzles", "4", "2", "1001", "1001", "1001", "--render", "svg")
    assert code == 0 and out.count("<svg") == 1


def test_render_command(capsys, tmp_path):
    P = enumerate_puzzles("0101", "1010", "1010")[0]
    f = tmp_path / "p.txt"
    f.write_text(to_text(P))
    code, out, _ = run(capsys, "render", str(f))
    assert code == 0 and len(out.splitlines()) == 4
    g = tmp_path / "p.json"
    g.write_text(json.dumps(to_structured(P)))
    assert run(capsys, "render", str(g), "--format", "svg")[1] == run(capsys, "render", str(f), "--format", "svg")[1]
    bad = tmp_path / "bad.txt"
    bad.write_text("triangle 2\n0\n0z0\n")
    code, _, err = run(capsys, "render", str(bad))
    assert code == 1 and "line 3, column 2" in err


def test_class_ms_verify(capsys, cachedir):
    assert "1010: y4 - y1" in run(capsys, "class", "4", "2", "0101")[1]
    out = run(capsys, "ms", "4", "2", "0101", "0101")[1]
    assert out == "0101: y3 + y1 - z2 - z1 | 0110: 1 | 1001: 1\n"
    code, out, _ = run(capsys, "verify", "oracle-equality", "4", "2")
    assert code == 0 and "216 cases" in out
    code, out, _ = run(capsys, "verify", "pieri", "5", "2", "--format", "structured")
    assert code == 0 and json.loads(out)["passed"]


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--min-n", "3", "--max-n", "4")
    assert code == 0 and len(out.splitlines()) == 3

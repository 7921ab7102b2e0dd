import json
import subprocess
import sys

import pytest

from charmult.cli import run
from charmult.store import cache_read, cache_write


def ok(argv):
    res = run(argv)
    assert res.exit_code == 0, res.stderr
    return res.stdout


def test_bound():
    assert ok(["bound", "2"]) == "98\n"
    assert ok(["bound", "3"]) == "3078\n"


def test_witness():
    doc = json.loads(ok(["witness", "98", "2", "--with-degree"]))
    assert doc["verified"] is True and doc["count"] == 4
    assert len({tuple(m) for m in doc["members"]}) == 4
    assert all(sum(m) == 98 for m in doc["members"])
    assert isinstance(doc["degree"], int)


def test_census_csv_and_json():
    assert ok(["census", "4", "--kind", "symmetric", "--emit", "csv"]) == "4,1,2\n4,2,1\n4,3,2\n"
    assert ok(["census", "4", "--header"]).splitlines()[0] == "n,degree,count"
    doc = json.loads(ok(["census", "7", "--kind", "alternating", "--emit", "json"]))
    assert doc["total"] == 9 and doc["m"] == 2
    assert doc["entries"][0] == [1, 1]


def test_envelope():
    doc = json.loads(ok(["envelope", "5,3,3,2"]))
    assert doc["result"] == [14, 12, 12, 11, 8, 8, 6, 5, 5, 5, 3, 3, 2]
    doc = json.loads(ok(["envelope", "5,3,3,2", "--increment", "1"]))
    assert doc["size"] == 103 and doc["t_sum"] == 28


def test_tables():
    text = ok(["tables", "--family", "sporadic"])
    assert len(text.splitlines()) == 27
    assert "Ly,,,,5,5,sporadic" in text
    assert ok(["tables", "--family", "G2", "--q", "5"]).strip() == "G2,odd,5,15624,8,8,generic"


def test_indicator():
    doc = json.loads(ok(["indicator", "--side", "sym", "--n", "30"]))
    assert doc["m"] == 5604 and doc["below_half"] is False
    doc = json.loads(ok(["indicator", "--side", "classical", "--family", "PSL", "--d", "10", "--q", "16"]))
    assert doc["group"] == "PSL_10(16)" and doc["m"] == "315801600"
    assert doc["indicator"] > 0.5 and doc["below_half"] is False


def test_series():
    assert ok(["series", "--factors", "7", "--cutoff", "10", "--sparse"]) == "1,1,1\n6,1,2\n10,2,4\n"
    out = ok(["series", "--factors", "7,5041,log2:100000", "--cutoff", "5039", "--sparse"])
    assert out.splitlines()[-1] == "35,1,9"


def test_slowgrowth():
    doc = json.loads(ok(["slowgrowth", "--f", "ceil-log2-log2", "--imax", "2"]))
    first, second = doc["steps"]
    assert first["n"] == 7
    assert second["n"] == 2 ** 512 + 3 and second["R"] == 9 and second["f"] == 10 and second["certified"]


def test_curves():
    assert ok(["curves", "--kind", "pro-p-R", "--start", "16", "--stop", "16"]) == "16,32.0\n"


def test_domain_errors_exit_1():
    for argv in (["bound", "1"], ["witness", "97", "2"], ["census", "61"],
                 ["tables", "--family", "G2", "--q", "6"], ["envelope", "3,5"]):
        res = run(argv)
        assert res.exit_code == 1 and res.stdout == ""
        line = res.stderr.strip()
        assert line.startswith("error: ") and "\n" not in line
    assert run(["bound", "1"]).stderr.startswith("error: InvalidParameter: ")
    assert run(["witness", "97", "2"]).stderr.startswith("error: BelowBound: ")


def test_usage_errors_exit_2():
    for argv in ([], ["bound"], ["bound", "x"], ["census", "4", "--emit", "xml"], ["frobnicate"]):
        res = run(argv)
        assert res.exit_code == 2
        assert "usage" in res.stderr


def test_deterministic_output():
    argv = ["census", "20", "--kind", "alternating", "--emit", "json"]
    assert ok(argv) == ok(argv)


def test_mult_uses_and_fills_cache(tmp_path):
    cache = tmp_path / "m.csv"
    out = ok(["mult", "3", "8", "--cache", str(cache)])
    assert out.splitlines()[0] == "3,symmetric,2,1"
    recs = cache_read(cache)
    assert [r.n for r in recs] == list(range(3, 9))
    assert ok(["mult", "3", "8", "--cache", str(cache)]) == out
    assert ok(["mult", "3", "8", "--cache", str(cache), "--verify"]) == out


def test_mult_verify_detects_tampering(tmp_path):
    cache = tmp_path / "m.csv"
    ok(["mult", "6", "--cache", str(cache)])
    rec = cache_read(cache)[0]
    cache_write(cache, [type(rec)(rec.n, rec.kind, rec.m + 1, rec.witness_degree_count, rec.tool_version)])
    res = run(["mult", "6", "--cache", str(cache), "--verify"])
    assert res.exit_code == 1 and "CacheMismatch" in res.stderr
    # without --verify the cached row is trusted
    assert run(["mult", "6", "--cache", str(cache)]).exit_code == 0


def test_mult_env_cache(tmp_path, monkeypatch):
    cache = tmp_path / "env.csv"
    monkeypatch.setenv("CHARMULT_CACHE", str(cache))
    ok(["mult", "5"])
    assert cache_read(cache)[0].n == 5


@pytest.mark.parametrize("module", [True, False])
def test_console_entry(module):
    cmd = [sys.executable, "-m", "charmult.cli", "bound", "2"] if module else ["charmult", "bound", "2"]
    try:
        res = subprocess.run(cmd, capture_output=True, text=True, timeout=60)
    except FileNotFoundError:
        pytest.skip("console script not installed")
    assert res.returncode == 0 and res.stdout == "98\n"

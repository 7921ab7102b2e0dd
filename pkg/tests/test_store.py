import os

import pytest

from charmult.errors import CacheError
from charmult.store import HEADER, CacheRecord, cache_read, cache_write


def _rec(n, kind="symmetric", m=2, wc=1):
    return CacheRecord(n, kind, m, wc, "0.1.0")


def test_roundtrip(tmp_path):
    path = tmp_path / "cache.csv"
    recs = [_rec(5), _rec(3, "alternating", 3, 1), _rec(4, m=2, wc=2)]
    cache_write(path, recs)
    text = path.read_bytes().decode("utf-8")
    assert text.startswith(",".join(HEADER) + "\n") and text.endswith("\n")
    assert sorted(cache_read(path), key=lambda r: (r.kind, r.n)) == sorted(recs, key=lambda r: (r.kind, r.n))


def test_missing_and_header_only(tmp_path):
    assert cache_read(tmp_path / "none.csv") == []
    path = tmp_path / "h.csv"
    path.write_text(",".join(HEADER) + "\n")
    assert cache_read(path) == []


def test_duplicate_names_both_lines(tmp_path):
    path = tmp_path / "dup.csv"
    path.write_text(",".join(HEADER) + "\n4,symmetric,2,2,x\n5,symmetric,2,1,x\n4,symmetric,2,2,x\n")
    with pytest.raises(CacheError, match="line 4.*line 2"):
        cache_read(path)


@pytest.mark.parametrize("row,where", [
    ("4,symmetric,2,2", "line 2"),
    ("4,symmetric,two,2,x", "line 2"),
    ("4,dihedral,2,2,x", "line 2"),
    ("0,symmetric,2,2,x", "line 2"),
])
def test_corrupt_rows(tmp_path, row, where):
    path = tmp_path / "bad.csv"
    path.write_text(",".join(HEADER) + "\n" + row + "\n")
    with pytest.raises(CacheError, match=where):
        cache_read(path)


def test_bad_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("n,m\n4,2\n")
    with pytest.raises(CacheError, match="line 1"):
        cache_read(path)


def test_write_refuses_duplicates(tmp_path):
    path = tmp_path / "c.csv"
    with pytest.raises(CacheError):
        cache_write(path, [_rec(4), _rec(4)])
    assert not path.exists()
    assert os.listdir(tmp_path) == []


def test_failed_write_leaves_old_file(tmp_path):
    path = tmp_path / "c.csv"
    cache_write(path, [_rec(4)])
    before = path.read_text()

    class Boom(CacheRecord):
        @property
        def tool_version(self):
            raise RuntimeError("disk on fire")

    bad = object.__new__(Boom)
    object.__setattr__(bad, "n", 9)
    object.__setattr__(bad, "kind", "symmetric")
    object.__setattr__(bad, "m", 2)
    object.__setattr__(bad, "witness_degree_count", 1)
    with pytest.raises(RuntimeError):
        cache_write(path, [_rec(4), bad])
    assert path.read_text() == before
    assert sorted(os.listdir(tmp_path)) == ["c.csv"]

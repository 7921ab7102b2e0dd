"""CSV cache of maximal multiplicities, one row per (n, kind)."""
from __future__ import annotations

import csv
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .errors import CacheError

HEADER = ("n", "kind", "m", "witness_degree_count", "tool_version")
KINDS = ("symmetric", "alternating")
CACHE_ENV = "CHARMULT_CACHE"


@dataclass(frozen=True)
class CacheRecord:
    n: int
    kind: str
    m: int
    witness_degree_count: int
    tool_version: str


def default_cache_path() -> Path | None:
    p = os.environ.get(CACHE_ENV)
    return Path(p) if p else None


def _parse_row(row: list[str], line: int) -> CacheRecord:
    if len(row) != len(HEADER):
        raise CacheError(f"line {line}: expected {len(HEADER)} fields, got {len(row)}")
    n, kind, m, wc, version = row
    try:
        rec = CacheRecord(int(n), kind, int(m), int(wc), version)
    except ValueError:
        raise CacheError(f"line {line}: non-integer field in {row}") from None
    if rec.kind not in KINDS:
        raise CacheError(f"line {line}: unknown kind {kind!r}")
    if rec.n < 1 or rec.m < 1 or rec.witness_degree_count < 1:
        raise CacheError(f"line {line}: n, m and witness_degree_count must be positive")
    return rec


def cache_read(path) -> list[CacheRecord]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        return []
    rows = list(csv.reader(text.splitlines()))
    if not rows:
        return []
    if tuple(rows[0]) != HEADER:
        raise CacheError(f"line 1: bad header {rows[0]}")
    out = []
    seen = {}
    for line, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        rec = _parse_row(row, line)
        key = (rec.n, rec.kind)
        if key in seen:
            raise CacheError(f"line {line}: duplicate entry for n={rec.n}, kind={rec.kind} "
                             f"(first on line {seen[key]})")
        seen[key] = line
        out.append(rec)
    return out


def cache_write(path, records) -> None:
    """Write atomically: a temporary file in the same directory is renamed over ``path``."""
    path = Path(path)
    records = sorted(records, key=lambda r: (r.kind, r.n))
    keys = [(r.n, r.kind) for r in records]
    if len(set(keys)) != len(keys):
        raise CacheError("refusing to write duplicate (n, kind) records")
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(HEADER)
            for r in records:
                w.writerow((r.n, r.kind, r.m, r.witness_degree_count, r.tool_version))
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise

"""Integer partitions: validation, conjugation, hook lengths and counting."""
from __future__ import annotations

from typing import Callable, Iterable, Iterator

import numpy as np

from .errors import InvalidParameter, InvalidPartition

# above this many cells hook lengths are accumulated row-by-row with numpy
_NUMPY_HOOK_THRESHOLD = 4096


class Partition(tuple):
    """A non-increasing tuple of positive integers.

    Being a tuple, a partition hashes, compares and unpacks like one; the
    constructor validates its argument and strips trailing zeros.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for k, x in enumerate(parts):
            if x < 0:
                raise InvalidPartition(f"negative part {x} in {parts}")
            if x == 0:
                raise InvalidPartition(f"zero part before a positive one in {parts}")
            if k and parts[k - 1] < x:
                raise InvalidPartition(f"parts not non-increasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        return super().__new__(cls, parts)

    def __repr__(self):
        return "Partition(" + ",".join(map(str, self)) + ")"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def rows(self) -> int:
        return len(self)

    @property
    def cols(self) -> int:
        return self[0] if self else 0


def make_partition(parts: Iterable[int]) -> Partition:
    return Partition(parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"5,3,3,2"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise InvalidPartition(f"not a comma-separated list of integers: {text!r}") from None
    return Partition(parts)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    conj = []
    i = len(lam)
    for j in range(1, lam[0] + 1):
        while lam[i - 1] < j:
            i -= 1
        conj.append(i)
    return Partition._trusted(conj)


def t_sum(lam: Partition) -> int:
    """Number of rows plus number of columns."""
    return len(lam) + (lam[0] if lam else 0)


def is_self_conjugate(lam: Partition) -> bool:
    return conjugate(lam) == lam


class HookKey:
    """Canonical form of a hook-length multiset.

    Stored as a histogram: ``counts[h - 1]`` is the number of cells with hook
    length ``h``. Two keys are equal exactly when the multisets are.
    """

    __slots__ = ("counts", "_hash")

    def __init__(self, counts: Iterable[int]):
        counts = list(counts)
        while counts and counts[-1] == 0:
            counts.pop()
        self.counts = tuple(int(c) for c in counts)
        self._hash = hash(self.counts)

    @classmethod
    def from_hooks(cls, hooks: Iterable[int]) -> "HookKey":
        hooks = list(hooks)
        counts = [0] * (max(hooks, default=0))
        for h in hooks:
            counts[h - 1] += 1
        return cls(counts)

    @property
    def hooks(self) -> tuple[int, ...]:
        """The multiset as a non-increasing tuple."""
        out = []
        for h in range(len(self.counts), 0, -1):
            out.extend([h] * self.counts[h - 1])
        return tuple(out)

    def __len__(self):
        return sum(self.counts)

    def __eq__(self, other):
        if not isinstance(other, HookKey):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if len(self) <= 20:
            return f"HookKey{self.hooks}"
        return f"HookKey(<{len(self)} hooks, max {len(self.counts)}>)"


def iter_hooks(lam: Partition) -> Iterator[int]:
    """Yield hook lengths row by row."""
    conj = conjugate(lam)
    for i, row in enumerate(lam):
        base = row - i - 1
        for j in range(row):
            yield base - j + conj[j]


def hook_multiset(lam: Partition) -> HookKey:
    n = sum(lam)
    if n <= _NUMPY_HOOK_THRESHOLD:
        return HookKey.from_hooks(iter_hooks(lam))
    conj = np.asarray(conjugate(lam), dtype=np.int64)
    ramp = np.arange(lam[0], dtype=np.int64)
    top = lam[0] + len(lam) - 1
    counts = np.zeros(top + 1, dtype=np.int64)
    for i, row in enumerate(lam):
        hooks = conj[:row] - ramp[:row] + (row - i - 1)
        counts += np.bincount(hooks, minlength=top + 1)
    return HookKey(counts[1:].tolist())


def hook_product(lam: Partition) -> int:
    prod = 1
    for h in iter_hooks(lam):
        prod *= h
    return prod


def iter_partitions(n: int, first_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in descending lexicographic order.

    With ``first_part`` given, only partitions whose largest part equals it
    are produced; the ranges for different first parts are disjoint and
    together cover every partition of ``n``.
    """
    if n < 0:
        raise InvalidParameter(f"n must be non-negative, got {n}")
    if n == 0:
        if first_part in (None, 0):
            yield Partition()
        return
    if first_part is not None:
        if not 1 <= first_part <= n:
            return
        head = first_part
    else:
        head = n
    # largest partition of n with first part `head`
    a = [head]
    rest = n - head
    while rest:
        x = min(head, rest)
        a.append(x)
        rest -= x
    while True:
        yield Partition._trusted(a)
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        if first_part is not None and len(a) == 1:
            return
        x = a.pop() - 1
        rem = ones + 1
        a.append(x)
        while rem > x:
            a.append(x)
            rem -= x
        if rem:
            a.append(rem)


def enumerate_partitions(n: int, consumer: Callable[[Partition], object] | None = None,
                         first_part: int | None = None) -> int:
    """Feed every partition of ``n`` to ``consumer``; return how many were visited."""
    count = 0
    for lam in iter_partitions(n, first_part):
        if consumer is not None:
            consumer(lam)
        count += 1
    return count


_p_cache = [1]


def count_partitions(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        raise InvalidParameter(f"n must be non-negative, got {n}")
    p = _p_cache
    for m in range(len(p), n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            g2 = g1 + k
            term = p[m - g1] + (p[m - g2] if g2 <= m else 0)
            total += term if k & 1 else -term
            k += 1
        p.append(total)
    return p[n]


_s_cache: list[int] = []


def count_self_conjugate(n: int) -> int:
    """Number of self-conjugate partitions of ``n``.

    Equals the number of partitions of ``n`` into distinct odd parts.
    """
    if n < 0:
        raise InvalidParameter(f"n must be non-negative, got {n}")
    if len(_s_cache) <= n:
        size = max(n + 1, 2 * len(_s_cache))
        coeffs = [0] * size
        coeffs[0] = 1
        for part in range(1, size, 2):
            for m in range(size - 1, part - 1, -1):
                coeffs[m] += coeffs[m - part]
        _s_cache[:] = coeffs
    return _s_cache[n]


def iter_self_conjugate(n: int) -> Iterator[Partition]:
    """Self-conjugate partitions of ``n``, built from distinct odd diagonal hooks."""

    def rec(rem, max_hook, hooks):
        if rem == 0:
            yield hooks
            return
        h = min(max_hook, rem)
        if h % 2 == 0:
            h -= 1
        while h >= 1:
            yield from rec(rem - h, h - 2, hooks + [h])
            h -= 2

    for hooks in rec(n, n, []):
        # diagonal hook k (0-based) has arm = leg = (h - 1) / 2
        r = len(hooks)
        arms = [(h - 1) // 2 for h in hooks]
        rows = [arms[k] + k + 1 for k in range(r)]
        legs_end = [arms[k] + k + 1 for k in range(r)]
        parts = list(rows)
        depth = legs_end[0] if legs_end else 0
        for i in range(r, depth):
            parts.append(sum(1 for k in range(r) if legs_end[k] > i))
        yield Partition(parts)


def seed_partition(t: int, s: int) -> Partition:
    """A partition with ``t_sum == t`` and size ``s`` that is not self-conjugate.

    Uses ``(t-1)/2`` rows and ``(t+1)/2`` columns. The starting shape is the
    hook of size ``t-1``; rows 2, 3, ... are then filled up to the full width
    until the size reaches ``s``. Since rows != columns the result can never
    equal its conjugate.
    """
    if t < 3 or t % 2 == 0:
        raise InvalidParameter(f"t must be odd and at least 3, got {t}")
    lo, hi = t - 1, (t * t - 1) // 4
    if not lo <= s <= hi:
        raise InvalidParameter(f"size {s} outside [{lo}, {hi}] for t={t}")
    r, c = (t - 1) // 2, (t + 1) // 2
    parts = [c] + [1] * (r - 1)
    extra = s - lo
    for k in range(1, r):
        add = min(extra, c - 1)
        parts[k] += add
        extra -= add
    return Partition._trusted(parts)

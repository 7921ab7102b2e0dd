"""Character degrees of symmetric and alternating groups and their censuses."""
from __future__ import annotations

import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

from .errors import CensusTooLarge, InvalidParameter, InvalidPartition
from .partitions import (
    Partition,
    count_partitions,
    count_self_conjugate,
    hook_product,
    iter_hooks,
    iter_self_conjugate,
)

DEFAULT_MAX_N = 60

Kind = Literal["symmetric", "alternating"]


def degree(lam: Partition) -> int:
    """Degree of the irreducible character of S_n labelled by ``lam`` (hook length formula)."""
    if not lam:
        raise InvalidPartition("degree is undefined for the empty partition")
    return math.factorial(sum(lam)) // hook_product(lam)


def smallest_prime_factors(limit: int) -> list[int]:
    spf = list(range(limit + 1))
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def degree_factorization(lam: Partition) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``degree(lam)`` as sorted ``(p, e)`` pairs.

    Exponents of n! come from Legendre's formula, those of the hook product
    from a smallest-prime-factor sieve; no large integer is ever formed.
    """
    if not lam:
        raise InvalidPartition("degree is undefined for the empty partition")
    n = sum(lam)
    spf = smallest_prime_factors(n)
    exps: Counter[int] = Counter()
    for p in range(2, n + 1):
        if spf[p] == p:
            e, q = 0, n
            while q:
                q //= p
                e += q
            exps[p] = e
    for h in iter_hooks(lam):
        while h > 1:
            p = spf[h]
            exps[p] -= 1
            h //= p
    return tuple((p, e) for p, e in sorted(exps.items()) if e)


@dataclass(frozen=True)
class DegreeCensus:
    n: int
    kind: Kind
    entries: dict[int, int] = field(repr=False)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def items(self):
        return self.entries.items()

    def sum_of_squares(self) -> int:
        return sum(c * d * d for d, c in self.entries.items())


def _hook_products_first_part(n: int, a: int) -> Counter:
    """Counter of hook products over partitions of n with largest part ``a``.

    Rows are laid down from the bottom; a new top row never changes the hooks
    of cells beneath it, so the product is extended one row at a time.
    """
    out: Counter = Counter()
    rest = n - a

    def close(heights, prod):
        w = len(heights)
        row = 1
        for j in range(a):
            row *= a - j + (heights[j] if j < w else 0)
        out[prod * row] += 1

    def grow(remaining, low, heights, prod):
        if remaining == 0:
            close(heights, prod)
            return
        w = len(heights)
        top = min(a, remaining)
        for p in range(low, top + 1):
            left = remaining - p
            if left and left < p:
                continue
            row = 1
            new = list(heights)
            for j in range(p):
                hj = heights[j] if j < w else 0
                row *= p - j + hj
                if j < w:
                    new[j] = hj + 1
                else:
                    new.append(1)
            grow(left, p, new, prod * row)

    grow(rest, 1, [], 1)
    return out


def _products_to_degrees(n: int, products: Counter) -> dict[int, int]:
    nf = math.factorial(n)
    out: Counter = Counter()
    for prod, c in products.items():
        d, r = divmod(nf, prod)
        assert r == 0, "hook product does not divide n!"
        out[d] += c
    return dict(sorted(out.items()))


def _symmetric_products(n: int, threads: int) -> Counter:
    firsts = list(range(n, 0, -1))
    total: Counter = Counter()
    if threads > 1 and n >= 30:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_hook_products_first_part, [n] * len(firsts), firsts))
    else:
        parts = [_hook_products_first_part(n, a) for a in firsts]
    for c in parts:
        total.update(c)
    return total


def _check_n(n: int, max_n: int | None) -> None:
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n > cap:
        raise CensusTooLarge(f"n={n} exceeds the census cap {cap}; raise it explicitly to proceed")


def default_threads() -> int:
    return max(1, os.cpu_count() or 1)


def symmetric_census(n: int, *, max_n: int | None = None, threads: int = 1) -> DegreeCensus:
    if n < 1:
        raise InvalidParameter(f"symmetric census needs n >= 1, got {n}")
    _check_n(n, max_n)
    entries = _products_to_degrees(n, _symmetric_products(n, threads))
    return DegreeCensus(n, "symmetric", entries)


def alternating_census(n: int, *, max_n: int | None = None, threads: int = 1) -> DegreeCensus:
    """Degree census of A_n by restriction from S_n.

    A conjugate pair {lam, lam'} restricts to one irreducible of the same
    degree; a self-conjugate lam splits into two of half the degree.
    """
    if n < 3:
        raise InvalidParameter(f"alternating census needs n >= 3, got {n}")
    _check_n(n, max_n)
    sym = symmetric_census(n, max_n=max_n, threads=threads).entries
    paired = Counter(sym)
    split: Counter = Counter()
    for lam in iter_self_conjugate(n):
        d = degree(lam)
        assert d % 2 == 0, f"self-conjugate {lam} has odd degree {d}"
        paired[d] -= 1
        split[d // 2] += 2
    out: Counter = Counter()
    for d, c in paired.items():
        assert c % 2 == 0, f"unpaired non-self-conjugate degree {d}"
        if c:
            out[d] += c // 2
    out.update(split)
    return DegreeCensus(n, "alternating", dict(sorted(out.items())))


def census(n: int, kind: Kind = "symmetric", **kw) -> DegreeCensus:
    if kind == "symmetric":
        return symmetric_census(n, **kw)
    if kind == "alternating":
        return alternating_census(n, **kw)
    raise InvalidParameter(f"unknown census kind {kind!r}")


def max_multiplicity(c: DegreeCensus) -> tuple[int, list[int]]:
    """The largest multiplicity and every degree attaining it, ascending."""
    if not c.entries:
        raise InvalidParameter("empty census")
    m = max(c.entries.values())
    return m, sorted(d for d, k in c.entries.items() if k == m)


def expected_total(n: int, kind: Kind) -> int:
    p = count_partitions(n)
    if kind == "symmetric":
        return p
    return (p + 3 * count_self_conjugate(n)) // 2


HR_A = math.pi * math.sqrt(2 / 3)
HR_B = 4 * math.sqrt(3)


def hardy_ramanujan_estimate(n: int) -> float:
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")
    return math.exp(HR_A * math.sqrt(n)) / (HR_B * n)

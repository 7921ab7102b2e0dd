"""Slow, independent reference implementations used only by the tests."""
from functools import lru_cache


def brute_partitions(n, max_part=None):
    """All partitions of n as tuples, by plain recursion (no ordering promised)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(1, min(n, max_part) + 1):
        for rest in brute_partitions(n - first, first):
            out.append((first,) + rest)
    return out


def coin_change_count(n):
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            ways[m] += ways[m - part]
    return ways[n]


def diagram_hooks(parts):
    """Hook lengths counted cell by cell on the set of diagram cells."""
    cells = {(r, c) for r, row in enumerate(parts) for c in range(row)}
    hooks = []
    for r, c in cells:
        arm = sum(1 for cc in range(c + 1, parts[r]))
        leg = sum(1 for rr in range(r + 1, len(parts)) if (rr, c) in cells)
        hooks.append(arm + leg + 1)
    return sorted(hooks, reverse=True)


def transpose(parts):
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > j) for j in range(parts[0]))


@lru_cache(maxsize=None)
def count_syt(parts):
    """Number of standard Young tableaux, by removing the largest entry."""
    if sum(parts) <= 1:
        return 1
    total = 0
    for i, x in enumerate(parts):
        if i + 1 == len(parts) or parts[i + 1] < x:
            smaller = list(parts)
            smaller[i] -= 1
            total += count_syt(tuple(v for v in smaller if v))
    return total


def brute_totient(n):
    from math import gcd
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)

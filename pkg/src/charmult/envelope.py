"""Enveloping partitions and families of partitions sharing one hook multiset.

Gluing ``lam`` around a square of side ``t = t_sum(lam)`` and then widening
the first ``t`` rows preserves equality of hook multisets. Starting from a
conjugate pair and iterating doubles the family at every round, which gives
explicit sizes ``n`` for which S_n has ``2**i`` characters of equal degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import (
    BelowBound,
    DistinctnessViolation,
    InvalidParameter,
    InvalidPartition,
    NoSeedFound,
    SelfConjugateSeed,
)
from .partitions import HookKey, Partition, conjugate, hook_multiset, seed_partition, t_sum


def envelope(lam: Partition) -> Partition:
    if not lam:
        raise InvalidPartition("envelope of the empty partition is undefined")
    conj = conjugate(lam)
    r = len(lam)
    t = r + lam[0]
    rows = [t + x for x in lam]
    rows += [t - conj[t - i] for i in range(r + 1, t + 1)]
    rows += list(lam)
    return Partition._trusted(rows)


def envelope_incremented(lam: Partition, inc: int) -> Partition:
    """``envelope(lam)`` with its first ``t_sum(lam)`` rows widened by ``inc``."""
    if inc < 0:
        raise InvalidParameter(f"increment must be non-negative, got {inc}")
    env = envelope(lam)
    t = t_sum(lam)
    return Partition._trusted([x + inc for x in env[:t]] + list(env[t:]))


@dataclass(frozen=True)
class IterateParameters:
    t0: int
    n0: int
    i: int
    t_i: int
    n_i: int


def iterate_parameters(t: int, n: int, i: int) -> IterateParameters:
    """Row-plus-column sum and size after ``i - 1`` unit-increment envelopes.

    The integer recurrences are authoritative; the closed forms are evaluated
    in rationals and must agree.
    """
    if t < 2 or n < 1 or i < 1:
        raise InvalidParameter(f"need t >= 2, n >= 1, i >= 1; got t={t}, n={n}, i={i}")
    ti, ni = t, n
    for _ in range(i - 1):
        ti, ni = 3 * ti + 1, ni + ti + ti * ti
    t_closed = 3 ** (i - 1) * t + Fraction(3 ** (i - 1) - 1, 2)
    n_closed = n + Fraction((4 * t * t + 4 * t + 1) * (9 ** (i - 1) - 1), 32) - Fraction(i - 1, 4)
    assert t_closed == ti and n_closed == ni, "closed form disagrees with recurrence"
    return IterateParameters(t, n, i, ti, ni)


@dataclass(frozen=True)
class WitnessFamily:
    members: tuple[Partition, ...]
    common_size: int
    common_hooks: HookKey
    depth: int
    seed: Partition
    last_increment: int

    def __len__(self):
        return len(self.members)


def family(lam: Partition, i: int, last_increment: int = 1) -> WitnessFamily:
    """Build and verify ``2**i`` distinct partitions with one hook multiset."""
    lam = Partition(lam)
    if i < 1 or last_increment < 1:
        raise InvalidParameter("depth and last increment must both be at least 1")
    conj = conjugate(lam)
    if conj == lam:
        raise SelfConjugateSeed(f"{lam!r} is self-conjugate")
    members = [lam, conj]
    for k in range(1, i):
        inc = last_increment if k == i - 1 else 1
        nxt = []
        for mu in members:
            e = envelope_incremented(mu, inc)
            nxt += [e, conjugate(e)]
        members = nxt
    if len(set(members)) != len(members):
        raise DistinctnessViolation(f"coinciding members at depth {i} from seed {lam!r}")
    sizes = {sum(mu) for mu in members}
    keys = {hook_multiset(mu) for mu in members}
    # equal hooks across the family is a theorem; a failure here is a bug
    assert len(sizes) == 1 and len(keys) == 1, "family members disagree on size or hooks"
    return WitnessFamily(tuple(members), sizes.pop(), keys.pop(), i, lam,
                         last_increment if i > 1 else 1)


def _bound_fraction(i: int) -> Fraction:
    return Fraction(15 - 16 * 3 ** (i - 1) + 1025 * 9 ** (i - 2) + 1584 * 27 ** (i - 2)
                    + 576 * 81 ** (i - 2) - 8 * i, 32)


def bound_N(i: int) -> int:
    """Least n from which ``witness_for(n, i)`` is guaranteed to succeed."""
    if i < 2:
        raise InvalidParameter(f"bound_N needs i >= 2, got {i}")
    return ceil(_bound_fraction(i))


def seed_width(i: int) -> int:
    """Row-plus-column sum used for seeds at depth ``i >= 2``."""
    return 5 + 4 * 3 ** (i - 2)


def witness_for(n: int, i: int) -> WitnessFamily:
    """``2**i`` distinct partitions of exactly ``n`` with one hook multiset."""
    if i < 1:
        raise InvalidParameter(f"depth must be at least 1, got {i}")
    if i == 1:
        if n < 3:
            raise BelowBound(f"depth 1 needs n >= 3, got {n}")
        return family(Partition([n]), 1)
    bound = bound_N(i)
    if n < bound:
        raise BelowBound(f"n={n} is below the guaranteed threshold {bound} for depth {i}")
    t = seed_width(i)
    lo, hi = t - 1, (t * t - 1) // 4
    modulus = iterate_parameters(t, lo, i - 1).t_i
    assert (t * t - 4 * t + 7) // 4 >= modulus, "seed sizes do not cover every residue"
    offset = iterate_parameters(t, lo, i).n_i - lo
    for s in range(lo, hi + 1):
        base = s + offset
        if base <= n and (n - base) % modulus == 0:
            j = (n - base) // modulus
            return family(seed_partition(t, s), i, 1 + j)
    raise NoSeedFound(f"no seed size reaches n={n} at depth {i}")

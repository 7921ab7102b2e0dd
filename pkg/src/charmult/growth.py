"""Representation growth of direct products of alternating groups.

For a product of alternating groups the irreducible degrees are products of
one degree per factor, so the degree census of the product is the Dirichlet
convolution of the factor censuses. When each degree exceeds the factorial
product of all earlier ones (the gap condition), representations below
``n_i - 1`` only come from the first ``i - 1`` factors.
"""
from __future__ import annotations

import bisect
import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable

from .census import DEFAULT_MAX_N, alternating_census
from .errors import (
    BeyondCutoff,
    CutoffTooDeep,
    DomainError,
    InvalidParameter,
    OracleNotDivergent,
)
from .partitions import count_partitions, count_self_conjugate

DEFAULT_BIT_CAP = 1 << 20
LOG2_E = math.log2(math.e)


def k_alternating(n: int) -> int:
    """Number of conjugacy classes (equivalently irreducible characters) of A_n."""
    if n < 3:
        raise InvalidParameter(f"k_alternating needs n >= 3, got {n}")
    return (count_partitions(n) + 3 * count_self_conjugate(n)) // 2


def min_nontrivial_degree(n: int) -> int:
    """Smallest degree > 1 of an irreducible character of A_n (n >= 5)."""
    if n == 5:
        return 3
    return n - 1


def log2_int(x: int) -> float:
    """log2 of a positive integer of any size, to double precision."""
    if x <= 0:
        raise DomainError(f"log2 of non-positive {x}")
    bl = x.bit_length()
    if bl <= 1000:
        return math.log2(x)
    shift = bl - 64
    return shift + math.log2(x >> shift)


@dataclass(frozen=True)
class ScaledInteger:
    """A natural number kept exactly while small, otherwise only as log2.

    Numbers whose log2 no longer fits a double keep ``log2_log2`` instead and
    report ``log2_approx`` as infinity.
    """

    exact: int | None
    log2_approx: float
    log2_log2: float | None = None

    def __post_init__(self):
        if self.log2_log2 is None and 0 < self.log2_approx < math.inf:
            object.__setattr__(self, "log2_log2", math.log2(self.log2_approx))

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @classmethod
    def of(cls, x: int, bit_cap: int = DEFAULT_BIT_CAP) -> "ScaledInteger":
        if x.bit_length() <= bit_cap:
            return cls(x, log2_int(x))
        return cls(None, log2_int(x))

    @classmethod
    def from_log2(cls, value: float) -> "ScaledInteger":
        return cls(None, float(value))

    @classmethod
    def from_log2_log2(cls, value: float) -> "ScaledInteger":
        if value < 1000:
            return cls(None, 2.0 ** value, float(value))
        return cls(None, math.inf, float(value))

    def to_json(self):
        log2 = self.log2_approx if math.isfinite(self.log2_approx) else None
        return {"exact": self.exact, "log2": log2, "log2_log2": self.log2_log2, "is_exact": self.is_exact}

    def __str__(self):
        if self.is_exact:
            return str(self.exact)
        if math.isfinite(self.log2_approx):
            return f"2^{self.log2_approx:.6g}"
        return f"2^2^{self.log2_log2:.6g}"


def log2_factorial(n) -> float:
    """log2(n!) for an int or ScaledInteger, via lgamma; error far below one bit."""
    if isinstance(n, ScaledInteger):
        if n.is_exact:
            return log2_factorial(n.exact)
        if n.log2_approx > 1000:
            raise DomainError(f"n = {n} is too large even for log-scale factorials")
        return math.lgamma(2.0 ** n.log2_approx + 1) * LOG2_E
    if n.bit_length() > 1000:
        raise DomainError("n too large for log-scale factorials")
    return math.lgamma(n + 1) * LOG2_E


def log2_log2_factorial(n) -> float:
    """log2(log2(n!)) for n >= 3, usable where log2(n!) overflows a double.

    Uses log2(n!) = n (log2 n - log2 e) + O(log n), so the relative error in
    log2(n!) is below 1/log2(n).
    """
    lg = n.log2_approx if isinstance(n, ScaledInteger) else log2_int(n)
    if not math.isfinite(lg):
        raise DomainError(f"n = {n} is too large for doubly-logarithmic factorials")
    if lg < 1000:
        return math.log2(log2_factorial(n))
    return lg + math.log2(lg - LOG2_E)


def _log2_add(a: float, b: float) -> float:
    """log2(2^a + 2^b)."""
    hi, lo = max(a, b), min(a, b)
    return hi + math.log2(1 + 2.0 ** (lo - hi)) if hi - lo < 1100 else hi


def _as_log2(x) -> float:
    return x.log2_approx if isinstance(x, ScaledInteger) else log2_int(x)


def _exact_or_none(x) -> int | None:
    return x.exact if isinstance(x, ScaledInteger) else x


@dataclass(frozen=True)
class ProductGroupSpec:
    factors: tuple
    gap_certified: bool


def _exceeds(lhs, prefix_exact: int | None, prefix_log2: float) -> bool:
    """Whether ``lhs > prefix``, in exact or log-scale arithmetic.

    Log-scale comparisons need a margin of one bit either way; otherwise they
    are refused rather than guessed.
    """
    lhs_exact = _exact_or_none(lhs)
    if lhs_exact is not None and prefix_exact is not None:
        return lhs_exact > prefix_exact
    diff = _as_log2(lhs) - prefix_log2
    if diff > 1:
        return True
    if diff < -1:
        return False
    raise DomainError("log-scale gap comparison within the one-bit error margin")


def make_product_spec(factors: Iterable, bit_cap: int = DEFAULT_BIT_CAP) -> ProductGroupSpec:
    factors = tuple(factors)
    if not factors:
        raise InvalidParameter("need at least one factor")
    prev = None
    for f in factors:
        v = _exact_or_none(f)
        if v is not None and v < 5:
            raise InvalidParameter(f"factor {v} < 5 does not give a simple alternating group")
        if prev is not None:
            pv, fv = _exact_or_none(prev), v
            if pv is not None and fv is not None:
                if fv <= pv:
                    raise InvalidParameter("factors must be strictly ascending")
            elif _as_log2(f) <= _as_log2(prev):
                raise InvalidParameter("factors must be strictly ascending")
        prev = f
    certified = True
    prefix_exact: int | None = 1
    prefix_log2 = 0.0
    for k, f in enumerate(factors):
        if k and not _exceeds(f, prefix_exact, prefix_log2):
            certified = False
            break
        if k == len(factors) - 1:
            break
        prefix_log2 += log2_factorial(f)
        v = _exact_or_none(f)
        if prefix_exact is not None and v is not None and prefix_log2 <= bit_cap:
            prefix_exact *= math.factorial(v)
        else:
            prefix_exact = None
    return ProductGroupSpec(factors, certified)


@dataclass(frozen=True)
class GrowthSeries:
    spec: ProductGroupSpec
    cutoff: int
    jumps: tuple[tuple[int, int], ...]

    def __post_init__(self):
        degrees = [d for d, _ in self.jumps]
        acc, cum = 0, []
        for _, c in self.jumps:
            acc += c
            cum.append(acc)
        object.__setattr__(self, "_degrees", degrees)
        object.__setattr__(self, "_cum", cum)

    def _check(self, n: int):
        if n > self.cutoff:
            raise BeyondCutoff(f"n={n} exceeds the series cutoff {self.cutoff}")

    def r(self, n: int) -> int:
        self._check(n)
        k = bisect.bisect_left(self._degrees, n)
        if k < len(self._degrees) and self._degrees[k] == n:
            return self.jumps[k][1]
        return 0

    def R(self, n: int) -> int:
        self._check(n)
        k = bisect.bisect_right(self._degrees, n)
        return self._cum[k - 1] if k else 0


def r_at(series: GrowthSeries, n: int) -> int:
    return series.r(n)


def R_at(series: GrowthSeries, n: int) -> int:
    return series.R(n)


def convolve(a: dict[int, int], b: dict[int, int], cutoff: int) -> dict[int, int]:
    """Dirichlet convolution of two degree censuses, dropping degrees above ``cutoff``."""
    out: Counter = Counter()
    bs = sorted(b.items())
    for d1, c1 in a.items():
        for d2, c2 in bs:
            d = d1 * d2
            if d > cutoff:
                break
            out[d] += c1 * c2
    return dict(sorted(out.items()))


def degree_series(spec: ProductGroupSpec, cutoff: int, *, max_n: int | None = None,
                  censuses: dict[int, dict[int, int]] | None = None) -> GrowthSeries:
    """Exact r_n for n <= cutoff of the product of the alternating groups in ``spec``."""
    if cutoff < 0:
        raise InvalidParameter("cutoff must be non-negative")
    cap = DEFAULT_MAX_N if max_n is None else max_n
    acc = {1: 1} if cutoff >= 1 else {}
    for f in spec.factors:
        v = _exact_or_none(f)
        if v is None or min_nontrivial_degree(v) > cutoff:
            continue  # only the trivial character survives the cutoff
        if v > cap:
            raise CutoffTooDeep(f"A_{v} has degrees below the cutoff {cutoff} but exceeds the census cap {cap}")
        if censuses is not None and v in censuses:
            fac = censuses[v]
        else:
            fac = alternating_census(v, max_n=cap).entries
        acc = convolve(acc, fac, cutoff)
    return GrowthSeries(spec, cutoff, tuple(acc.items()))


def series_rows(series: GrowthSeries, sparse: bool = False) -> list[tuple[int, int, int]]:
    rows = []
    total = 0
    lookup = dict(series.jumps)
    for n in range(1, series.cutoff + 1):
        c = lookup.get(n, 0)
        total += c
        if c or not sparse:
            rows.append((n, c, total))
    return rows


# --- growth oracles and the slow-growth constructor --------------------------

def _ceil_loglog(x: int, base: int) -> int:
    """Exact ceil(log_b log_b x), clamped to 0 where log_b log_b x <= 0."""
    if x <= base:
        return 0
    k = 0
    # least k with x <= base ** (base ** k)
    while True:
        e = base ** k
        if e * math.log2(base) + 2 < x.bit_length() - 1:
            k += 1
            continue
        if x <= base ** e:
            return k
        k += 1


def make_oracle(name: str) -> Callable[[int], int]:
    """Divergent non-decreasing integer function from a fixed menu.

    ``ceil-log2-log2``, ``ceil-log10-log10``, ``identity`` or ``poly:K``
    (meaning n**K).
    """
    if name == "ceil-log2-log2":
        return lambda x: _ceil_loglog(x, 2)
    if name == "ceil-log10-log10":
        return lambda x: _ceil_loglog(x, 10)
    if name == "identity":
        return lambda x: x
    if name.startswith("poly:"):
        try:
            k = int(name[5:])
        except ValueError:
            raise InvalidParameter(f"bad polynomial oracle {name!r}") from None
        if k < 1:
            raise InvalidParameter("polynomial oracle needs exponent >= 1")
        return lambda x: x ** k
    raise InvalidParameter(f"unknown oracle {name!r}")


@dataclass(frozen=True)
class SlowGrowthStep:
    i: int
    n: ScaledInteger
    R_value: int | None  # R at n - 2, the product of earlier k(A_{n_j})
    f_value: int | None  # f(n - 2)

    @property
    def certified(self) -> bool:
        return self.R_value is not None and self.f_value is not None and self.R_value < self.f_value


def _least_satisfying(pred: Callable[[int], bool], lo: int, bit_cap: int, budget: int) -> int:
    if pred(lo):
        return lo
    step = 1
    steps = 0
    while not pred(lo + step):
        step *= 2
        steps += 1
        if steps > budget or (lo + step).bit_length() > bit_cap:
            raise OracleNotDivergent("growth oracle did not exceed the target within the search budget")
    a, b = lo + step // 2, lo + step  # pred(a) false (or a == lo), pred(b) true
    while b - a > 1:
        mid = (a + b) // 2
        if pred(mid):
            b = mid
        else:
            a = mid
    return b


def slow_growth_sequence(f: Callable[[int], int], i_max: int, bit_cap: int = DEFAULT_BIT_CAP,
                         budget: int = 100_000, partition_limit: int = 20_000) -> list[SlowGrowthStep]:
    """Degrees n_1 = 7 < n_2 < ... defining a product with R_{n_i - 2} < f(n_i - 2).

    Each exact ``n_{i+1}`` is the least integer with both
    ``n_{i+1} > prod_{j<=i} n_j!`` and ``f(n_{i+1} - 2) > prod_{j<=i} k(A_{n_j})``.
    Once a quantity outgrows ``bit_cap`` (or k(A_n) is out of reach) the
    remaining terms carry only the log2 of the gap bound and no certificate.
    """
    if i_max < 1:
        raise InvalidParameter("i_max must be at least 1")
    steps = [SlowGrowthStep(1, ScaledInteger.of(7), None, None)]
    gap_exact: int | None = 1
    gap_loglog = -math.inf  # log2 log2 of the running factorial product
    k_prod: int | None = 1
    for i in range(1, i_max):
        cur = steps[-1].n
        gap_loglog = _log2_add(gap_loglog, log2_log2_factorial(cur))
        if gap_exact is not None and cur.is_exact and gap_loglog <= math.log2(bit_cap):
            gap_exact *= math.factorial(cur.exact)
        else:
            gap_exact = None
        if k_prod is not None and cur.is_exact and cur.exact <= partition_limit:
            k_prod *= k_alternating(cur.exact)
        else:
            k_prod = None
        if gap_exact is None or k_prod is None:
            steps.append(SlowGrowthStep(i + 1, ScaledInteger.from_log2_log2(gap_loglog), None, None))
            continue
        target = k_prod
        n_next = _least_satisfying(lambda n: f(n - 2) > target, gap_exact + 1, bit_cap, budget)
        steps.append(SlowGrowthStep(i + 1, ScaledInteger.of(n_next, bit_cap), target, f(n_next - 2)))
    return steps


def is_minimal_step(f: Callable[[int], int], step: SlowGrowthStep, gap_bound: int) -> bool:
    """``n - 1`` violates the gap condition or the growth condition."""
    n = step.n.exact - 1
    return n <= gap_bound or not f(n - 2) > step.R_value


# --- reference curves --------------------------------------------------------

@dataclass(frozen=True)
class BoundCurve:
    kind: str  # prop2 | pyber | pro-p-R | pro-p-r
    c: float = 1.0
    eps: float = 0.5
    p: int = 2


CURVE_KINDS = ("prop2", "pyber", "pro-p-R", "pro-p-r")


def _ln(n) -> float:
    if isinstance(n, int):
        if n <= 0:
            raise DomainError(f"log of non-positive {n}")
        return math.log(n)
    if n <= 0:
        raise DomainError(f"log of non-positive {n}")
    return math.log(n)


def bound_curve_value(curve: BoundCurve, n) -> float:
    """Evaluate a reference lower-bound curve at ``n``.

    prop2:   c log n (log log n)^(1-eps),       needs n > e
    pyber:   2^(c (log n)^(1/8)),               needs n > 1
    pro-p-R: c n log_p n / log_p log_p n,       needs n > p
    pro-p-r: 2c log_p n / log_p log_p n,        needs n > p
    """
    kind = curve.kind
    if kind == "prop2":
        ln_n = _ln(n)
        if ln_n <= 1:
            raise DomainError("prop2 needs log log n > 0")
        return curve.c * ln_n * math.log(ln_n) ** (1 - curve.eps)
    if kind == "pyber":
        ln_n = _ln(n)
        if ln_n <= 0:
            raise DomainError("pyber needs n > 1")
        return 2.0 ** (curve.c * ln_n ** 0.125)
    if kind in ("pro-p-R", "pro-p-r"):
        if curve.p < 2:
            raise DomainError("p must be a prime >= 2")
        lp = _ln(n) / math.log(curve.p)
        if lp <= 1:
            raise DomainError(f"{kind} needs log_p log_p n > 0")
        ratio = lp / (math.log(lp) / math.log(curve.p))
        return curve.c * n * ratio if kind == "pro-p-R" else 2 * curve.c * ratio
    raise InvalidParameter(f"unknown curve kind {kind!r}")

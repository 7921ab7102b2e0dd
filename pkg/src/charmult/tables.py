"""Maximal degree multiplicities for the other finite simple groups.

Sporadic values are a plain lookup. Exceptional groups of Lie type carry
exact polynomials (in ``q``, or in ``q**2`` for the Suzuki and Ree families)
for the degree attaining the maximal multiplicity and for the multiplicity
itself, with a handful of small-``q`` overrides. Classical groups only have
lower bounds, built on Euler's totient.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import DomainError, InvalidParameter, UnknownGroup

SPORADIC = {
    "M11": 3, "M12": 3, "M22": 2, "M23": 3, "M24": 3, "HS": 3, "J2": 2,
    "Co1": 2, "Co2": 3, "Co3": 3, "McL": 2, "Suz": 3, "He": 3, "HN": 3,
    "Th": 2, "Fi22": 4, "Fi23": 3, "Fi24'": 2, "B": 2, "M": 3, "J1": 3,
    "ON": 3, "J3": 3, "Ru": 3, "J4": 3, "Ly": 5, "T": 2,
}


def sporadic_multiplicity(name: str) -> int:
    try:
        return SPORADIC[name]
    except KeyError:
        raise UnknownGroup(f"no sporadic group named {name!r}") from None


# --- exact polynomial expressions -------------------------------------------

class Poly(tuple):
    """Integer polynomial as ``((exponent, coefficient), ...)``, highest first."""

    __slots__ = ()

    def __new__(cls, *terms):
        return super().__new__(cls, tuple(sorted(terms, reverse=True)))

    def __call__(self, x: int) -> int:
        return sum(c * x ** e for e, c in self)

    def render(self, var: str = "q", scale: int = 1) -> str:
        out = []
        for e, c in self:
            e *= scale
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            mag = abs(c)
            body = (str(mag) if mono == "" or mag != 1 else "") + mono
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out) or "0"


def qk(k: int, sign: int = -1) -> Poly:
    """``q^k - 1`` (or ``q^k + 1``)."""
    return Poly((k, 1), (0, sign))


@dataclass(frozen=True)
class Expr:
    """``prod(num) / (prod(den) * divisor * gcd(gcd_poly(q), gcd_mod))``."""

    num: tuple[Poly, ...]
    den: tuple[Poly, ...] = ()
    divisor: int = 1
    gcd_term: tuple[Poly, int] | None = None

    def evaluate(self, x: int) -> Fraction:
        top = math.prod(p(x) for p in self.num)
        bottom = math.prod(p(x) for p in self.den) * self.divisor
        if self.gcd_term is not None:
            poly, mod = self.gcd_term
            bottom *= math.gcd(poly(x), mod)
        return Fraction(top, bottom)

    def render(self, scale: int = 1) -> str:
        def wrap(p):
            s = p.render(scale=scale)
            return s if len(p) == 1 and p[0][1] == 1 else f"({s})"

        text = "".join(wrap(p) for p in self.num)
        den = "".join(wrap(p) for p in self.den)
        extra = []
        if self.divisor != 1:
            extra.append(str(self.divisor))
        if self.gcd_term is not None:
            poly, mod = self.gcd_term
            extra.append(f"gcd({poly.render(scale=scale)},{mod})")
        if den or extra:
            text += "/" + den + ("" if not extra else "".join(extra) if not den else "·" + "".join(extra))
        return text


Q = Poly((1, 1))
Q2 = Poly((2, 1))
Q4 = Poly((4, 1))


@dataclass(frozen=True)
class LieTypeEntry:
    family: str
    parity: str
    degree: Expr
    mult: Expr
    alt_degree: Expr | None = None
    squared: bool = False  # polynomials are in q^2 = p^(2n+1)


def _entries() -> dict[tuple[str, str], LieTypeEntry]:
    e6_deg = Expr((qk(12), qk(9), qk(6), qk(5), qk(4)))
    e6t_deg = Expr((qk(18), qk(12), qk(10), qk(6), qk(4)), (qk(9), qk(5)))
    e7_deg = Expr((qk(18), qk(12), qk(10), qk(8), qk(7), qk(6), qk(2)))
    e7_alt = Expr((qk(18), qk(14), qk(12), qk(10), qk(8), qk(6), qk(2)), (qk(7),))
    e8_deg = Expr((qk(30), qk(24), qk(20), qk(18), qk(14), qk(12), qk(2)))
    d4_deg = Expr((qk(6), Poly((4, 1), (2, -1), (0, 1)), Poly((2, 1), (1, -1), (0, 1))))
    f4_deg = Expr((qk(12), qk(8), qk(2), Poly((2, 1), (1, -1), (0, 1))))
    f4_mult = Expr((Q2, qk(2)), divisor=6)
    rows = [
        # odd q
        LieTypeEntry("G2", "odd", Expr((qk(6),)), Expr((qk(1), qk(1)), divisor=2)),
        # Ree groups 2G2: evaluated at q^2 = 3^(2n+1)
        LieTypeEntry("2G2", "odd", Expr((Poly((3, 1), (0, 1)),)),
                     Expr((Poly((1, 1), (0, -3)),), divisor=2), squared=True),
        LieTypeEntry("3D4", "odd", d4_deg, Expr((Poly((4, 1), (1, -2), (0, 1)),), divisor=4)),
        LieTypeEntry("F4", "odd", f4_deg, f4_mult),
        LieTypeEntry("E6", "odd", e6_deg, Expr((qk(4), qk(2)), divisor=8, gcd_term=(qk(1), 3))),
        LieTypeEntry("2E6", "odd", e6t_deg,
                     Expr((qk(4), qk(2)), divisor=8, gcd_term=(qk(1, +1), 3))),
        LieTypeEntry("E7", "odd", e7_deg, Expr((Q, qk(6)), divisor=28), alt_degree=e7_alt),
        LieTypeEntry("E8", "odd", e8_deg,
                     Expr((qk(4), Poly((4, 5), (3, -2), (0, -7))), divisor=64)),
        # even q; Suzuki and Ree 2F4 evaluated at q^2 = 2^(2n+1)
        LieTypeEntry("2B2", "even", Expr((Poly((2, 1), (0, 1)),)),
                     Expr((Poly((1, 1), (0, -2)),), divisor=2), squared=True),
        LieTypeEntry("G2", "even", Expr((qk(6),)), Expr((Q, Poly((1, 1), (0, -2))), divisor=2)),
        LieTypeEntry("3D4", "even", d4_deg, Expr((Q, Poly((3, 1), (0, -2))), divisor=4)),
        LieTypeEntry("F4", "even", f4_deg, f4_mult),
        LieTypeEntry("2F4", "even",
                     Expr((Poly((12, 1), (0, -1)), Poly((2, 1), (0, 1))), (Poly((2, 1), (1, 1), (0, 1)),)),
                     Expr((Poly((1, 1)), Poly((1, 1), (0, -2))), divisor=4), squared=True),
        LieTypeEntry("E6", "even", e6_deg, Expr((Q4, qk(2)), divisor=8, gcd_term=(qk(1), 3))),
        LieTypeEntry("2E6", "even", e6t_deg, Expr((Q4, qk(2)), divisor=8, gcd_term=(qk(1, +1), 3))),
        LieTypeEntry("E7", "even", e7_deg, Expr((Q, qk(6)), divisor=14), alt_degree=e7_alt),
        LieTypeEntry("E8", "even", e8_deg, Expr((Q4, Poly((4, 5), (3, -2), (0, -8))), divisor=64)),
    ]
    return {(r.family, r.parity): r for r in rows}


LIE_TABLE = _entries()
EXCEPTIONAL_FAMILIES = ("G2", "2B2", "2G2", "3D4", "F4", "2F4", "E6", "2E6", "E7", "E8")
TWISTED_SQUARED = {"2B2": 2, "2G2": 3, "2F4": 2}


@dataclass(frozen=True)
class ExceptionEntry:
    family: str
    q: int
    label: str
    degree: int | None  # None: the generic degree stands
    mult_lo: int
    mult_hi: int


EXCEPTIONS = {
    (e.family, e.q): e
    for e in [
        ExceptionEntry("2B2", 8, "2B2(8)", 35, 3, 3),
        ExceptionEntry("3D4", 2, "3D4(2)", 351, 3, 3),
        ExceptionEntry("E6", 2, "E6(2)", 42826799925, 8, 8),
        ExceptionEntry("E6", 3, "E6(3)", 127752132719411200, 84, 84),
        ExceptionEntry("2E6", 2, "2E6(2)", 27498621150, 5, 5),
        ExceptionEntry("E7", 2, "E7(2)", 5070690584338804425, 9, 9),
        ExceptionEntry("F4", 2, "F4(2)", 541450, 4, 4),
        ExceptionEntry("G2", 2, "G2(2)'", 7, 3, 3),
        ExceptionEntry("G2", 3, "G2(3)", 91, 3, 3),
        ExceptionEntry("G2", 4, "G2(4)", 819, 7, 7),
        # unresolved: only bracketed
        ExceptionEntry("E7", 3, "E7(3)", None, 78, 80),
    ]
}


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``q == p**k`` and ``p`` prime, else ``None``."""
    if q < 2:
        return None
    from sympy import factorint

    f = factorint(q)
    if len(f) != 1:
        return None
    return next(iter(f.items()))


class ExceptionalValue(NamedTuple):
    group: str
    degree: int
    mult_lo: int
    mult_hi: int
    source: str

    @property
    def mult(self) -> int | tuple[int, int]:
        return self.mult_lo if self.mult_lo == self.mult_hi else (self.mult_lo, self.mult_hi)


def _check_family_q(family: str, q: int) -> str:
    if family not in EXCEPTIONAL_FAMILIES:
        raise UnknownGroup(f"no exceptional family {family!r}")
    pp = prime_power(q)
    if pp is None:
        raise InvalidParameter(f"q={q} is not a prime power")
    p, k = pp
    if family in TWISTED_SQUARED:
        want = TWISTED_SQUARED[family]
        if p != want or k % 2 == 0:
            raise InvalidParameter(f"{family} needs q^2 = {want}^(2n+1), got {q}")
        if k == 1:
            raise InvalidParameter(f"{family}({q}) is not simple (use the sporadic label T for 2F4(2)')")
    parity = "even" if p == 2 else "odd"
    if (family, parity) not in LIE_TABLE:
        raise InvalidParameter(f"{family} has no {parity}-q row")
    return parity


def _as_int(v: Fraction, what: str) -> int:
    if v.denominator != 1:
        raise DomainError(f"{what} evaluates to the non-integer {v}")
    return v.numerator


def generic_values(family: str, q: int) -> tuple[int, int]:
    """Table polynomials at ``q`` with no override applied."""
    parity = _check_family_q(family, q)
    row = LIE_TABLE[(family, parity)]
    return (_as_int(row.degree.evaluate(q), f"{family}({q}) degree"),
            _as_int(row.mult.evaluate(q), f"{family}({q}) multiplicity"))


def exceptional_multiplicity(family: str, q: int) -> ExceptionalValue:
    """Degree with the maximal multiplicity, and that multiplicity, for ``family(q)``.

    For 2B2, 2G2 and 2F4 the argument is the value of ``q**2``.
    """
    parity = _check_family_q(family, q)
    row = LIE_TABLE[(family, parity)]
    exc = EXCEPTIONS.get((family, q))
    if exc is not None and exc.degree is not None:
        return ExceptionalValue(exc.label, exc.degree, exc.mult_lo, exc.mult_hi, "exception")
    deg = _as_int(row.degree.evaluate(q), f"{family}({q}) degree")
    if exc is not None:
        return ExceptionalValue(exc.label, deg, exc.mult_lo, exc.mult_hi, "exception")
    mult = _as_int(row.mult.evaluate(q), f"{family}({q}) multiplicity")
    return ExceptionalValue(f"{family}({q})", deg, mult, mult, "generic")


def default_q_values(family: str) -> list[int]:
    if family == "2G2":
        return [27, 243]
    if family in TWISTED_SQUARED:
        return [8, 32, 128]
    out = []
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13):
        parity = "even" if q % 2 == 0 else "odd"
        if (family, parity) in LIE_TABLE:
            out.append(q)
    return out


TABLE_COLUMNS = ("family", "parity", "q", "degree", "multiplicity_lo", "multiplicity_hi", "source")


def table_rows(families: Iterable[str] | None = None, qs: Iterable[int] | None = None) -> list[tuple]:
    """Rows for the CSV table dump; ``"sporadic"`` selects the sporadic list."""
    families = list(families) if families is not None else ["sporadic", *EXCEPTIONAL_FAMILIES]
    rows = []
    for fam in families:
        if fam == "sporadic":
            rows += [(name, "", "", "", m, m, "sporadic") for name, m in SPORADIC.items()]
            continue
        for q in (list(qs) if qs is not None else default_q_values(fam)):
            v = exceptional_multiplicity(fam, q)
            parity = "even" if q % 2 == 0 else "odd"
            rows.append((fam, parity, q, v.degree, v.mult_lo, v.mult_hi, v.source))
    return rows


def table_csv(rows: list[tuple], header: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(TABLE_COLUMNS)
    w.writerows(rows)
    return buf.getvalue()


# --- classical groups --------------------------------------------------------

def euler_totient(n: int) -> int:
    if n < 1:
        raise InvalidParameter(f"totient needs n >= 1, got {n}")
    from sympy import factorint

    out = n
    for p in factorint(n):
        out = out // p * (p - 1)
    return out


CLASSICAL_FAMILIES = ("PSL", "PSU-even", "PSU-odd", "PSp", "POmega-odd", "POmega-plus", "POmega-minus")

_CLASSICAL_LABEL = {
    "PSL": "PSL_{d}({q})", "PSU-even": "PSU_{{2*{d}}}({q})", "PSU-odd": "PSU_{{2*{d}+1}}({q})",
    "PSp": "PSp_{{2*{d}}}({q})", "POmega-odd": "POmega_{{2*{d}+1}}({q})",
    "POmega-plus": "POmega+_{{2*{d}}}({q})", "POmega-minus": "POmega-_{{2*{d}+2}}({q})",
}


def _check_classical(family: str, d: int, q: int) -> None:
    if family not in CLASSICAL_FAMILIES:
        raise UnknownGroup(f"no classical family {family!r}")
    if d < 2:
        raise InvalidParameter(f"d must be at least 2, got {d}")
    if prime_power(q) is None:
        raise InvalidParameter(f"q={q} is not a prime power")


def classical_lower_bound(family: str, d: int, q: int) -> Fraction:
    """Lower bound on the maximal degree multiplicity of a classical group."""
    _check_classical(family, d, q)
    phi = euler_totient(q ** d - 1)
    den = {
        "PSL": d * d * (q - 1),
        "PSU-even": 4 * d * d,
        "PSU-odd": (2 * d + 1) ** 2,
        "PSp": 4 * d,
        "POmega-odd": 4 * d + 2,
        "POmega-plus": 4 * d,
        "POmega-minus": 4 * d + 4,
    }[family]
    return Fraction(phi, den)


def classical_order_estimate(family: str, d: int, q: int) -> Fraction:
    """Order-of-magnitude expression for ``|G|`` used by the growth indicator."""
    _check_classical(family, d, q)
    g = math.gcd
    num, den = {
        "PSL": (q ** (d * d - 1), g(q - 1, d)),
        "PSU-even": (q ** (4 * d * d - 1), g(q + 1, 2 * d)),
        "PSU-odd": (q ** (4 * d * (d + 1)), g(q + 1, 2 * d + 1)),
        "PSp": (q ** (2 * d * d + d), g(2, q - 1)),
        "POmega-odd": (q ** (2 * d * d + d), g(2, q - 1)),
        "POmega-plus": (q ** (2 * d * d - d), g(4, q ** d - 1)),
        "POmega-minus": (q ** (2 * d * d + d + 1), g(4, q ** (d + 1) + 1)),
    }[family]
    return Fraction(num, den)


def classical_label(family: str, d: int, q: int) -> str:
    return _CLASSICAL_LABEL[family].format(d=d, q=q)


# --- growth indicator --------------------------------------------------------

def ln(x) -> float:
    """Natural log of a positive int, Fraction or float, exact-input safe."""
    if isinstance(x, Fraction):
        if x <= 0:
            raise DomainError(f"log of non-positive {x}")
        return ln(x.numerator) - ln(x.denominator)
    if isinstance(x, int):
        if x <= 0:
            raise DomainError(f"log of non-positive {x}")
        return math.log(x)  # math.log accepts arbitrarily large ints
    if x <= 0:
        raise DomainError(f"log of non-positive {x}")
    return math.log(x)


def growth_indicator(m, order) -> float:
    """``log(log m + log log |G|) / log log |G|``, natural logarithms.

    Below 1/2 is the symmetric-group regime, above 1/2 the Lie-type regime.
    """
    log_order = ln(order)
    if log_order <= 1:
        raise DomainError("log log |G| must be positive")
    ll = math.log(log_order)
    inner = ln(m) + ll
    if inner <= 0:
        raise DomainError("log m + log log |G| must be positive")
    return math.log(inner) / ll

"""Command-line entry point.

Every subcommand writes its payload (CSV or JSON) to stdout and nothing
else. Exit status 0 is success, 1 a domain error (reported on stderr as
``error: <Code>: <message>``), 2 a usage error.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import __version__
from .census import DEFAULT_MAX_N, census, max_multiplicity
from .envelope import bound_N, envelope_incremented, witness_for
from .errors import CacheMismatch, CharmultError, InvalidParameter
from .growth import (
    CURVE_KINDS,
    DEFAULT_BIT_CAP,
    BoundCurve,
    ScaledInteger,
    bound_curve_value,
    degree_series,
    make_oracle,
    make_product_spec,
    series_rows,
    slow_growth_sequence,
)
from .partitions import count_partitions, parse_partition, t_sum
from .store import CacheRecord, cache_read, cache_write, default_cache_path
from .tables import (
    CLASSICAL_FAMILIES,
    classical_label,
    classical_lower_bound,
    classical_order_estimate,
    growth_indicator,
    table_csv,
    table_rows,
)
from math import factorial


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str
    stderr: str


def _csv(rows, header=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=False) + "\n"


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _factor_list(text: str) -> list:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok.startswith("log2:"):
            try:
                out.append(ScaledInteger.from_log2(float(tok[5:])))
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad log-scale factor {tok!r}") from None
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad factor {tok!r}") from None
    return out


# --- subcommands -------------------------------------------------------------

def cmd_census(a) -> str:
    c = census(a.n, a.kind, max_n=a.max_n, threads=a.threads)
    if a.emit == "json":
        m, wit = max_multiplicity(c)
        return _json({"n": c.n, "kind": c.kind, "total": c.total, "m": m,
                      "witness_degrees": wit, "entries": [[d, k] for d, k in c.items()]})
    return _csv(((c.n, d, k) for d, k in c.items()), ("n", "degree", "count") if a.header else None)


def cmd_mult(a) -> str:
    stop = a.stop if a.stop is not None else a.start
    if stop < a.start:
        raise InvalidParameter("stop must not be below start")
    path = a.cache or default_cache_path()
    records = {(r.n, r.kind): r for r in cache_read(path)} if path else {}
    rows = []
    dirty = False
    for n in range(a.start, stop + 1):
        cached = records.get((n, a.kind))
        if cached is not None and not a.verify:
            rows.append((n, a.kind, cached.m, cached.witness_degree_count))
            continue
        m, wit = max_multiplicity(census(n, a.kind, max_n=a.max_n, threads=a.threads))
        if cached is not None and (cached.m, cached.witness_degree_count) != (m, len(wit)):
            raise CacheMismatch(f"n={n} {a.kind}: cache has m={cached.m} "
                                f"({cached.witness_degree_count} degrees), recomputed m={m} ({len(wit)})")
        if cached is None:
            records[(n, a.kind)] = CacheRecord(n, a.kind, m, len(wit), __version__)
            dirty = True
        rows.append((n, a.kind, m, len(wit)))
    if path and dirty:
        cache_write(path, records.values())
    return _csv(rows, ("n", "kind", "m", "witness_degree_count") if a.header else None)


def cmd_witness(a) -> str:
    fam = witness_for(a.n, a.i)
    out = {
        "n": a.n,
        "depth": fam.depth,
        "count": len(fam.members),
        "seed": list(fam.seed),
        "last_increment": fam.last_increment,
        "common_size": fam.common_size,
        "max_hook": len(fam.common_hooks.counts),
        "verified": True,
        "members": [list(mu) for mu in fam.members],
    }
    if a.with_degree:
        from .census import degree
        out["degree"] = degree(fam.members[0])
    return _json(out)


def cmd_bound(a) -> str:
    return f"{bound_N(a.i)}\n"


def cmd_envelope(a) -> str:
    lam = parse_partition(a.partition)
    res = envelope_incremented(lam, a.increment)
    return _json({"partition": list(lam), "increment": a.increment, "result": list(res),
                  "size": sum(res), "t_sum": t_sum(res)})


def cmd_tables(a) -> str:
    fams = None if a.family in (None, "all") else [a.family]
    return table_csv(table_rows(fams, a.q), header=a.header)


def cmd_indicator(a) -> str:
    if a.side == "sym":
        if a.n is None:
            raise InvalidParameter("--side sym needs --n")
        m, order = count_partitions(a.n), factorial(a.n)
        label = f"S_{a.n}"
        m_out = m
    else:
        if a.family is None or a.d is None or a.q is None:
            raise InvalidParameter("--side classical needs --family, --d and --q")
        m = classical_lower_bound(a.family, a.d, a.q)
        order = classical_order_estimate(a.family, a.d, a.q)
        label = classical_label(a.family, a.d, a.q)
        m_out = str(m)
    value = growth_indicator(m, order)
    return _json({"side": a.side, "group": label, "m": m_out, "indicator": value,
                  "below_half": value < 0.5})


def cmd_series(a) -> str:
    spec = make_product_spec(a.factors)
    s = degree_series(spec, a.cutoff, max_n=a.max_n)
    return _csv(series_rows(s, sparse=a.sparse), ("n", "r_n", "R_n") if a.header else None)


def cmd_slowgrowth(a) -> str:
    f = make_oracle(a.f)
    steps = slow_growth_sequence(f, a.imax, bit_cap=a.bitcap)
    out = []
    for s in steps:
        n = s.n.to_json()
        out.append({"i": s.i, "n": n["exact"], "log2_n": n["log2"], "log2_log2_n": n["log2_log2"],
                    "is_exact": s.n.is_exact,
                    "R": s.R_value, "f": s.f_value, "certified": s.certified})
    return _json({"oracle": a.f, "imax": a.imax, "bitcap": a.bitcap, "steps": out})


def cmd_curves(a) -> str:
    curve = BoundCurve(a.kind, a.c, a.eps, a.p)
    if a.step < 1:
        raise InvalidParameter("--step must be positive")
    rows = [(n, repr(bound_curve_value(curve, n))) for n in range(a.start, a.stop + 1, a.step)]
    return _csv(rows, ("n", "value") if a.header else None)


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="charmult", description="Character degree multiplicities and representation growth.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def census_opts(sp):
        sp.add_argument("--kind", choices=("symmetric", "alternating"), default="symmetric")
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                        help="census size cap (memory and time guard)")
        sp.add_argument("--header", action="store_true")

    sp = sub.add_parser("census", help="degree census of S_n or A_n")
    sp.add_argument("n", type=int)
    sp.add_argument("--emit", choices=("csv", "json"), default="csv")
    census_opts(sp)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("mult", help="maximal multiplicity m(n) over a range, cached")
    sp.add_argument("start", type=int)
    sp.add_argument("stop", type=int, nargs="?")
    sp.add_argument("--cache", help="cache CSV (default: $CHARMULT_CACHE)")
    sp.add_argument("--verify", action="store_true", help="recompute cached rows and compare")
    census_opts(sp)
    sp.set_defaults(func=cmd_mult)

    sp = sub.add_parser("witness", help="2^i partitions of n with equal hook multisets")
    sp.add_argument("n", type=int)
    sp.add_argument("i", type=int)
    sp.add_argument("--with-degree", action="store_true")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("bound", help="threshold N(i) of the witness construction")
    sp.add_argument("i", type=int)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("envelope", help="incremented enveloping partition")
    sp.add_argument("partition", help='comma-separated parts, e.g. "5,3,3,2"')
    sp.add_argument("--increment", type=int, default=0)
    sp.set_defaults(func=cmd_envelope)

    sp = sub.add_parser("tables", help="simple-group multiplicity tables as CSV")
    sp.add_argument("--family", help="sporadic, an exceptional family (G2, 2B2, ...), or all")
    sp.add_argument("--q", type=int, action="append", help="evaluation parameter (repeatable)")
    sp.add_argument("--header", action="store_true")
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("indicator", help="growth indicator log(log m + log log|G|)/log log|G|")
    sp.add_argument("--side", choices=("sym", "classical"), required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--family", choices=CLASSICAL_FAMILIES)
    sp.add_argument("--d", type=int)
    sp.add_argument("--q", type=int)
    sp.set_defaults(func=cmd_indicator)

    sp = sub.add_parser("series", help="r_n and R_n for a product of alternating groups")
    sp.add_argument("--factors", type=_factor_list, required=True,
                    help='ascending degrees, e.g. "7,5041"; "log2:X" for a log-scale factor')
    sp.add_argument("--cutoff", type=int, required=True)
    sp.add_argument("--sparse", action="store_true", help="omit rows with r_n = 0")
    sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    sp.add_argument("--header", action="store_true")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("slowgrowth", help="slow-growth degree sequence with certificates")
    sp.add_argument("--f", required=True,
                    help="ceil-log2-log2 | ceil-log10-log10 | identity | poly:K")
    sp.add_argument("--imax", type=int, required=True)
    sp.add_argument("--bitcap", type=int, default=DEFAULT_BIT_CAP)
    sp.set_defaults(func=cmd_slowgrowth)

    sp = sub.add_parser("curves", help="reference lower-bound curves as CSV")
    sp.add_argument("--kind", choices=CURVE_KINDS, required=True)
    sp.add_argument("--c", type=float, default=1.0)
    sp.add_argument("--eps", type=float, default=0.5)
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--start", type=int, required=True)
    sp.add_argument("--stop", type=int, required=True)
    sp.add_argument("--step", type=int, default=1)
    sp.add_argument("--header", action="store_true")
    sp.set_defaults(func=cmd_curves)
    return p


def run(argv: list[str]) -> CommandResult:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    out, err = io.StringIO(), io.StringIO()
    parser = build_parser()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return CommandResult(int(e.code or 0), out.getvalue(), err.getvalue())
    try:
        payload = args.func(args)
    except CharmultError as e:
        return CommandResult(1, "", f"error: {e.code}: {e}\n")
    return CommandResult(0, payload, "")


def main(argv: list[str] | None = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.stdout)
    sys.stderr.write(res.stderr)
    return res.exit_code


if __name__ == "__main__":
    raise SystemExit(main())

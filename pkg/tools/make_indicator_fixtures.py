"""Regenerate tests/fixtures/indicator.json.

    python tools/make_indicator_fixtures.py
"""
import json
import math
from pathlib import Path

from charmult.partitions import count_partitions
from charmult.tables import classical_lower_bound, classical_order_estimate, growth_indicator

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "indicator.json"


def main():
    sym = []
    for n in range(30, 61):
        sym.append({"n": n, "m": count_partitions(n),
                    "indicator": growth_indicator(count_partitions(n), math.factorial(n))})
    classical = []
    for d in (10, 20, 50):
        for q in (2, 4, 16):
            m = classical_lower_bound("PSL", d, q)
            order = classical_order_estimate("PSL", d, q)
            classical.append({"family": "PSL", "d": d, "q": q,
                              "m_num": m.numerator, "m_den": m.denominator,
                              "indicator": growth_indicator(m, order)})
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"symmetric": sym, "classical": classical}, indent=1) + "\n")
    for row in classical:
        print(row["d"], row["q"], round(row["indicator"], 4))
    print("sym max", max(r["indicator"] for r in sym))


if __name__ == "__main__":
    main()

"""Compare the pure-Python kernels against the compiled twin.

Runs the same exact workloads under both backends and prints a small
table.  The workloads are the ones that dominate real runs: bivariate
resultants of pencil members, gcd chains over QQ, and a full curve
analysis end to end.

Usage: python3 benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from placeone import corepoly
from placeone.algebra import global_int, normalize, partial_x, partial_y, resultant_y
from placeone.parse import parse_poly
from placeone.pencil import build_pencil, rational_census
from placeone.poly import Poly, gcd_monic
from placeone.rationals import QQ

CURVES = (
    "y^3 - x^2 - 3*y + 2",
    "y^4 - x^2 - x",
    "y^5 - x^3 - 2*x^2*y - 3*y^2 + x",
    "y^7 - x^5 - 3*x^3*y^2 + 2*x*y - 1",
)


def _curve(text):
    return normalize(parse_poly(text, ("x", "y")))


def work_resultants():
    total = 0
    for text in CURVES:
        f = _curve(text).f
        fy = partial_y(f)
        for k in range(4):
            rows = list(f.cs)
            rows[0] = rows[0] - Poly((QQ(k),))
            r = resultant_y(Poly(rows), fy)
            total += r.degree if isinstance(r, Poly) else 0
    return total


def work_gcds():
    total = 0
    for text in CURVES:
        f = _curve(text).f
        r = resultant_y(partial_x(f), partial_y(f))
        if not isinstance(r, Poly):
            continue
        total += gcd_monic(r, r.derivative()).degree
        total += global_int(partial_x(f), partial_y(f))
    return total


def work_analysis():
    nf = _curve(CURVES[0])
    pd = build_pencil(nf)
    vd = rational_census(nf, pd=pd)
    return pd.mu + len(vd.fibers)


WORKLOADS = (
    ("pencil resultants", work_resultants),
    ("gcd + intersection", work_gcds),
    ("full analysis", work_analysis),
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = ap.parse_args()

    backends = corepoly.available_backends()
    if "cy" not in backends:
        print("compiled backend not built; timing pure Python only")

    results = {}
    checks = {}
    for name in backends:
        corepoly.set_backend(name)
        for label, fn in WORKLOADS:
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                out = fn()
                best = min(best, time.perf_counter() - t0)
            results[(name, label)] = best
            checks.setdefault(label, set()).add(out)

    # both backends must compute identical values
    for label, outs in checks.items():
        if len(outs) != 1:
            raise SystemExit(f"backend disagreement on {label}: {outs}")

    width = max(len(label) for label, _ in WORKLOADS)
    header = f"{'workload':<{width}}  " + "".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, _ in WORKLOADS:
        row = f"{label:<{width}}  "
        for b in backends:
            row += f"{results[(b, label)] * 1000:>8.1f}ms"
        if len(backends) == 2:
            ratio = results[("py", label)] / results[("cy", label)]
            row += f"{ratio:>9.2f}x"
        print(row)
    corepoly.set_backend("cy" if "cy" in backends else "py")


if __name__ == "__main__":
    main()

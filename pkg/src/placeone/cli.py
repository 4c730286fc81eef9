"""Command-line interface: exact curve and pencil reports as JSON or text.

Subcommands: analyze, pencil, census, implicitize, pair, lemma, corpus,
verify.  Each prints one JSON envelope on stdout (corpus prints one line
per curve plus a summary envelope); --format text renders the same payload
for reading.  Exit codes: 0 analysis complete, 2 input rejected, 3 theorem
check failed, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from . import reports
from .algebra import (
    curve_from_text,
    global_int,
    implicitize,
    normalize,
    partial_x,
    partial_y,
)
from .config import EngineConfig
from .errors import CapExceeded, InputError, TheoremViolation
from .localgeom import germ_bounds_check, local_int, r_infinity, shift_origin
from .oracle import quotient_dim_global, quotient_dim_local
from .parse import coeff_lists, format_poly, parse_poly
from .pencil import (
    build_pencil,
    classify_pair,
    fiber_report,
    generic_fiber_identity_check,
    one_place,
    rational_census,
)
from .poly import Poly
from .puiseux import local_int_branches
from .rationals import QQ
from .tower import PointClass, TowerContext

XY = ("x", "y")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_THEOREM = 3
EXIT_CAP = 4


def _arg_text(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    return value


def _emit(args, cfg: EngineConfig, command: str, input_echo: dict, result, t0: float) -> None:
    timing = round((time.perf_counter() - t0) * 1000.0, 3) if args.timing else None
    env = reports.envelope(command, input_echo, cfg, result, timing)
    if args.format == "text":
        sys.stdout.write(reports.to_text(env))
    else:
        sys.stdout.write(reports.to_json(env))


# ---------------------------------------------------------------------------
# single-curve commands


def cmd_analyze(args, cfg: EngineConfig) -> int:
    t0 = time.perf_counter()
    text = _arg_text(args.curve)
    nf = curve_from_text(text)
    pd = build_pencil(nf, cfg)
    fr = fiber_report(pd, QQ(0), cfg)
    certified = one_place(pd)
    result = {
        "normal_form": reports.normal_form_payload(nf),
        "n": pd.n,
        "mu": pd.mu,
        "singular_points": [reports.local_report_payload(rep, w) for rep, w in fr.sing],
        "critical_values": [reports.lambda_class_payload(L) for L in pd.crit],
        "r_inf": pd.r_inf,
        "mu_inf": pd.mu_inf,
        "d_regular": pd.d_regular,
        "A_member": fr.A_member,
        "genus": fr.genus,
        "one_place": certified,
        "coordinate": bool(certified and pd.mu == 0),
        "pencil_theorems": "checked" if certified else "n/a",
    }
    _emit(args, cfg, "analyze", {"curve": text}, result, t0)
    return EXIT_OK


def cmd_pencil(args, cfg: EngineConfig) -> int:
    t0 = time.perf_counter()
    text = _arg_text(args.curve)
    nf = curve_from_text(text)
    pd = build_pencil(nf, cfg)
    result = reports.pencil_payload(pd)
    result["generic_identity_ok"] = generic_fiber_identity_check(pd, cfg)
    _emit(args, cfg, "pencil", {"curve": text}, result, t0)
    if not result["generic_identity_ok"]:
        print("generic degree identity failed", file=sys.stderr)
        return EXIT_THEOREM
    return EXIT_OK


def cmd_census(args, cfg: EngineConfig) -> int:
    t0 = time.perf_counter()
    text = _arg_text(args.curve)
    nf = curve_from_text(text)
    vd = rational_census(nf, cfg)
    _emit(args, cfg, "census", {"curve": text}, reports.census_payload(vd), t0)
    if False in (vd.count_bound_ok, vd.structure_ok, vd.divisibility_ok):
        print("census verdict failed a structure check", file=sys.stderr)
        return EXIT_THEOREM
    return EXIT_OK


def cmd_implicitize(args, cfg: EngineConfig) -> int:
    t0 = time.perf_counter()
    xs, ys = _arg_text(args.x_t), _arg_text(args.y_t)
    xt = parse_poly(xs, ("t",))
    yt = parse_poly(ys, ("t",))
    nf = implicitize(xt, yt)
    result = {
        "x_t": reports.poly1(xt, "t"),
        "y_t": reports.poly1(yt, "t"),
        "normal_form": reports.normal_form_payload(nf),
    }
    _emit(args, cfg, "implicitize", {"x_t": xs, "y_t": ys}, result, t0)
    return EXIT_OK


def cmd_pair(args, cfg: EngineConfig) -> int:
    t0 = time.perf_counter()
    fs, gs = _arg_text(args.f), _arg_text(args.g)
    f = parse_poly(fs, XY)
    g = parse_poly(gs, XY)
    res = classify_pair(f, g, cfg)
    result = {"f": reports.poly2(f), "g": reports.poly2(g), **res}
    _emit(args, cfg, "pair", {"f": fs, "g": gs}, result, t0)
    if res.get("structure_ok") is False:
        print("two-member structure check failed", file=sys.stderr)
        return EXIT_THEOREM
    return EXIT_OK


def cmd_lemma(args, cfg: EngineConfig) -> int:
    t0 = time.perf_counter()
    text = _arg_text(args.germ)
    H = parse_poly(text, XY)
    rec = germ_bounds_check(H, cfg)
    result = {"germ": reports.poly2(H), **rec}
    _emit(args, cfg, "lemma", {"germ": text}, result, t0)
    bad = [k for k in ("bound_ok", "strict_ok", "coords_ok") if rec[k] is False]
    if bad:
        print(f"local bound failed: {', '.join(bad)}", file=sys.stderr)
        return EXIT_THEOREM
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify: engine fast paths against the brute-force oracles

_VERIFY_GLOBAL = (
    ("y - x^2", "y"),
    ("y^3 - 3*y - x^2 + 2", "y^3 - 3*y - x^2 - 2"),
    ("y^3 - x^2", "3*y^2"),
)

_VERIFY_LOCAL = (
    ("x", "y", "0", "0"),
    ("y^2 - x^3", "y", "0", "0"),
    ("x", "y^2", "0", "0"),
    ("-2*x", "3*y^2 - 3", "0", "1"),
    ("-2*x", "3*y^2 - 3", "0", "-1"),
)


def _random_monic(rng: random.Random, ydeg: int, xdeg: int = 2) -> Poly:
    rows = []
    for _ in range(ydeg):
        rows.append(Poly([QQ(rng.randint(-5, 5)) for _ in range(xdeg + 1)]))
    rows.append(Poly((QQ(1),)))
    return Poly(rows)


def _local_three_ways(f: Poly, g: Poly, a, b, cfg: EngineConfig):
    base = TowerContext.base(cfg)
    pc = PointClass(base, base.from_qq(a), base.from_qq(b), 1)
    eng = local_int(f, g, pc)
    orc = quotient_dim_local(f, g, (a, b), cfg)
    F = shift_origin(f, base, pc.x, pc.y)
    G = shift_origin(g, base, pc.x, pc.y)
    ords = local_int_branches(base, F, G, cfg)
    return eng, orc, ords


def cmd_verify(args, cfg: EngineConfig) -> int:
    t0 = time.perf_counter()
    checks = []
    for fs, gs in _VERIFY_GLOBAL:
        f = parse_poly(fs, XY)
        g = parse_poly(gs, XY)
        eng = global_int(f, g)
        orc = quotient_dim_global(f, g)
        checks.append(
            {"kind": "global", "f": fs, "g": gs, "engine": eng, "oracle": orc, "ok": eng == orc}
        )
    rng = random.Random(cfg.seed)
    made = 0
    while made < args.pairs:
        f = _random_monic(rng, 2)
        g = _random_monic(rng, 1)
        try:
            eng = global_int(f, g)
        except InputError:
            continue
        orc = quotient_dim_global(f, g)
        checks.append(
            {
                "kind": "global",
                "f": format_poly(f, XY),
                "g": format_poly(g, XY),
                "engine": eng,
                "oracle": orc,
                "ok": eng == orc,
            }
        )
        made += 1
    for fs, gs, a_s, b_s in _VERIFY_LOCAL:
        f = parse_poly(fs, XY)
        g = parse_poly(gs, XY)
        a, b = QQ(a_s), QQ(b_s)
        eng, orc, ords = _local_three_ways(f, g, a, b, cfg)
        checks.append(
            {
                "kind": "local",
                "f": fs,
                "g": gs,
                "point": [a_s, b_s],
                "engine": eng,
                "oracle": orc,
                "ord_sum": ords,
                "ok": eng == orc == ords,
            }
        )
    all_ok = all(c["ok"] for c in checks)
    result = {"checks": checks, "all_ok": all_ok}
    _emit(args, cfg, "verify", {"pairs": args.pairs}, result, t0)
    if not all_ok:
        print("oracle disagreement detected", file=sys.stderr)
        return EXIT_THEOREM
    return EXIT_OK


# ---------------------------------------------------------------------------
# corpus: seeded one-place curves from coprime-degree parametrizations


def _generic_rational(pd) -> QQ:
    """Smallest nonnegative integer that is neither critical nor irregular."""
    skip = {L.rational_value() for L in pd.crit if L.is_rational()}
    k = 0
    while True:
        v = QQ(k)
        if v not in skip and pd.P0.evaluate(v):
            return v
        k += 1


def _corpus_worker(item):
    idx, xs, ys, fs, cfg = item
    nf = normalize(parse_poly(fs, XY))
    pd = build_pencil(nf, cfg)
    checks = {
        "d_regular": pd.d_regular,
        "mu_plus_mu_inf": pd.mu + pd.mu_inf == (pd.n - 1) * (pd.n - 2),
        "generic_identity": generic_fiber_identity_check(pd, cfg),
    }
    violation = None
    genus = None
    census: dict = {}
    try:
        fr = fiber_report(pd, _generic_rational(pd), cfg)
        genus = fr.genus
        checks["genus_integral"] = fr.genus is not None and fr.genus >= 0
        vd = rational_census(nf, cfg, pd=pd)
        size = len(vd.rational_lambdas) if vd.rational_lambdas != "all" else "all"
        census = {
            "case": vd.case,
            "rational_lambdas": list(vd.rational_lambdas)
            if vd.rational_lambdas != "all"
            else "all",
            "size": size,
        }
        checks["census_le_2"] = vd.count_bound_ok is True
    except TheoremViolation as exc:
        violation = str(exc)
        checks["genus_integral"] = False
        checks["census_le_2"] = False
    ok = all(v is True for v in checks.values()) and violation is None
    echo = {"index": idx, "x_t": xs, "y_t": ys}
    result = {
        "f": {"s": fs, "c": coeff_lists(nf.f, 2)},
        "n": pd.n,
        "mu": pd.mu,
        "mu_inf": pd.mu_inf,
        "r_inf": pd.r_inf,
        "A_f": pd.A_f,
        "genus_generic": genus,
        "census": census,
        "checks": checks,
        "violation": violation,
        "ok": ok,
    }
    return echo, result


def _generate_corpus(args, cfg: EngineConfig):
    rng = random.Random(cfg.seed)
    bound = args.coeff_bound
    accepted = []
    discards = {"exponent_gcd": 0, "duplicate": 0, "improper": 0, "not_one_place": 0}
    seen_param = set()
    seen_curve = set()
    attempts = 0
    while len(accepted) < args.count:
        attempts += 1
        if attempts > 500 * args.count:
            raise CapExceeded("corpus generation exhausted its attempt budget")
        a = rng.randint(3, args.max_exp)
        b = rng.randint(2, a - 1)
        if gcd(a, b) != 1:
            discards["exponent_gcd"] += 1
            continue
        xc = [rng.randint(-bound, bound) for _ in range(a)] + [1]
        yc = [rng.randint(-bound, bound) for _ in range(b)] + [1]
        key = (tuple(xc), tuple(yc))
        if key in seen_param:
            discards["duplicate"] += 1
            continue
        seen_param.add(key)
        xt = Poly([QQ(c) for c in xc])
        yt = Poly([QQ(c) for c in yc])
        try:
            nf = implicitize(xt, yt)
        except InputError:
            discards["improper"] += 1
            continue
        ckey = repr(coeff_lists(nf.f, 2))
        if ckey in seen_curve:
            discards["duplicate"] += 1
            continue
        seen_curve.add(ckey)
        if not nf.degree_condition_holds or r_infinity(nf, cfg) != 1:
            discards["not_one_place"] += 1
            continue
        accepted.append(
            (
                len(accepted),
                format_poly(xt, ("t",)),
                format_poly(yt, ("t",)),
                format_poly(nf.f, XY),
                cfg,
            )
        )
    return accepted, discards, attempts


def cmd_corpus(args, cfg: EngineConfig) -> int:
    t0 = time.perf_counter()
    items, discards, attempts = _generate_corpus(args, cfg)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(_corpus_worker, items))
    else:
        outcomes = [_corpus_worker(item) for item in items]

    sizes = {"0": 0, "1": 0, "2": 0, "all": 0}
    failed = 0
    for echo, result in outcomes:
        env = reports.envelope("corpus", echo, cfg, result)
        if args.format == "text":
            sys.stdout.write(reports.to_text(env))
        else:
            sys.stdout.write(reports.to_json_line(env))
        size = result["census"].get("size")
        sizes[str(size)] = sizes.get(str(size), 0) + 1
        if not result["ok"]:
            failed += 1

    summary = {
        "requested": args.count,
        "accepted": len(items),
        "attempts": attempts,
        "discarded": discards,
        "census_sizes": sizes,
        "checks_failed": failed,
        "all_ok": failed == 0,
    }
    echo = {"count": args.count, "max_exp": args.max_exp, "coeff_bound": args.coeff_bound}
    if args.format == "text":
        lines = ["corpus summary", "census size   curves"]
        for key in sorted(sizes):
            lines.append(f"{key:<13} {sizes[key]}")
        lines.append(f"accepted {len(items)} of {attempts} attempts; discards {discards}")
        lines.append(f"checks failed: {failed}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        env = reports.envelope("corpus-summary", echo, cfg, summary)
        timing = round((time.perf_counter() - t0) * 1000.0, 3) if args.timing else None
        env["timing_ms"] = timing
        sys.stdout.write(reports.to_json_line(env))
    if failed:
        print(f"corpus: {failed} curve(s) failed a theorem check", file=sys.stderr)
        return EXIT_THEOREM
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="placeone",
        description="Exact invariants of plane curves and their pencils.",
    )
    ap.add_argument("--seed", type=int, default=0, help="seed for every randomized choice")
    ap.add_argument("--max-ext-degree", type=int, default=64)
    ap.add_argument("--max-tower-depth", type=int, default=8)
    ap.add_argument("--trunc-start", type=int, default=16)
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--timing", action="store_true", help="include wall-clock timing")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariants of a single curve")
    p.add_argument("curve", help="polynomial in x and y ('-' reads stdin)")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("pencil", help="resultant data of the pencil f - l")
    p.add_argument("curve")
    p.set_defaults(fn=cmd_pencil)

    p = sub.add_parser("census", help="rational members of the pencil")
    p.add_argument("curve")
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("implicitize", help="implicit equation of t -> (x(t), y(t))")
    p.add_argument("x_t")
    p.add_argument("y_t")
    p.set_defaults(fn=cmd_implicitize)

    p = sub.add_parser("pair", help="mutual position of two curves")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(fn=cmd_pair)

    p = sub.add_parser("lemma", help="local bounds of a germ at the origin")
    p.add_argument("germ")
    p.set_defaults(fn=cmd_lemma)

    p = sub.add_parser("corpus", help="generate one-place curves and check them")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-exp", type=int, default=7, help="largest parametrization degree")
    p.add_argument("--coeff-bound", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_corpus)

    p = sub.add_parser("verify", help="spot-check fast paths against the oracles")
    p.add_argument("--pairs", type=int, default=5, help="number of random global pairs")
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = EngineConfig(
        seed=args.seed,
        max_tower_depth=args.max_tower_depth,
        max_ext_degree=args.max_ext_degree,
        trunc_start=args.trunc_start,
    )
    try:
        return args.fn(args, cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    raise SystemExit(main())

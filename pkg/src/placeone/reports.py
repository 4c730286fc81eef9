"""JSON-ready payloads for every analysis product, plus the output envelope.

Every polynomial is emitted twice: a display string and the exact nested
coefficient arrays (ascending, rationals as p/q strings).  Reports therefore
re-parse losslessly, and identical inputs under identical options serialize
to identical bytes.
"""

from __future__ import annotations

import json

from . import __version__
from .config import EngineConfig
from .parse import coeff_lists, format_poly
from .tower import min_poly_over_Q

XY = ("x", "y")


def poly2(p) -> dict:
    return {"s": format_poly(p, XY), "c": coeff_lists(p, 2)}


def poly2_in(p, variables) -> dict:
    return {"s": format_poly(p, variables), "c": coeff_lists(p, 2)}


def poly1(p, var: str) -> dict:
    return {"s": format_poly(p, (var,)), "c": coeff_lists(p, 1)}


def normal_form_payload(nf) -> dict:
    return {
        "f": poly2(nf.f),
        "n": nf.n,
        "degree_condition": nf.degree_condition_holds,
        "slope_condition": nf.slope_condition_holds,
        "transform_steps": [[str(part) for part in step] for step in nf.transform_steps],
    }


def point_payload(pc) -> dict:
    out: dict = {"degree": pc.orbit_degree}
    if pc.ctx.degree == 1:
        out["x"] = str(pc.x)
        out["y"] = str(pc.y)
    else:
        out["x_minpoly"] = poly1(min_poly_over_Q(pc.x), "x")
        out["y_minpoly"] = poly1(min_poly_over_Q(pc.y), "y")
    return out


def local_report_payload(rep, weight: int) -> dict:
    return {
        "point": point_payload(rep.point),
        "mu": rep.mu,
        "r": rep.r,
        "delta": rep.delta,
        "weight": weight,
    }


def lambda_class_payload(L) -> dict:
    return {
        "display": L.display(),
        "minpoly": poly1(L.minpoly, "l"),
        "degree": L.degree,
        "rational": L.is_rational(),
        "mu_fiber": L.mu_fiber,
    }


def fiber_payload(fr) -> dict:
    return {
        "lambda": lambda_class_payload(fr.lam),
        "singular_points": [local_report_payload(rep, w) for rep, w in fr.sing],
        "mu_fiber": fr.mu_fiber,
        "mu_bar": fr.mu_bar,
        "int_fiber": fr.int_fiber,
        "A_member": fr.A_member,
        "r_inf": fr.r_inf,
        "mu_inf": fr.mu_inf,
        "genus": fr.genus,
        "rational": fr.rational,
    }


def pencil_payload(pd) -> dict:
    return {
        "normal_form": normal_form_payload(pd.nf),
        "n": pd.n,
        "mu": pd.mu,
        "R": poly2_in(pd.R, ("l", "x")),
        "i": pd.i,
        "P0": poly1(pd.P0, "l"),
        "d_regular": pd.d_regular,
        "irregular_values": [
            {"minpoly": poly1(m, "l"), "defect": d, "degree": k}
            for m, d, k in pd.irregular
        ],
        "A_f": pd.A_f,
        "critical_values": [lambda_class_payload(L) for L in pd.crit],
        "r_inf": pd.r_inf,
        "mu_inf": pd.mu_inf,
    }


def census_payload(vd) -> dict:
    lams = vd.rational_lambdas
    return {
        "case": vd.case,
        "rational_lambdas": lams if isinstance(lams, str) else list(lams),
        "count_bound_ok": vd.count_bound_ok,
        "structure_ok": vd.structure_ok,
        "unique_reason": vd.unique_reason,
        "explanation": vd.explanation,
        "mu": vd.mu,
        "divisibility_ok": vd.divisibility_ok,
        "fibers": [fiber_payload(fr) for fr in vd.fibers],
    }


def envelope(command: str, input_echo: dict, cfg: EngineConfig, result, timing_ms=None) -> dict:
    return {
        "tool": "placeone",
        "version": __version__,
        "command": command,
        "input": input_echo,
        "options": {
            "seed": cfg.seed,
            "max_ext_degree": cfg.max_ext_degree,
            "max_tower_depth": cfg.max_tower_depth,
            "trunc_start": cfg.trunc_start,
        },
        "result": result,
        "timing_ms": timing_ms,
    }


def to_json(env: dict) -> str:
    return json.dumps(env, sort_keys=True, indent=2) + "\n"


def to_json_line(env: dict) -> str:
    return json.dumps(env, sort_keys=True, separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# the text renderer: a thin view over the JSON payloads


def _text_lines(value, indent: int = 0):
    pad = "  " * indent
    if isinstance(value, dict):
        if set(value) == {"s", "c"}:
            yield f"{pad}{value['s']}"
            return
        for key in value:
            sub = value[key]
            if isinstance(sub, dict) and set(sub) == {"s", "c"}:
                yield f"{pad}{key}: {sub['s']}"
            elif isinstance(sub, (dict, list)) and sub:
                yield f"{pad}{key}:"
                yield from _text_lines(sub, indent + 1)
            else:
                yield f"{pad}{key}: {_scalar(sub)}"
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                yield from _text_lines(item, indent)
                yield ""
            else:
                yield f"{pad}- {_scalar(item)}"
    else:
        yield f"{pad}{_scalar(value)}"


def _scalar(v) -> str:
    if v is None:
        return "-"
    if v is True:
        return "yes"
    if v is False:
        return "no"
    if isinstance(v, (dict, list)) and not v:
        return "(none)"
    return str(v)


def to_text(env: dict) -> str:
    head = f"placeone {env['version']} :: {env['command']}"
    lines = [head]
    if env.get("input"):
        lines.append("input:")
        lines.extend(_text_lines(env["input"], 1))
    lines.append("result:")
    lines.extend(_text_lines(env["result"], 1))
    if env.get("timing_ms") is not None:
        lines.append(f"timing_ms: {env['timing_ms']}")
    out = "\n".join(line for line in lines)
    return out.rstrip("\n") + "\n"

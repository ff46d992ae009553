"""JSON-in/JSON-out command line over the library, plus SVG plotting.

Every subcommand reads one JSON document (stdin by default, or a file
argument), writes its result to stdout, and exits 0.  Domain errors exit 1
with an {"error": code, "detail": text} payload; unparseable or
schema-violating input exits 2.  Identical inputs always produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import geodesic as geo
from . import isometry as iso
from . import plotting, smoothing, traces
from . import self_intersection as selfx
from .errors import GeometryError

_EXIT_DOMAIN = 1
_EXIT_MALFORMED = 2


class _Malformed(Exception):
    pass


# ---------------------------------------------------------------- wire forms


def _field(obj, key):
    if not isinstance(obj, dict) or key not in obj:
        raise _Malformed(f"missing field {key!r}")
    return obj[key]


def _num(obj, key) -> float:
    v = _field(obj, key)
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise _Malformed(f"field {key!r} must be a number")
    return float(v)


def _parse_isometry(obj) -> iso.Isometry:
    m = _field(obj, "matrix")
    try:
        (a, b), (c, d) = m
        rows = [[float(a), float(b)], [float(c), float(d)]]
    except (TypeError, ValueError) as exc:
        raise _Malformed(f"matrix must be a 2x2 array of numbers: {m!r}") from exc
    return iso.normalize(rows)


def _isometry_json(g: iso.Isometry) -> dict:
    return {"matrix": g.matrix()}


def _parse_boundary(v) -> float:
    if v == "inf":
        return iso.INFINITY
    if isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v):
        return float(v)
    raise _Malformed(f"boundary point must be a finite number or \"inf\", got {v!r}")


def _boundary_json(x: float):
    return "inf" if math.isinf(x) else x


def _parse_geodesic(obj) -> geo.Geodesic:
    return geo.Geodesic(_parse_boundary(_field(obj, "from")), _parse_boundary(_field(obj, "to")))


def _geodesic_json(A: geo.Geodesic) -> dict:
    return {"from": _boundary_json(A.start), "to": _boundary_json(A.end)}


def _parse_curve(obj) -> smoothing.CurveData:
    sided = _field(obj, "sided")
    try:
        sided = smoothing.Sidedness(sided)
    except ValueError as exc:
        raise _Malformed(f"sided must be \"one-sided\" or \"two-sided\", got {sided!r}") from exc
    return smoothing.CurveData(_num(obj, "length"), sided)


def _class_json(cls: iso.IsometryClass) -> dict:
    out = {"class": cls.tag.value}
    if cls.length is not None:
        out["length"] = cls.length
    return out


_CASES = {
    "hyp-hyp": (iso.IsometryType.HYPERBOLIC, iso.IsometryType.HYPERBOLIC),
    "glide-hyp": (iso.IsometryType.GLIDE_REFLECTION, iso.IsometryType.HYPERBOLIC),
    "hyp-glide": (iso.IsometryType.HYPERBOLIC, iso.IsometryType.GLIDE_REFLECTION),
    "glide-glide": (iso.IsometryType.GLIDE_REFLECTION, iso.IsometryType.GLIDE_REFLECTION),
}


def _theta(payload, args, key="theta") -> float:
    v = _num(payload, key)
    return math.radians(v) if args.degrees else v


def _window(payload) -> tuple[float, float, float]:
    w = _field(payload, "window")
    if not isinstance(w, list) or len(w) != 3:
        raise _Malformed(f"window must be [min, max, height], got {w!r}")
    return float(w[0]), float(w[1]), float(w[2])


# --------------------------------------------------------------- subcommands


def _cmd_classify(args, payload):
    return _class_json(iso.classify(_parse_isometry(payload), args.tol))


def _cmd_compose(args, payload):
    product = iso.compose(_parse_isometry(_field(payload, "g")), _parse_isometry(_field(payload, "h")))
    out = _isometry_json(product)
    out.update(_class_json(iso.classify(product, args.tol)))
    return out


def _cmd_axis(args, payload):
    return _geodesic_json(geo.axis(_parse_isometry(payload), args.tol))


def _cmd_predict(args, payload):
    case = _field(payload, "case")
    if case not in _CASES:
        raise _Malformed(f"case must be one of {sorted(_CASES)}, got {case!r}")
    class_g, class_h = _CASES[case]
    pred = traces.predict_half_trace(
        class_g, _num(payload, "t_g"), class_h, _num(payload, "t_h"), _theta(payload, args), args.tol
    )
    out = {"case": pred.formula_case.value, "half_trace": pred.half_trace}
    out.update(_class_json(pred.predicted_class))
    return out


def _cmd_verify(args, payload):
    report = traces.verify_against_oracle(
        _parse_isometry(_field(payload, "g")), _parse_isometry(_field(payload, "h")), args.tol
    )
    return {"predicted": report.predicted, "actual": report.actual, "abs_error": report.abs_error}


def _cmd_smooth(args, payload):
    outcome = smoothing.smooth(
        _parse_curve(_field(payload, "alpha")),
        _parse_curve(_field(payload, "beta")),
        _theta(payload, args),
        args.tol,
    )
    out = {"outcome": outcome.tag.value}
    if outcome.length is not None:
        out["length"] = outcome.length
    if outcome.reflection_degenerate:
        out["reflection_degenerate"] = True
    return out


def _cmd_find_m(args, payload):
    kwargs = {}
    if "m_cap" in payload:
        m_cap = _field(payload, "m_cap")
        if not isinstance(m_cap, int) or m_cap < 1:
            raise _Malformed(f"m_cap must be a positive integer, got {m_cap!r}")
        kwargs["m_cap"] = m_cap
    result = smoothing.find_puncture_m(
        _num(payload, "l_alpha"), _num(payload, "l_beta"), _theta(payload, args), args.tol, **kwargs
    )
    return {"ms": list(result.ms), "f_case": result.f_case.value, "r": result.r, "s": result.s}


def _cmd_bound(args, payload):
    result = selfx.bound(_num(payload, "l_beta"), _theta(payload, args))
    return {"m_lower": result.m_lower, "threshold_satisfied": list(result.threshold_satisfied)}


def _cmd_plot(args, payload):
    items = _field(payload, "items")
    if not isinstance(items, list):
        raise _Malformed("items must be a list of drawables")
    parsed = []
    for item in items:
        if not isinstance(item, dict) or "type" not in item:
            raise _Malformed(f"drawable needs a \"type\" field: {item!r}")
        item = dict(item)
        if item["type"] == "geodesic":
            item["from"] = _parse_boundary(_field(item, "from"))
            item["to"] = _parse_boundary(_field(item, "to"))
        parsed.append(item)
    spec = plotting.PlotSpec(_window(payload), tuple(parsed))
    return plotting.render_halfplane(spec, disk=args.disk)


def _cmd_plot_f(args, payload):
    samples = payload.get("samples", 256)
    if not isinstance(samples, int) or samples < 2:
        raise _Malformed(f"samples must be an integer >= 2, got {samples!r}")
    return plotting.render_crossing_graph(
        _num(payload, "r"), _num(payload, "s"), _window(payload), samples
    )


_COMMANDS = {
    "classify": _cmd_classify,
    "compose": _cmd_compose,
    "axis": _cmd_axis,
    "predict": _cmd_predict,
    "verify": _cmd_verify,
    "smooth": _cmd_smooth,
    "find-m": _cmd_find_m,
    "bound": _cmd_bound,
    "plot": _cmd_plot,
    "plot-f": _cmd_plot_f,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=iso.DEFAULT_TOL, help="classification tolerance")
    common.add_argument("--json", action="store_true", help="compact JSON output (default)")
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--degrees", action="store_true", help="interpret input angles as degrees")
    common.add_argument("infile", nargs="?", default="-", help="input JSON file, - for stdin")

    parser = argparse.ArgumentParser(prog="crosscap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "classify": "classify an isometry and report its translation length",
        "compose": "multiply two isometries and classify the product",
        "axis": "axis of a positive-translation isometry",
        "predict": "half trace of a composition from lengths and angle",
        "verify": "compare the identity against the raw matrix product",
        "smooth": "class of the curve smoothed from one crossing",
        "find-m": "odd powers making the smoothed class a puncture loop",
        "bound": "self-intersection lower bound from one crossing angle",
        "plot": "render a half-plane configuration as SVG",
        "plot-f": "render |r sinh t + s cosh t| against the unit line as SVG",
    }
    for name in _COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "plot":
            p.add_argument("--disk", action="store_true", help="project to the Poincare disk")
    return parser


def run(argv: list[str], stdin_text: str = "") -> tuple[int, str]:
    """Execute one command; returns (exit_code, output_text)."""
    args = _build_parser().parse_args(argv)

    def emit(payload) -> str:
        if isinstance(payload, str):
            return payload
        if args.pretty:
            return json.dumps(payload, sort_keys=True, indent=2) + "\n"
        return json.dumps(payload, sort_keys=True) + "\n"

    try:
        text = stdin_text if args.infile == "-" else open(args.infile, "r", encoding="utf-8").read()
        payload = json.loads(text)
    except OSError as exc:
        return _EXIT_MALFORMED, emit({"error": "unreadable_input", "detail": str(exc)})
    except json.JSONDecodeError as exc:
        return _EXIT_MALFORMED, emit({"error": "malformed_json", "detail": str(exc)})

    try:
        return 0, emit(_COMMANDS[args.command](args, payload))
    except _Malformed as exc:
        return _EXIT_MALFORMED, emit({"error": "malformed_input", "detail": str(exc)})
    except GeometryError as exc:
        code = _snake(type(exc).__name__)
        return _EXIT_DOMAIN, emit({"error": code, "detail": str(exc)})


def _snake(name: str) -> str:
    out = []
    for i, ch in enumerate(name):
        if ch.isupper() and i > 0:
            out.append("_")
        out.append(ch.lower())
    return "".join(out)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else _EXIT_MALFORMED
    stdin_text = sys.stdin.read() if args.infile == "-" else ""
    code, out = run(argv, stdin_text)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

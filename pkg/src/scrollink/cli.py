"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 violated precondition,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import re
import sys
from dataclasses import fields, is_dataclass
from fractions import Fraction

from . import chow, classification, hilbert, linkage, scroll, transforms
from .errors import ConsistencyError, DomainError
from .expr import evaluate

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 1, 2, 3

SWEEP_COLUMNS = [
    "n", "s", "d", "m", "eps", "w", "v", "k", "delta", "e", "planar",
    "residual_deg", "residual_genus", "G_profile", "G_closed", "closure_ok",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ------------------------------------------------------------ serialization


def jsonable(value):
    """Convert to JSON-safe values; rationals become ``"p/q"`` strings."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, (scroll.AmbientClass, scroll.ResolvedClass)):
        return {"H": value.h, "R": value.rr}
    if isinstance(value, scroll.ScrollType):
        return list(value.degrees)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if is_dataclass(value):
        return {f.name: jsonable(getattr(value, f.name)) for f in fields(value)}
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dump_json(doc) -> str:
    return json.dumps(jsonable(doc), sort_keys=True, indent=2) + "\n"


def _cell(value) -> str:
    value = jsonable(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict) and set(value) == {"H", "R"}:
        return str(scroll.AmbientClass(value["H"], value["R"]))
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def dump_csv(doc, rows=None, columns=None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if rows is None:
        rows, columns = [doc], list(doc)
    columns = columns or (list(rows[0]) if rows else [])
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def dump_table(doc, rows=None, columns=None) -> str:
    lines = []
    scalars = {k: v for k, v in doc.items() if k != "rows"}
    if scalars:
        width = max(len(k) for k in scalars)
        for k, v in scalars.items():
            lines.append(f"{k.ljust(width)}  {_cell(v) or '-'}")
    if rows is not None:
        columns = columns or (list(rows[0]) if rows else [])
        grid = [columns] + [[_cell(r.get(c)) or "-" for c in columns] for r in rows]
        widths = [max(len(line[i]) for line in grid) for i in range(len(columns))]
        if lines:
            lines.append("")
        for line in grid:
            lines.append("  ".join(cell.rjust(wd) for cell, wd in zip(line, widths)).rstrip())
    return "\n".join(lines) + "\n"


def emit(doc, fmt, rows=None, columns=None) -> str:
    if fmt == "json":
        if rows is not None:
            doc = dict(doc, rows=rows)
        return dump_json(doc)
    if fmt == "csv":
        return dump_csv(doc, rows, columns)
    return dump_table(doc, rows, columns)


# ------------------------------------------------------------ sweep config


_BOUND = re.compile(r"^([+-]?\d*)n([+-]\d+)?$")


def parse_bound(text: str) -> classification.LinearBound:
    text = text.replace(" ", "")
    if re.fullmatch(r"[+-]?\d+", text):
        return classification.LinearBound(0, int(text))
    m = _BOUND.match(text)
    if not m:
        raise DomainError("sweep_config", f"cannot read bound {text!r}")
    c = m.group(1)
    coef = 1 if c in ("", "+") else -1 if c == "-" else int(c)
    return classification.LinearBound(coef, int(m.group(2) or 0))


def _range(text: str):
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    return lo.strip(), hi.strip()


def parse_sweep_config(text: str) -> classification.SweepConfig:
    """Flat ``key = value`` file; ranges are written ``lo..hi``."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        if not sep:
            raise DomainError("sweep_config", f"line {lineno}: expected key = value")
        values[key.strip()] = val.strip()
    unknown = set(values) - {"n", "s", "m", "eps", "threads"}
    if unknown:
        raise DomainError("sweep_config", f"unknown keys {sorted(unknown)}")
    for key in ("n", "s", "m"):
        if key not in values:
            raise DomainError("sweep_config", f"missing key {key!r}")
    try:
        n_lo, n_hi = (int(x) for x in _range(values["n"]))
        m_lo, m_hi = (int(x) for x in _range(values["m"]))
        eps = values.get("eps", "all")
        if eps not in ("all", "planar"):
            eps = tuple(int(x) for x in _range(eps))
        threads = int(values["threads"]) if "threads" in values else None
    except ValueError as exc:
        raise DomainError("sweep_config", str(exc))
    s_lo, s_hi = (parse_bound(x) for x in _range(values["s"]))
    return classification.SweepConfig((n_lo, n_hi), (s_lo, s_hi), (m_lo, m_hi), eps, threads)


def sweep_row(rep: classification.ClassificationReport) -> dict:
    p = rep.params
    return {
        "n": p.n, "s": p.s, "d": p.d, "m": p.m, "eps": p.eps, "w": p.w, "v": p.v,
        "k": p.k, "delta": p.delta, "e": p.e, "planar": rep.in_planar_range,
        "residual_deg": rep.residual_degree, "residual_genus": rep.residual_genus,
        "G_profile": rep.bound_G, "G_closed": hilbert.closed_form_value(p),
        "closure_ok": rep.closure_ok,
    }


# ------------------------------------------------------------ commands


def cmd_params(args):
    p = hilbert.decompose(args.d, args.n, args.s)
    return jsonable(p), None, None


def cmd_bound(args):
    p = hilbert.decompose(args.d, args.n, args.s)
    rep = hilbert.genus_closed_form(p)
    doc = {
        "d": p.d, "n": p.n, "s": p.s,
        "G_profile": rep.profile_sum,
        "G_closed_form": rep.closed_form,
        "discrepancy": rep.difference,
        "castelnuovo_genus": hilbert.castelnuovo_genus(p.s, p.n - 1),
        "castelnuovo_printed": hilbert.castelnuovo_genus_printed(p.s, p.n - 1),
        "in_asymptotic_range": p.in_asymptotic_range,
    }
    return doc, None, None


def cmd_deltah(args):
    p = hilbert.decompose(args.d, args.n, args.s)
    prof = hilbert.profile(p)
    rows = [
        {"r": r, "delta_h": dh, "h": h, "h1": hilbert.h1_points(prof, r)}
        for r, (dh, h) in enumerate(zip(prof.deltas, prof.cumulative))
    ]
    doc = {"d": p.d, "n": p.n, "s": p.s, "mass": prof.mass, "genus": hilbert.acm_genus(prof)}
    return doc, rows, ["r", "delta_h", "h", "h1"]


def cmd_scroll(args):
    sc = scroll.parse_scroll(args.degrees)
    canon = scroll.canonical_class(sc)
    doc = {
        "degrees": list(sc.degrees), "r": sc.r, "f": sc.f, "n_emb": sc.n_emb,
        "vertex_dim": sc.vertex_dim, "smooth": sc.smooth,
        "class_group": scroll.class_group(sc),
        "canonical_class": canon,
        "canonical_class_normalized": scroll.normalize_class(sc, canon),
    }
    if sc.r >= 3:
        dim, deg, smooth = scroll.hyperplane_section_descriptor(sc)
        doc["hyperplane_section"] = {"dim": dim, "degree": deg, "smooth": smooth}
    return doc, None, None


def cmd_intersect(args):
    sc = scroll.parse_scroll(args.scroll)
    return {"scroll": list(sc.degrees), "expression": args.expr, "value": evaluate(sc, args.expr)}, None, None


def cmd_transform(args):
    sc = scroll.parse_scroll(args.scroll)
    if args.d is not None:
        if args.cut is not None or args.mult is not None:
            raise UsageError("transform: use either --d or --cut/--mult")
        cls = transforms.total_transform(sc, args.d)
        return {"scroll": list(sc.degrees), "kind": "total", "d": args.d, "class": cls}, None, None
    if args.cut is None or args.mult is None:
        raise UsageError("transform: need --d, or both --cut and --mult")
    cls = transforms.proper_transform_through_vertex(sc, args.cut, args.mult)
    doc = {"scroll": list(sc.degrees), "kind": "proper", "cut_degree": args.cut, "multiplicity": args.mult, "class": cls}
    return doc, None, None


def cmd_cigenus(args):
    sc = scroll.parse_scroll(args.scroll)
    ci = chow.ci_invariants(sc, args.a, args.b)
    return dict(jsonable(ci), scroll=list(sc.degrees)), None, None


def cmd_link(args):
    sc = scroll.parse_scroll(args.scroll)
    known = linkage.CurveInvariants(args.known_degree, args.known_genus, args.known_ruling)
    res = linkage.link_genus(sc, args.a, args.b, known, args.unknown_degree, args.unknown_ruling)
    doc = {
        "scroll": list(sc.degrees), "a": args.a, "b": args.b,
        "variant": res.variant, "ci_genus": res.ci.genus,
        "known": known, "linked": res.curve, "empty_curve": res.empty_curve,
    }
    return doc, None, None


def cmd_quadric(args):
    data = linkage.residual_quadric_invariants(args.n)
    return dict(jsonable(data), noether_closure=True), None, None


def cmd_classify(args):
    rep = classification.classify(args.d, args.n, args.s)
    doc = jsonable(rep)
    params = doc.pop("params")
    doc = dict(params, **doc)
    doc["G_closed_form"] = hilbert.closed_form_value(rep.params)
    return doc, None, None


def cmd_verify(args):
    return jsonable(classification.verify_closure(args.d, args.n, args.s)), None, None


def cmd_lower_bound(args):
    lb = classification.line_vertex_lower_bound(args.d, args.n, args.s, args.i)
    return {"d": args.d, "n": args.n, "s": args.s, "i": args.i, "lower_bound": lb.value, "label": lb.label}, None, None


def cmd_sweep(args):
    try:
        with open(args.config, encoding="utf-8") as fh:
            cfg = parse_sweep_config(fh.read())
    except OSError as exc:
        raise UsageError(f"sweep: cannot read config: {exc}")
    if args.threads is not None:
        cfg = classification.SweepConfig(cfg.n_range, cfg.s_range, cfg.m_range, cfg.eps_filter, args.threads)
    result = classification.sweep(cfg)
    rows = [sweep_row(r) for r in result.rows]
    doc = {
        "rows_total": len(rows),
        "closure_attempted": result.closure_attempted,
        "closure_passed": result.closure_passed,
    }
    return doc, rows, SWEEP_COLUMNS


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")

    parser = _Parser(prog="scrollink", description="Divisors, genus bounds and linkage on rational normal scrolls.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    for name, func, help_text in [
        ("params", cmd_params, "parameter decomposition of (d, n, s)"),
        ("bound", cmd_bound, "maximal genus G(d, n, s) and closed-form comparison"),
        ("deltah", cmd_deltah, "Hilbert-function profile of the hyperplane section"),
        ("classify", cmd_classify, "describe the linked curve"),
        ("verify", cmd_verify, "check the genus closure through linkage"),
    ]:
        p = add(name, func, help_text)
        for arg in ("d", "n", "s"):
            p.add_argument(arg, type=int)

    p = add("lower-bound", cmd_lower_bound, "tail-sum lower bound for line-vertex 3-folds")
    for arg in ("d", "n", "s", "i"):
        p.add_argument(arg, type=int)

    p = add("scroll", cmd_scroll, "describe a scroll, e.g. 0,0,3")
    p.add_argument("degrees")

    p = add("intersect", cmd_intersect, "intersection number of a product of classes")
    p.add_argument("--scroll", required=True)
    p.add_argument("expr")

    p = add("transform", cmd_transform, "total or proper transform to the resolution")
    p.add_argument("--scroll", required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--cut", type=int)
    p.add_argument("--mult", type=int)

    p = add("cigenus", cmd_cigenus, "invariants of a complete intersection curve")
    p.add_argument("--scroll", required=True)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = add("link", cmd_link, "genus of the curve linked by a c.i. of type (a, b)")
    p.add_argument("--scroll", required=True)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--known-degree", type=int, required=True)
    p.add_argument("--known-genus", type=int, required=True)
    p.add_argument("--known-ruling", type=int, required=True)
    p.add_argument("--unknown-degree", type=int, required=True)
    p.add_argument("--unknown-ruling", type=int, required=True)

    p = add("quadric-residual", cmd_quadric, "invariants of the residual to a scroll in quadrics")
    p.add_argument("n", type=int)

    p = add("sweep", cmd_sweep, "classify a parameter range from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--threads", type=int)

    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())
        doc, rows, columns = args.func(args)
        out.write(emit(doc, args.format, rows, columns))
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        err.write(f"domain error [{exc.precondition}]: {exc}\n")
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        err.write(f"internal consistency failure: {exc}\n")
        return EXIT_INTERNAL
    return EXIT_OK


def main():
    sys.exit(run())

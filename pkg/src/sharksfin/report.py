"""Classification and normal-form reports with text and JSON renderings.

Every number in a report is wrapped with its arithmetic mode:

    {"mode": "exact", "value": "-3/2"}
    {"mode": "floating", "tolerance": 1e-09, "value": 0.25}

Floating values derived from exact data (cusp curvatures, angles) carry
tolerance 0.0: they are rounded but no zero test was applied to them.
"""
from __future__ import annotations

import json
from fractions import Fraction

from sharksfin.applications import UnsupportedUmbrella, motion_classify, whitney_project_classify
from sharksfin.classify import Classification, CriterionError, Verdict, classify_germ
from sharksfin.cusp import branch_image_cusps, branch_invariants, germ_branches
from sharksfin.document import DocumentError, InputDocument
from sharksfin.jets import JetError, MapJet2
from sharksfin.normalform import NormalFormError, so2_invariants, so2_normal_form
from sharksfin.scalar import Quad

__all__ = [
    "SCHEMA",
    "ReportError",
    "classify_report",
    "normal_form_report",
    "render",
    "render_machine",
    "render_text",
]

SCHEMA = "sharksfin-report/1"


class ReportError(ValueError):
    """The document violates a precondition of the requested command."""


class _Tagger:
    def __init__(self, floating: bool, tol: float):
        self.floating = floating
        self.tol = tol

    def __call__(self, x, derived: bool = False):
        if x is None:
            return None
        if isinstance(x, (tuple, list)):
            return [self(y, derived) for y in x]
        if derived or isinstance(x, (float, complex)):
            tol = 0.0 if derived and not self.floating else self.tol
            return {"mode": "floating", "tolerance": tol, "value": _plain(x)}
        return {"mode": "exact", "value": _exact_str(x)}


def _plain(x):
    if isinstance(x, complex):
        if x.imag == 0:
            return x.real
        return [x.real, x.imag]
    if isinstance(x, Quad):
        c = complex(x)
        return c.real if c.imag == 0 else [c.real, c.imag]
    return float(x)


def _exact_str(x) -> str:
    if isinstance(x, Quad):
        return str(x)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _resolve_mode(doc: InputDocument, mode: str | None) -> bool:
    """True when the floating pipeline should be used."""
    if mode == "exact" and doc.floating:
        raise ReportError("document has decimal coefficients; use --mode float")
    if mode not in (None, "exact", "float"):
        raise ReportError(f"unknown mode {mode!r}")
    return mode == "float" or doc.floating


def _build_germ(doc: InputDocument, order: int | None, floating: bool) -> MapJet2:
    try:
        return doc.germ(order, floating)
    except (JetError, DocumentError, ValueError) as exc:
        raise ReportError(str(exc)) from None


def _header(command: str, doc: InputDocument, floating: bool, tol: float, order: int) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "source": doc.mode,
        "order": order,
        "arithmetic": {"mode": "floating", "tolerance": tol} if floating else {"mode": "exact"},
    }


def _classification_fields(c: Classification, tag: _Tagger) -> dict:
    out = {"verdict": c.verdict.value, "rank": c.rank}
    if c.hessian is not None:
        h = c.hessian
        out["hessian"] = {"huu": tag(h.huu), "huv": tag(h.huv), "hvv": tag(h.hvv),
                          "det": tag(h.det), "index": h.index}
    if c.roots is not None:
        r = c.roots
        out["quadric_roots"] = {"eta1": tag(r.eta1), "eta2": tag(r.eta2),
                                "discriminant": tag(r.discriminant), "field": r.field}
    if c.d1 is not None:
        out["d1"] = tag(c.d1)
        out["d2"] = tag(c.d2)
    if c.product is not None:
        out["product"] = tag(c.product)
    if c.witnesses:
        out["witnesses"] = {k: tag(v) for k, v in c.witnesses.items()}
    return out


def _cusp_fields(cd, tag: _Tagger) -> dict:
    out = {"is_cusp": cd.is_cusp, "c2": tag(cd.c2), "c3": tag(cd.c3), "det": tag(cd.det)}
    if cd.reason:
        out["reason"] = cd.reason
    return out


def _branch_fields(f: MapJet2, tag: _Tagger, tol: float) -> dict | None:
    """Cusp tests of both branch images plus the curvature invariants.

    Needs order >= 4 so that f o gamma is known to order 3.
    """
    if f.order < 4:
        return None
    ztol = tol if tag.floating else 0.0
    try:
        br = germ_branches(f, ztol)
        c1, c2 = branch_image_cusps(f, br, ztol)
    except (CriterionError, JetError, ArithmeticError):
        return None
    out = {"branch_1": _cusp_fields(c1, tag), "branch_2": _cusp_fields(c2, tag)}
    if c1.is_cusp and c2.is_cusp:
        try:
            inv = branch_invariants(f)
        except (CriterionError, JetError):
            return out
        out["kappa_plus"] = tag(inv.kappa_plus, derived=True)
        out["kappa_minus"] = tag(inv.kappa_minus, derived=True)
        out["theta_gamma"] = tag(inv.theta_gamma, derived=True)
        out["cuspidal_directions"] = [tag(inv.plus.direction, derived=True),
                                      tag(inv.minus.direction, derived=True)]
    return out


def classify_report(doc: InputDocument, order: int | None = None, mode: str | None = None,
                    tol: float = 1e-9) -> dict:
    floating = _resolve_mode(doc, mode)
    tag = _Tagger(floating, tol)
    f = _build_germ(doc, order, floating)
    rep = _header("classify", doc, floating, tol, f.order)
    if doc.mode == "germ":
        try:
            c = classify_germ(f, tol=tol)
        except (JetError, CriterionError) as exc:
            raise ReportError(str(exc)) from None
        rep.update(_classification_fields(c, tag))
        if c.verdict == Verdict.SHARKSFIN:
            rep["branches"] = _branch_fields(f, tag, tol)
        return rep
    if doc.mode == "umbrella":
        w = doc.umbrella(floating)
        try:
            c = whitney_project_classify(w, tol)
        except UnsupportedUmbrella as exc:
            raise ReportError(str(exc)) from None
        rep["umbrella_kind"] = w.kind
    else:
        c = motion_classify(doc.motion(floating), tol)
    rep.update(_classification_fields(c, tag))
    # the direct germ is classified too, as a consistency record
    direct = classify_germ(f, tol=tol)
    rep["direct_verdict"] = direct.verdict.value
    if c.verdict == Verdict.SHARKSFIN:
        rep["branches"] = _branch_fields(f, tag, tol)
    return rep


def normal_form_report(doc: InputDocument, order: int | None = None, mode: str | None = None,
                       tol: float = 1e-9) -> dict:
    """Runs the (floating) normal-form pipeline; raises ReportError on degenerate input."""
    floating = _resolve_mode(doc, mode)
    f = _build_germ(doc, order, floating)
    rep = _header("normal-form", doc, True, tol, f.order)
    c = classify_germ(f, tol=tol)
    rep["verdict"] = c.verdict.value
    if c.verdict in (Verdict.NOT_RANK_ZERO, Verdict.DEGENERATE_HESSIAN):
        raise ReportError(f"no normal form for a {c.verdict.value} germ")
    try:
        nf = so2_normal_form(f, tol)
    except (NormalFormError, CriterionError) as exc:
        raise ReportError(str(exc)) from None
    tag = _Tagger(True, tol)
    rep["normal_form"] = {
        "a20": tag(nf.a20), "eps1": nf.eps1, "eps2": nf.eps2,
        "a30": tag(nf.a30), "a03": tag(nf.a03), "defect": tag(nf.defect),
        "target_angle": tag(nf.angle),
    }
    rep["log"] = [{"step": s.name, "angle": tag(s.angle), "source_change": s.source is not None}
                  for s in nf.log]
    if nf.is_sharksfin and c.verdict == Verdict.SHARKSFIN:
        inv = so2_invariants(nf)
        rep["invariants"] = {"kappa_plus": tag(inv.kappa_plus), "kappa_minus": tag(inv.kappa_minus),
                             "theta_gamma": tag(inv.theta_gamma)}
    return rep


# -- rendering -----------------------------------------------------------------

def render_machine(rep: dict) -> str:
    return json.dumps(rep, sort_keys=True, indent=2, ensure_ascii=True, allow_nan=False) + "\n"


def _text_value(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, list):
        return "(" + ", ".join(_text_value(x) for x in v) + ")"
    if isinstance(v, dict) and "mode" in v and "value" in v:
        x = v["value"]
        if isinstance(x, list):
            s = f"{x[0]:.12g}{x[1]:+.12g}i"
        elif isinstance(x, float):
            s = f"{x:.12g}"
        else:
            s = str(x)
        return s if v["mode"] == "exact" else s + " ~"
    return str(v)


def _text_lines(d: dict, indent: int = 0) -> list[str]:
    out = []
    pad = "  " * indent
    for k, v in d.items():
        if isinstance(v, dict) and not ("mode" in v and "value" in v):
            out.append(f"{pad}{k}:")
            out.extend(_text_lines(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict) and "step" in v[0]:
            out.append(f"{pad}{k}:")
            for s in v:
                turn = s["angle"]["value"] != 0.0
                out.append(f"{pad}  - {s['step']}" + (f" (rotation {_text_value(s['angle'])})" if turn else ""))
        else:
            out.append(f"{pad}{k}: {_text_value(v)}")
    return out


def render_text(rep: dict) -> str:
    """Human-readable rendering; '~' marks floating values."""
    head = {k: rep[k] for k in ("command", "source", "verdict") if k in rep}
    rest = {k: v for k, v in rep.items() if k not in head and k != "schema"}
    lines = [f"{k}: {v}" for k, v in head.items()]
    lines.extend(_text_lines(rest))
    return "\n".join(lines) + "\n"


def render(rep: dict, fmt: str) -> str:
    if fmt == "machine":
        return render_machine(rep)
    if fmt == "text":
        return render_text(rep)
    raise ValueError(f"unknown format {fmt!r}")

"""Projections of Whitney umbrellas and trajectories of composite planar motions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sharksfin.classify import Classification, Verdict, classify_germ
from sharksfin.cusp import CuspData, curve_cusp_test
from sharksfin.jets import FLOAT, CurveJet, Jet2, MapJet2, series_elem
from sharksfin.scalar import Quad, sqrt_rational

__all__ = [
    "UmbrellaForm",
    "MotionSpec",
    "UnsupportedUmbrella",
    "whitney_project_classify",
    "whitney_direct_jet",
    "umbrella_projection_w_coeffs",
    "motion_trajectory_jet",
    "motion_classify",
    "motion_determinants",
    "translation_curve",
    "translation_cusp",
    "w_quadratic_coefficients",
    "cross_check_umbrella",
    "cross_check_motion",
]

_UMBRELLA_KEYS = ("d20", "d11", "d02", "d30", "d21", "d12", "d03")


class UnsupportedUmbrella(ValueError):
    pass


def _is_float(*xs) -> bool:
    return any(isinstance(x, float) for x in xs)


def _exact(x):
    return x if isinstance(x, float) else Fraction(x)


@dataclass(frozen=True)
class UmbrellaForm:
    """Projection (X1, X2, X3) -> (X2, X3) of the umbrella normal form.

    The projected germ is (uv + c3 v^3/6, sum d_ij u^i v^j / (i! j!)).
    """

    c3: object
    d20: object
    d02: object
    d11: object = 0
    d30: object = 0
    d21: object = 0
    d12: object = 0
    d03: object = 0

    def __post_init__(self):
        for k in ("c3",) + _UMBRELLA_KEYS:
            object.__setattr__(self, k, _exact(getattr(self, k)))
        if not self.c3 > 0:
            raise ValueError("c3 must be positive")
        if not self.d02 > 0:
            raise ValueError("d02 must be positive")

    @property
    def floating(self) -> bool:
        return _is_float(self.c3, *(getattr(self, k) for k in _UMBRELLA_KEYS))

    @property
    def kind(self) -> str:
        if self.d20 > 0:
            return "elliptic"
        if self.d20 < 0:
            return "hyperbolic"
        return "parabolic"

    @property
    def dtilde20(self):
        return _sqrt(abs(self.d20))

    @property
    def dtilde02(self):
        return _sqrt(self.d02)

    def coefficients(self) -> dict:
        return {k: getattr(self, k) for k in ("c3",) + _UMBRELLA_KEYS}


def _sqrt(x):
    if isinstance(x, float):
        return math.sqrt(x)
    return sqrt_rational(x)


def whitney_direct_jet(w: UmbrellaForm, order: int = 4) -> MapJet2:
    kind = FLOAT if w.floating else None
    first = {(1, 1): 1, (0, 3): w.c3 / 6}
    second = {}
    for key in _UMBRELLA_KEYS:
        i, j = int(key[1]), int(key[2])
        second[(i, j)] = getattr(w, key) / (math.factorial(i) * math.factorial(j))
    if kind == FLOAT:
        first = {k: float(v) for k, v in first.items()}
        second = {k: float(v) for k, v in second.items()}
    return MapJet2(Jet2(order, first, kind=kind), Jet2(order, second, kind=kind))


def _umbrella_parts(w: UmbrellaForm):
    # E(delta) = dt02 * X + delta * dt20 * Y
    x = w.d30 * w.d02 + 3 * w.d12 * w.d20 - w.c3 * w.d20 ** 2
    y = 3 * w.d21 * w.d02 + (w.d03 - w.d11 * w.c3) * w.d20
    return x, y


def whitney_project_classify(w: UmbrellaForm, tol: float = 1e-9) -> Classification:
    """Closed-form verdict for the projection; witnesses are the condition values.

    Elliptic: both delta-expressions nonzero, decided on their product
    d02 X^2 - d20 Y^2.  Hyperbolic: the two deltoid expressions, not both zero.
    """
    if w.d20 == 0:
        raise UnsupportedUmbrella("parabolic umbrella (d20 = 0) is not covered")
    floating = w.floating
    ztol = tol if floating else 0.0

    def nz(x):
        return abs(x) > ztol if floating else x != 0

    mode = "float" if floating else "exact"
    if w.d20 > 0:
        x, y = _umbrella_parts(w)
        product = w.d02 * x * x - w.d20 * y * y
        try:
            a = w.dtilde02 * x
            b = w.dtilde20 * y
            plus, minus = a + b, a - b
            plus, minus = _simplify(plus), _simplify(minus)
        except ValueError:
            # two different quadratic fields; report floating witnesses
            a = math.sqrt(float(w.d02)) * float(x)
            b = math.sqrt(float(w.d20)) * float(y)
            plus, minus = a + b, a - b
        verdict = Verdict.SHARKSFIN if nz(product) else Verdict.NOT_RECOGNIZED
        witnesses = {"delta_plus": plus, "delta_minus": minus, "product": product}
        return Classification(verdict, 0, product=product, mode=mode,
                              tolerance=tol if floating else None, witnesses=witnesses)
    ad20 = -w.d20
    e1 = w.d30 * w.d02 - 3 * w.d12 * ad20 - w.c3 * ad20 ** 2
    e2 = w.d03 * ad20 - 3 * w.d21 * w.d02 - w.d11 * w.c3 * ad20
    verdict = Verdict.DELTOID if (nz(e1) or nz(e2)) else Verdict.NOT_RECOGNIZED
    product = e1 * e1 + e2 * e2
    witnesses = {"deltoid_first": e1, "deltoid_second": e2, "product": product}
    return Classification(verdict, 0, product=product, mode=mode,
                           tolerance=tol if floating else None, witnesses=witnesses)


def _simplify(x):
    if isinstance(x, Quad) and x.is_rational():
        return x.a
    return x


def _admissible_cot(d20: float, d11: float, d02: float) -> tuple[float, str]:
    """cot(theta) for the umbrella projection; '+' branch when it gives a real frame."""
    if d11 == 0:
        return (0.0, "+") if d20 * d02 < 0 else (math.inf, "none")
    b = 1 - d11 * d11 + d02 * d20
    rad = math.sqrt(4 * d11 * d11 + b * b)
    for branch, t in (("+", (-b + rad) / (2 * d11)), ("-", (-b - rad) / (2 * d11))):
        if (t - d11) ** 2 - d02 * d20 > 0:
            return t, branch
    raise ArithmeticError("no admissible rotation")


def umbrella_projection_w_coeffs(w: UmbrellaForm) -> dict:
    """w1, w2, w3 and cot(theta) of the quadratic normal form of the projection.

    After the rotation by theta and the frame u = u1 + v1, v = c u1 + d v1 the
    projection is (w1 uv, w2 u^2/2 + w3 v^2/2) + O(3), where
    c, d = (t - d11 -+ x1) / d02 and x1 = sqrt((t - d11)^2 - d20 d02).
    """
    d20, d11, d02 = float(w.d20), float(w.d11), float(w.d02)
    t, branch = _admissible_cot(d20, d11, d02)
    if branch == "none":
        # already free of the mixed term: no rotation, identity frame
        return {"w1": 1.0, "w2": d20, "w3": d02, "cot": math.inf, "branch": branch, "x1": None}
    theta = math.atan2(1.0, t)
    cs, sn = math.cos(theta), math.sin(theta)
    x1 = math.sqrt((t - d11) ** 2 - d02 * d20)
    w1 = -2 * ((d11 - t) * cs + (-d11 * d11 + d02 * d20 + d11 * t) * sn) / d02
    k = t * cs + sn
    w2 = 2 * (t - d11 - x1) * k / d02
    w3 = 2 * (t - d11 + x1) * k / d02
    return {"w1": w1, "w2": w2, "w3": w3, "cot": t, "branch": branch, "x1": x1}


def w_quadratic_coefficients(wc: dict) -> tuple[float, float]:
    """u^2 and v^2 coefficients (halved) of the balanced form built from w1, w2, w3."""
    w1, w2, w3 = wc["w1"], wc["w2"], wc["w3"]
    return (w3 / (2 * abs(w1)) * abs(w2 / w3) ** 0.5, w2 / (2 * abs(w1)) * abs(w3 / w2) ** 0.5)


# -- planar motions -----------------------------------------------------------

def _coeffs(xs) -> tuple:
    if isinstance(xs, (int, float, Fraction)):
        xs = [xs]
    return tuple(_exact(x) for x in xs)


@dataclass(frozen=True)
class MotionSpec:
    """alpha(u) = ((u^2 a1, u^2 a2), u^2 p), beta(v) = ((v^2 b1, v^2 b2), v^2 q).

    Each function is a coefficient list (constant term first); omega is the
    tracked point.
    """

    a1: tuple = (0,)
    a2: tuple = (0,)
    p: tuple = (0,)
    b1: tuple = (0,)
    b2: tuple = (0,)
    q: tuple = (0,)
    omega: tuple = (0, 0)

    def __post_init__(self):
        for k in ("a1", "a2", "p", "b1", "b2", "q", "omega"):
            object.__setattr__(self, k, _coeffs(getattr(self, k)))
        if len(self.omega) != 2:
            raise ValueError("omega needs two coordinates")

    @property
    def floating(self) -> bool:
        return _is_float(*(x for k in ("a1", "a2", "p", "b1", "b2", "q", "omega") for x in getattr(self, k)))

    def value(self, name: str, k: int):
        xs = getattr(self, name)
        return xs[k] if k < len(xs) else 0


def _shifted(xs: Sequence, var: int, order: int, kind) -> Jet2:
    """s^2 * sum xs[k] s^k as a jet, s = u (var 0) or v (var 1)."""
    table = {}
    for k, c in enumerate(xs):
        if k + 2 <= order:
            table[(k + 2, 0) if var == 0 else (0, k + 2)] = c
    return Jet2(order, table, kind=kind)


def motion_trajectory_jet(m: MotionSpec, order: int = 4) -> MapJet2:
    """ev_omega(beta(v) alpha(u)) - omega.

    = R(u^2 p + v^2 q) omega + R(v^2 q) (u^2 a1, u^2 a2) + (v^2 b1, v^2 b2) - omega.
    """
    kind = FLOAT if m.floating else None
    jk = FLOAT if m.floating else "exact"
    if kind == FLOAT:
        m = MotionSpec(*(tuple(float(x) for x in getattr(m, k)) for k in ("a1", "a2", "p", "b1", "b2", "q", "omega")))
    up, vq = _shifted(m.p, 0, order, jk), _shifted(m.q, 1, order, jk)
    ua1, ua2 = _shifted(m.a1, 0, order, jk), _shifted(m.a2, 0, order, jk)
    vb1, vb2 = _shifted(m.b1, 1, order, jk), _shifted(m.b2, 1, order, jk)
    ang = up + vq
    ca, sa = series_elem("cos", ang), series_elem("sin", ang)
    cq, sq = series_elem("cos", vq), series_elem("sin", vq)
    w1, w2 = m.omega
    x = ca.scale(w1) - sa.scale(w2) + cq * ua1 - sq * ua2 + vb1 - w1
    y = sa.scale(w1) + ca.scale(w2) + sq * ua1 + cq * ua2 + vb2 - w2
    return MapJet2(x, y)


def _det3(r0, r1, r2):
    return (r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
            - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
            + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]))


def motion_determinants(m: MotionSpec) -> tuple:
    v = m.value
    top = (1, m.omega[1], -m.omega[0])
    row_a0 = (v("p", 0), v("a1", 0), v("a2", 0))
    row_a1 = (v("p", 1), v("a1", 1), v("a2", 1))
    row_b0 = (v("q", 0), v("b1", 0), v("b2", 0))
    row_b1 = (v("q", 1), v("b1", 1), v("b2", 1))
    return _det3(top, row_a0, row_b0), _det3(top, row_a0, row_a1), _det3(top, row_b0, row_b1)


def motion_classify(m: MotionSpec, tol: float = 1e-9) -> Classification:
    """Sharksfin iff all three determinants are nonzero; a deltoid cannot occur.

    The first determinant is, up to a nonzero factor, the Hessian of the
    identifier, which is never definite here.
    """
    d1, d2, d3 = motion_determinants(m)
    floating = m.floating

    def z(x):
        return abs(x) <= tol if floating else x == 0

    if z(d1):
        verdict = Verdict.DEGENERATE_HESSIAN
    elif z(d2) or z(d3):
        verdict = Verdict.NOT_RECOGNIZED
    else:
        verdict = Verdict.SHARKSFIN
    return Classification(verdict, 0, product=d2 * d3, mode="float" if floating else "exact",
                          tolerance=tol if floating else None,
                          witnesses={"det1": d1, "det2": d2, "det3": d3})


def translation_curve(m: MotionSpec, order: int = 4) -> CurveJet:
    """u -> (u^2 a1(u), u^2 a2(u))."""
    xs = [0, 0] + [m.value("a1", k) for k in range(order - 1)]
    ys = [0, 0] + [m.value("a2", k) for k in range(order - 1)]
    return CurveJet(order, xs, ys)


def translation_cusp(m: MotionSpec) -> tuple[bool, CuspData]:
    """(closed-form condition, cusp test of the curve)."""
    cond = m.value("a1", 0) * m.value("a2", 1) - m.value("a2", 0) * m.value("a1", 1) != 0
    return cond, curve_cusp_test(translation_curve(m, 3))


def cross_check_umbrella(w: UmbrellaForm, order: int = 4) -> tuple[Classification, Classification]:
    return whitney_project_classify(w), classify_germ(whitney_direct_jet(w, order))


def cross_check_motion(m: MotionSpec, order: int = 4) -> tuple[Classification, Classification]:
    return motion_classify(m), classify_germ(motion_trajectory_jet(m, order))


"""R+ x SO(2) normal form of rank-zero germs with nondegenerate identifier.

Target: rotations only.  Source: orientation-preserving coordinate changes.
Every germ in scope is brought to

    (uv, eps1 a20 u^2/2 + eps2 a20 v^2/2 + a30 u^3/6 + a03 v^3/6) + O(4),

a20 > 0, (eps1, eps2) in {(1, 1), (1, -1), (-1, 1)}.  The pipeline runs in
floating point; each step is logged so the input can be rebuilt.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from sharksfin.jets import FLOAT, Jet2, JetError, MapJet2

__all__ = [
    "NormalFormError",
    "Step",
    "So2NormalForm",
    "CuspInvariants",
    "reduce_to_uv_form",
    "eliminate_mixed_quadratic",
    "kill_mixed_cubics",
    "so2_normal_form",
    "so2_invariants",
    "cot_candidates",
    "kappa_closed_form",
    "theta_closed_form",
    "rotation",
]

DEFAULT_TOL = 1e-9


class NormalFormError(JetError):
    pass


def rotation(theta: float):
    c, s = math.cos(theta), math.sin(theta)
    return ((c, -s), (s, c))


@dataclass(frozen=True)
class Step:
    name: str
    angle: float = 0.0  # target rotation applied at this step
    source: MapJet2 | None = None  # source change phi, g <- g o phi


@dataclass
class So2NormalForm:
    a20: float
    eps1: int
    eps2: int
    a30: float
    a03: float
    residual: MapJet2
    log: list = field(default_factory=list)
    angle: float = 0.0
    source_change: MapJet2 | None = None
    input: MapJet2 | None = None
    defect: float = 0.0  # largest leftover degree <= 3 coefficient outside the normal form

    @property
    def is_sharksfin(self) -> bool:
        return self.eps1 == self.eps2 == 1

    @property
    def order(self) -> int:
        return self.residual.order

    def normal_jet(self, order: int | None = None) -> MapJet2:
        n = self.order if order is None else order
        return MapJet2(
            Jet2(n, {(1, 1): 1.0}, kind=FLOAT),
            Jet2(n, {(2, 0): self.eps1 * self.a20 / 2, (0, 2): self.eps2 * self.a20 / 2,
                     (3, 0): self.a30 / 6, (0, 3): self.a03 / 6}, kind=FLOAT),
        )

    def transformed(self) -> MapJet2:
        """M o f o phi as produced by the pipeline (normal 3-jet + residual)."""
        return self.normal_jet() + self.residual

    def reconstruct(self) -> MapJet2:
        """Replay the log backwards: M^-1 o (normal form + residual) o phi^-1."""
        g = self.transformed().compose(self.source_change.inverse())
        return g.then_linear(rotation(-self.angle))

    def round_trip_error(self, degree: int = 3) -> float:
        diff = self.reconstruct() - self.input.to_float()
        return max(max(abs(x) for d in range(degree + 1) for x in comp.homogeneous(d)) for comp in diff)


@dataclass(frozen=True)
class CuspInvariants:
    kappa_plus: float
    kappa_minus: float
    theta_gamma: float


# -- small linear algebra -------------------------------------------------

def _sym(comp: Jet2) -> np.ndarray:
    p, q, r = comp.homogeneous(2)
    return np.array([[p, q / 2], [q / 2, r]], dtype=float)


def _det(m: np.ndarray) -> float:
    return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def _apolar(a: np.ndarray, b: np.ndarray) -> float:
    return float(a[0, 0] * b[1, 1] + a[1, 1] * b[0, 0] - 2 * a[0, 1] * b[0, 1])


def _isotropic_pair(p: float, q: float, r: float, tol: float):
    """Two real directions killing p x^2 + q x y + r y^2 (indefinite), det > 0.

    Directions are normalized as (1, x) when the y^2 coefficient allows it.
    """
    disc = q * q - 4 * p * r
    if disc <= 0:
        raise NormalFormError("quadratic part is not indefinite")
    if abs(r) > tol:
        x1 = (-q - math.sqrt(disc)) / (2 * r)
        x2 = (-q + math.sqrt(disc)) / (2 * r)
        c, d = min(x1, x2), max(x1, x2)
        return (1.0, c), (1.0, d)
    # r = 0: y (q x + r y) with one root vertical
    if abs(p) <= tol:
        return (1.0, 0.0), (0.0, 1.0)
    a, b = (0.0, 1.0), (-q / p, 1.0)
    if a[0] * b[1] - a[1] * b[0] < 0:
        a, b = b, a
    return a, b


def _quad_coeffs(comp: Jet2) -> tuple[float, float, float]:
    p, q, r = comp.homogeneous(2)
    return p, q, r


# -- the pipeline ----------------------------------------------------------

class _Tracker:
    """Current g = M(angle) o f o phi together with the step log."""

    def __init__(self, f: MapJet2, tol: float):
        if f.order < 3:
            raise NormalFormError("normal form needs at least the 3-jet")
        self.f = f
        self.g = f.to_float()
        self.phi = MapJet2.identity(f.order, FLOAT)
        self.angle = 0.0
        self.log: list[Step] = []
        s = max(max(abs(x) for x in comp.homogeneous(2)) for comp in self.g)
        if s == 0:
            raise NormalFormError("2-jet vanishes")
        self.scale = s
        self.tol = tol

    def zero(self, x: float, weight: float = 1.0) -> bool:
        return abs(x) <= self.tol * weight

    def source(self, name: str, phi: MapJet2) -> None:
        self.g = self.g.compose(phi)
        self.phi = self.phi.compose(phi)
        self.log.append(Step(name, 0.0, phi))

    def linear(self, name: str, matrix) -> None:
        self.source(name, MapJet2.linear(matrix, self.g.order, kind=FLOAT))

    def rotate(self, name: str, theta: float) -> None:
        if theta == 0.0:
            return
        self.g = self.g.then_linear(rotation(theta))
        self.angle = math.remainder(self.angle + theta, 2 * math.pi)
        self.log.append(Step(name, theta, None))


def _check_rank_zero(tr: _Tracker) -> None:
    for comp in tr.g:
        if not comp.low_degree_vanishes(2, tr.tol * tr.scale):
            raise NormalFormError("germ has a nonzero linear part (rank > 0)")


def _check_identifier(tr: _Tracker) -> None:
    lam = tr.g.jacobian_det()
    huu, huv, hvv = 2 * lam[2, 0], lam[1, 1], 2 * lam[0, 2]
    if tr.zero(huu * hvv - huv * huv, tr.scale ** 4):
        raise NormalFormError("identifier Hessian is degenerate")


def _morse(tr: _Tracker, name: str = "morse") -> None:
    """First component uv + O(3) -> uv + O(N+1), degree by degree."""
    n = tr.g.order
    for k in range(3, n + 1):
        h = tr.g.f1.homogeneous(k)
        if all(x == 0.0 for x in h):
            continue
        p_terms, r_terms = {}, {}
        for j, c in enumerate(h):
            i = k - j
            if i >= 1:
                r_terms[(i - 1, j)] = -c
            else:
                p_terms[(0, j - 1)] = -c
        p_terms[(1, 0)] = p_terms.get((1, 0), 0.0) + 1.0
        r_terms[(0, 1)] = r_terms.get((0, 1), 0.0) + 1.0
        tr.source(f"{name}[{k}]", MapJet2(Jet2(n, p_terms, kind=FLOAT), Jet2(n, r_terms, kind=FLOAT)))


def _to_uv(tr: _Tracker) -> None:
    a, b = _sym(tr.g.f1), _sym(tr.g.f2)
    if _det(a) >= -tr.tol * tr.scale ** 2:
        # rotation making c f1 - s f2 indefinite: minimize det(cA - sB) over the circle
        form = np.array([[_det(a), -_apolar(a, b) / 2], [-_apolar(a, b) / 2, _det(b)]])
        w, vecs = np.linalg.eigh(form)
        if w[0] >= -tr.tol * tr.scale ** 2:
            raise NormalFormError("no rotation makes the first component Morse of index 1")
        c, s = vecs[:, 0]
        tr.rotate("index-1 rotation", math.atan2(s, c))
    p, q, r = _quad_coeffs(tr.g.f1)
    if tr.zero(p, tr.scale) and tr.zero(r, tr.scale):
        mat = ((1.0 / q, 0.0), (0.0, 1.0)) if q > 0 else ((0.0, 1.0), (1.0 / q, 0.0))
    else:
        r1, r2 = _isotropic_pair(p, q, r, tr.tol * tr.scale)
        if r1[0] * r2[1] - r1[1] * r2[0] < 0:
            r1, r2 = r2, r1
        # Q(x r1 + y r2) = 2 B(r1, r2) x y; keep det > 0 when scaling
        bil = float(np.array(r1) @ _sym(tr.g.f1) @ np.array(r2))
        k = 1.0 / (2 * bil)
        if k < 0:
            r1, r2 = r2, r1
        mat = ((r1[0] * k, r2[0]), (r1[1] * k, r2[1]))
    if mat != ((1.0, 0.0), (0.0, 1.0)):
        tr.linear("isotropic frame", mat)
    _check_uv(tr)
    _morse(tr)


def _check_uv(tr: _Tracker) -> None:
    p, q, r = _quad_coeffs(tr.g.f1)
    if not (tr.zero(p, tr.scale) and tr.zero(r, tr.scale) and tr.zero(q - 1.0, 1.0)):
        raise NormalFormError(f"first component did not reach uv ({p}, {q}, {r})")
    # snap round-off so later steps see an exact uv
    c = list(tr.g.f1.values())
    c[3], c[4], c[5] = 0.0, 1.0, 0.0
    tr.g = MapJet2(Jet2(tr.g.order, c, kind=FLOAT), tr.g.f2)


def _balance(tr: _Tracker) -> None:
    """(uv, a u^2/2 + ... + b v^2/2) -> |a| = |b| by u -> k u, v -> v / k."""
    p, _, r = _quad_coeffs(tr.g.f2)
    if tr.zero(p, tr.scale) or tr.zero(r, tr.scale):
        raise NormalFormError("pure quadratic coefficient of the second component vanishes")
    k = abs(r / p) ** 0.25
    if k != 1.0:
        tr.linear("balance", ((k, 0.0), (0.0, 1.0 / k)))


def _eps_sign_fix(tr: _Tracker) -> None:
    """(-,-) -> (+,+) via (u, v) -> (v, -u) and a pi-rotation."""
    p, _, r = _quad_coeffs(tr.g.f2)
    if p < 0 and r < 0:
        tr.linear("swap", ((0.0, 1.0), (-1.0, 0.0)))
        tr.rotate("pi-rotation", math.pi)


def cot_candidates(a20: float, a11: float, eps1: int = 1, eps2: int = 1) -> tuple[float, float]:
    """The two solutions t = cot(theta) of a11 t^2 + (1 - a11^2 + eps1 eps2 a20^2) t - a11 = 0.

    The first is the '+' radical branch.
    """
    if a11 == 0:
        raise ZeroDivisionError("a11 = 0 needs no rotation")
    b = 1 - a11 * a11 + eps1 * eps2 * a20 * a20
    rad = math.sqrt(b * b + 4 * a11 * a11)
    return (-b + rad) / (2 * a11), (-b - rad) / (2 * a11)


def _first_after_rotation(a: np.ndarray, b: np.ndarray, theta: float) -> np.ndarray:
    return math.cos(theta) * a - math.sin(theta) * b


def _kill_uv_in_second(tr: _Tracker) -> dict:
    """Rotation by theta (cot theta = t) plus the isotropic frame of the new first component."""
    p2, a11, r2 = _quad_coeffs(tr.g.f2)
    info = {"a11": a11, "t": None, "branch": None}
    if tr.zero(a11, tr.scale):
        return info
    a20 = abs(p2) * 2
    eps1, eps2 = (1 if p2 > 0 else -1), (1 if r2 > 0 else -1)
    a, b = _sym(tr.g.f1), _sym(tr.g.f2)
    chosen = None
    for branch, t in zip(("+", "-"), cot_candidates(a20, a11, eps1, eps2)):
        theta = math.atan2(1.0, t)
        if _det(_first_after_rotation(a, b, theta)) < -tr.tol * tr.scale ** 2:
            chosen = (branch, t, theta)
            break
    if chosen is None:
        raise NormalFormError("no admissible rotation removes the mixed quadratic term")
    branch, t, theta = chosen
    info.update(t=t, branch=branch, theta=theta)
    tr.rotate(f"cot-rotation ({branch})", theta)
    p, q, r = _quad_coeffs(tr.g.f1)
    r1, r2 = _isotropic_pair(p, q, r, tr.tol * tr.scale)
    tr.linear("isotropic frame", ((r1[0], r2[0]), (r1[1], r2[1])))
    _, q2, _ = _quad_coeffs(tr.g.f2)
    info["residual_uv"] = q2
    return info


def _normalize_b11(tr: _Tracker) -> None:
    p, b11, r = _quad_coeffs(tr.g.f1)
    if tr.zero(b11, tr.scale):
        raise NormalFormError("uv coefficient of the first component vanishes")
    tr.linear("uv scaling", ((1.0 / abs(b11), 0.0), (0.0, 1.0)))
    if b11 < 0:
        tr.rotate("pi-rotation", math.pi)
    _check_uv(tr)
    _morse(tr)


def _kill_cubics(tr: _Tracker) -> None:
    g2 = tr.g.f2
    a20, a02 = 2 * g2[2, 0], 2 * g2[0, 2]
    a21, a12 = 2 * g2[2, 1], 2 * g2[1, 2]
    if tr.zero(a20, tr.scale) or tr.zero(a02, tr.scale):
        raise NormalFormError("zero quadratic coefficient")
    n = tr.g.order
    x, y = a12 / (2 * a02), a21 / (2 * a20)
    phi = MapJet2(
        Jet2(n, {(1, 0): 1.0, (2, 0): x, (1, 1): -y}, kind=FLOAT),
        Jet2(n, {(0, 1): 1.0, (1, 1): -x, (0, 2): y}, kind=FLOAT),
    )
    tr.source("cubic change", phi)
    _check_uv(tr)
    _morse(tr)


def _finish(tr: _Tracker) -> So2NormalForm:
    _balance(tr)
    _eps_sign_fix(tr)
    g = tr.g
    p, _, r = _quad_coeffs(g.f2)
    eps1, eps2 = (1 if p > 0 else -1), (1 if r > 0 else -1)
    a20 = abs(p) * 2
    a30, a03 = 6 * g.f2[3, 0], 6 * g.f2[0, 3]
    nf = So2NormalForm(a20, eps1, eps2, a30, a03, MapJet2.identity(g.order, FLOAT),
                       list(tr.log), tr.angle, tr.phi, tr.f)
    residual = g - nf.normal_jet(g.order)
    nf.residual = residual
    nf.defect = max(max(abs(x) for d in range(4) for x in comp.homogeneous(d)) for comp in residual)
    return nf


# -- public surface ---------------------------------------------------------

def reduce_to_uv_form(f: MapJet2, tol: float = DEFAULT_TOL) -> tuple[MapJet2, float, MapJet2]:
    """(g, angle, phi) with g = M(angle) o f o phi = (uv + O(N+1), O(2))."""
    tr = _Tracker(f, tol)
    _check_rank_zero(tr)
    _check_identifier(tr)
    _to_uv(tr)
    return tr.g, tr.angle, tr.phi


def eliminate_mixed_quadratic(g: MapJet2, tol: float = DEFAULT_TOL) -> MapJet2:
    """Remove the uv term of the second component of a uv-form jet.

    The jet is balanced first (|u^2| = |v^2| coefficients) if needed; the
    result has first component b11 uv + O(3) and second alpha u^2 + beta v^2 + O(3).
    """
    tr = _Tracker(g, tol)
    _check_uv(tr)
    _balance(tr)
    _eps_sign_fix(tr)
    _kill_uv_in_second(tr)
    return tr.g


def kill_mixed_cubics(g: MapJet2, tol: float = DEFAULT_TOL) -> So2NormalForm:
    """From (b11 uv, a20 u^2/2 + a02 v^2/2) + O(3) to the final normal form."""
    tr = _Tracker(g, tol)
    _normalize_b11(tr)
    _kill_cubics(tr)
    return _finish(tr)


def so2_normal_form(f: MapJet2, tol: float = DEFAULT_TOL) -> So2NormalForm:
    """Full pipeline with one transform log for the whole run."""
    tr = _Tracker(f, tol)
    _check_rank_zero(tr)
    _check_identifier(tr)
    _to_uv(tr)
    _balance(tr)
    _eps_sign_fix(tr)
    _kill_uv_in_second(tr)
    _normalize_b11(tr)
    _kill_cubics(tr)
    return _finish(tr)


def kappa_closed_form(a20: float, a30: float, a03: float) -> tuple[float, float]:
    den = (4 + 4 * a20 * a20) ** 1.25
    return 2 * (a30 + a03) / den, 2 * (-a30 + a03) / den


def theta_closed_form(a20: float) -> float:
    return math.acos(abs(a20 * a20 - 1) / (a20 * a20 + 1))


def so2_invariants(nf: So2NormalForm) -> CuspInvariants:
    if not nf.is_sharksfin:
        raise NormalFormError("branch invariants exist only for sharksfins")
    kp, km = kappa_closed_form(nf.a20, nf.a30, nf.a03)
    return CuspInvariants(kp, km, theta_closed_form(nf.a20))

"""3/2-cusps of curve jets and the singular branches of index-1 germs."""
from __future__ import annotations

import math
from dataclasses import dataclass

from sharksfin.classify import (
    DegenerateHessianError,
    Identifier,
    NotRankZeroError,
    QuadricRoots,
    hesse_quadric_roots,
    hessian_at_origin,
    jacobian_identifier,
)
from sharksfin.jets import FLOAT, CurveJet, Jet2, JetError, MapJet2, compose_with_curve, map_compose_curve
from sharksfin.scalar import Quad

__all__ = [
    "CuspData",
    "BranchPair",
    "BranchInvariants",
    "curve_cusp_test",
    "branch_curves",
    "branch_image_cusps",
    "germ_branches",
    "branch_invariants",
]


@dataclass(frozen=True)
class CuspData:
    is_cusp: bool
    c1: tuple
    c2: tuple
    c3: tuple
    det: object  # det(c'', c''') in the curve's own arithmetic
    reason: str | None = None  # "regular" | "degenerate" | "higher" when not a cusp
    kappa: float | None = None

    @property
    def direction(self) -> tuple[float, float] | None:
        n = math.hypot(*map(float, self.c2))
        if n == 0:
            return None
        return (float(self.c2[0]) / n, float(self.c2[1]) / n)

    @property
    def kappa_exact(self) -> tuple | None:
        """(det(c'', c'''), |c''|^2), so that kappa = det / (|c''|^2)^(5/4)."""
        if not self.is_cusp:
            return None
        return (self.det, self.c2[0] * self.c2[0] + self.c2[1] * self.c2[1])


@dataclass(frozen=True)
class BranchPair:
    gamma1: CurveJet
    gamma2: CurveJet
    eta1: tuple
    eta2: tuple


@dataclass(frozen=True)
class BranchInvariants:
    kappa_plus: float
    kappa_minus: float
    theta_gamma: float
    plus: CuspData
    minus: CuspData


def _zero(x, tol: float) -> bool:
    if isinstance(x, float):
        return abs(x) <= tol
    return not x


def curve_cusp_test(c: CurveJet, tol: float = 0.0) -> CuspData:
    """c'(0) = 0 and det(c''(0), c'''(0)) != 0.

    ``tol`` applies to floating curves only.
    """
    if c.order < 3:
        raise JetError("cusp test needs the 3-jet of the curve")
    c1 = c.derivative_at_zero(1)
    c2 = c.derivative_at_zero(2)
    c3 = c.derivative_at_zero(3)
    det = c2[0] * c3[1] - c2[1] * c3[0]
    if not (_zero(c1[0], tol) and _zero(c1[1], tol)):
        return CuspData(False, c1, c2, c3, det, "regular")
    if _zero(c2[0], tol) and _zero(c2[1], tol):
        return CuspData(False, c1, c2, c3, det, "higher")
    if _zero(det, tol):
        return CuspData(False, c1, c2, c3, det, "degenerate")
    n2 = float(c2[0]) ** 2 + float(c2[1]) ** 2
    return CuspData(True, c1, c2, c3, det, None, float(det) / n2 ** 1.25)


def _real(x):
    if isinstance(x, Quad):
        if x.d < 0 and x.b:
            raise JetError("branch directions must be real")
    return x


def _ident_jet(lam) -> Jet2:
    return lam.lam if isinstance(lam, Identifier) else lam


def branch_curves(lam: Identifier | Jet2, roots: QuadricRoots | None = None, tol: float = 0.0) -> BranchPair:
    """Solve lam(gamma_i(t)) = 0 degree by degree with gamma_i'(0) = eta_i.

    In the frame (s, t) -> s eta1 + t eta2 the identifier reads
    mu = c s t + O(3); branch 1 is the graph t = phi(s), branch 2 the graph
    s = psi(t).  Branches come out with order ord(lam) - 1.
    """
    lam = _ident_jet(lam)
    hess = hessian_at_origin(lam, tol)
    if hess.index != "index-1":
        raise DegenerateHessianError(f"branches need an index-1 identifier (Hessian is {hess.index})")
    if roots is None:
        roots = hesse_quadric_roots(hess, tol)
    e1 = tuple(map(_real, roots.eta1))
    e2 = tuple(map(_real, roots.eta2))
    order = lam.order
    frame = MapJet2.linear(((e1[0], e2[0]), (e1[1], e2[1])), order)
    mu = lam.compose(frame)
    c = mu[1, 1]
    if _zero(c, tol):
        raise DegenerateHessianError("quadric directions are not transversal")
    zero = 0.0 if mu.kind == FLOAT else 0
    one = 1.0 if mu.kind == FLOAT else 1
    phi = [zero] * order
    psi = [zero] * order
    for m in range(3, order + 1):
        # coefficient of s^m in mu(s, phi(s)); it is linear in phi_{m-1} with slope c
        r = compose_with_curve(mu, CurveJet(order, [zero, one], phi, check_origin=False))
        phi[m - 1] = phi[m - 1] - r[m] / c
        r = compose_with_curve(mu, CurveJet(order, psi, [zero, one], check_origin=False))
        psi[m - 1] = psi[m - 1] - r[m] / c
    n = order - 1
    g1x = [e1[0] * (one if k == 1 else zero) + e2[0] * phi[k] for k in range(n + 1)]
    g1y = [e1[1] * (one if k == 1 else zero) + e2[1] * phi[k] for k in range(n + 1)]
    g2x = [e1[0] * psi[k] + e2[0] * (one if k == 1 else zero) for k in range(n + 1)]
    g2y = [e1[1] * psi[k] + e2[1] * (one if k == 1 else zero) for k in range(n + 1)]
    return BranchPair(CurveJet(n, g1x, g1y), CurveJet(n, g2x, g2y), e1, e2)


def branch_image_cusps(f: MapJet2, branches: BranchPair, tol: float = 0.0) -> tuple[CuspData, CuspData]:
    """Cusp test on f o gamma_1 and f o gamma_2.

    f has no linear part, so f o gamma is correct to one order beyond gamma.
    """
    if not (f.f1.low_degree_vanishes(2, tol) and f.f2.low_degree_vanishes(2, tol)):
        raise NotRankZeroError("f has a nonvanishing linear part")
    out = []
    for g in (branches.gamma1, branches.gamma2):
        fg = f if f.kind == FLOAT or _curve_kind(g) != "quad" else f.to_quad()
        out.append(curve_cusp_test(map_compose_curve(fg, g, order=min(g.order + 1, f.order)), tol))
    return out[0], out[1]


def _curve_kind(g: CurveJet) -> str:
    return "quad" if any(isinstance(x, Quad) for x in g.x + g.y) else "other"


def germ_branches(f: MapJet2, tol: float = 0.0) -> BranchPair:
    return branch_curves(jacobian_identifier(f), tol=tol)


def _unit(v) -> tuple[float, float]:
    x, y = float(v[0]), float(v[1])
    n = math.hypot(x, y)
    return (x / n, y / n)


def branch_invariants(f: MapJet2, tol: float = 1e-12) -> BranchInvariants:
    """kappa_+, kappa_- and the angle between the cuspidal directions, from f directly.

    Works in floating point.  Labels: the two branches are oriented so that
    det(gamma_+'(0), gamma_-'(0)) < 0 and named so that det(c''_+, c''_-) > 0.
    """
    f = f.to_float()
    br = germ_branches(f, tol)
    g1, g2 = br.gamma1, br.gamma2
    c1, c2 = branch_image_cusps(f, br, tol)
    a, b = c1.c2, c2.c2
    if a[0] * b[1] - a[1] * b[0] < 0:
        g1, g2 = g2, g1
    t1, t2 = g1.derivative_at_zero(1), g2.derivative_at_zero(1)
    if t1[0] * t2[1] - t1[1] * t2[0] > 0:
        g2 = g2.reparametrize([0.0, -1.0])
    c1, c2 = branch_image_cusps(f, BranchPair(g1, g2, br.eta1, br.eta2), tol)
    for cd in (c1, c2):
        if not cd.is_cusp:
            raise JetError(f"branch image is not a 3/2-cusp ({cd.reason})")
    u1, u2 = _unit(c1.c2), _unit(c2.c2)
    cosang = abs(u1[0] * u2[0] + u1[1] * u2[1])
    theta = math.acos(min(1.0, cosang))
    return BranchInvariants(c1.kappa, c2.kappa, theta, c1, c2)

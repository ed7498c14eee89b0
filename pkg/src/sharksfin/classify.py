"""Recognition of sharksfin and deltoid germs.

A rank-zero germ f whose identifier of singularities lam has a
nondegenerate critical point at 0 is a sharksfin (deltoid) exactly when
det Hess(lam)(0) < 0 (> 0) and, for the two Hesse-quadric directions
eta_1, eta_2,

    det(eta_i^2 f, eta_i^3 f)(0) != 0,   i = 1, 2.

The two determinants are Galois conjugate, so the verdict is taken on
their product, which is rational in exact mode.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from sharksfin.jets import FLOAT, Jet2, JetError, MapJet2, directional_iterate
from sharksfin.scalar import Quad, sqrt_rational

__all__ = [
    "Verdict",
    "Identifier",
    "HessianData",
    "QuadricRoots",
    "Classification",
    "CriterionError",
    "NotRankZeroError",
    "DegenerateHessianError",
    "jacobian_identifier",
    "rank_at_origin",
    "hessian_at_origin",
    "hesse_quadric_roots",
    "criterion_determinants",
    "classify_germ",
]

DEFAULT_TOL = 1e-9


class Verdict(str, Enum):
    SHARKSFIN = "Sharksfin"
    DELTOID = "Deltoid"
    DEGENERATE_HESSIAN = "DegenerateHessian"
    NOT_RECOGNIZED = "NotRecognized"
    NOT_RANK_ZERO = "NotRankZero"

    def __str__(self):
        return self.value


class CriterionError(ValueError):
    pass


class NotRankZeroError(CriterionError):
    pass


class DegenerateHessianError(CriterionError):
    pass


@dataclass(frozen=True)
class Identifier:
    """lam = multiplier * Jacobian determinant; the multiplier is a unit."""

    lam: Jet2
    multiplier: Jet2 | None = None


@dataclass(frozen=True)
class HessianData:
    huu: object
    huv: object
    hvv: object
    det: object
    index: str  # "index-1" | "definite" | "degenerate"


@dataclass(frozen=True)
class QuadricRoots:
    eta1: tuple
    eta2: tuple
    discriminant: object  # huv^2 - huu*hvv
    field: int | None  # d of Q(sqrt d), None when the roots are rational or floating
    convention: str  # "uu" | "vv" | "axes"

    @property
    def real(self) -> bool:
        if isinstance(self.discriminant, float):
            return self.discriminant > 0
        return self.discriminant > 0


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    rank: int
    hessian: HessianData | None = None
    roots: QuadricRoots | None = None
    d1: object = None
    d2: object = None
    product: object = None
    mode: str = "exact"
    tolerance: float | None = None
    witnesses: dict = field(default_factory=dict)

    @property
    def recognized(self) -> bool:
        return self.verdict in (Verdict.SHARKSFIN, Verdict.DELTOID)


def _is_zero(x, tol: float) -> bool:
    if isinstance(x, (float, complex)):
        return abs(x) <= tol
    return not x


def jacobian_identifier(f: MapJet2, multiplier: Jet2 | None = None) -> Identifier:
    lam = f.jacobian_det()
    if multiplier is not None:
        rho = multiplier.truncate(lam.order) if multiplier.order > lam.order else multiplier
        if rho.order != lam.order:
            raise JetError("multiplier jet has too small an order")
        if _is_zero(rho.constant_term, 0.0):
            raise CriterionError("multiplier must be a unit (nonzero constant term)")
        lam = rho * lam
    return Identifier(lam, multiplier)


def rank_at_origin(f: MapJet2, tol: float = 0.0) -> int:
    (a, b), (c, d) = f.linear_part()
    if f.kind == FLOAT:
        s = max(abs(a), abs(b), abs(c), abs(d))
        if s <= tol:
            return 0
        return 2 if abs(a * d - b * c) > tol * max(s, 1.0) else 1
    if not (a or b or c or d):
        return 0
    return 2 if a * d - b * c else 1


def hessian_at_origin(identifier: Identifier | Jet2, tol: float = 0.0) -> HessianData:
    lam = identifier.lam if isinstance(identifier, Identifier) else identifier
    if lam.order < 2:
        raise JetError("identifier must be known to order 2")
    if not lam.low_degree_vanishes(2, tol):
        raise NotRankZeroError("identifier has a nonvanishing constant or linear part")
    huu = 2 * lam[2, 0]
    huv = lam[1, 1]
    hvv = 2 * lam[0, 2]
    det = huu * hvv - huv * huv
    if _is_zero(det, tol):
        index = "degenerate"
    elif det < 0:
        index = "index-1"
    else:
        index = "definite"
    return HessianData(huu, huv, hvv, det, index)


def hesse_quadric_roots(h: HessianData, tol: float = 0.0) -> QuadricRoots:
    """Two independent solutions of huu x^2 + 2 huv x y + hvv y^2 = 0.

    huu != 0: (-huv +- sqrt(disc), huu); huu = 0 != hvv: (hvv, -huv +- sqrt(disc));
    both zero: the coordinate axes.
    """
    if h.index == "degenerate":
        raise DegenerateHessianError("Hessian of the identifier is degenerate")
    disc = h.huv * h.huv - h.huu * h.hvv
    floating = isinstance(disc, float)
    if floating:
        root = math.sqrt(disc) if disc > 0 else cmath.sqrt(disc)
        fld = None
    else:
        root = sqrt_rational(disc)
        fld = root.d if isinstance(root, Quad) else None
    if not _is_zero(h.huu, tol):
        e1 = (-h.huv + root, h.huu)
        e2 = (-h.huv - root, h.huu)
        conv = "uu"
    elif not _is_zero(h.hvv, tol):
        e1 = (h.hvv, -h.huv + root)
        e2 = (h.hvv, -h.huv - root)
        conv = "vv"
    else:
        e1, e2 = ((1, 0), (0, 1)) if not floating else ((1.0, 0.0), (0.0, 1.0))
        conv = "axes"
    if not floating:
        e1 = tuple(Fraction(x) if isinstance(x, int) else x for x in e1)
        e2 = tuple(Fraction(x) if isinstance(x, int) else x for x in e2)
    return QuadricRoots(e1, e2, disc, fld, conv)


def _det2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _rational(x):
    if isinstance(x, Quad):
        if not x.is_rational():
            raise ArithmeticError(f"expected a rational value, got {x}")
        return x.a
    if isinstance(x, complex):
        return x.real
    return x


def criterion_determinants(f: MapJet2, roots: QuadricRoots) -> tuple:
    """(D1, D2, D1*D2) with D_i = det(eta_i^2 f, eta_i^3 f)(0)."""
    if f.order < 3:
        raise JetError("criterion needs the 3-jet (order >= 3)")
    ds = []
    for eta in (roots.eta1, roots.eta2):
        second = directional_iterate(f, eta, 2)
        third = directional_iterate(f, eta, 3)
        ds.append(_det2(second, third))
    d1, d2 = ds
    return d1, d2, _rational(d1 * d2)


def _float_scale(f: MapJet2) -> float:
    s = 0.0
    for comp in f:
        for d in (2, 3):
            s = max(s, max(abs(x) for x in comp.homogeneous(d)))
    return s


def classify_germ(f: MapJet2, multiplier: Jet2 | None = None, tol: float = DEFAULT_TOL) -> Classification:
    """Total classification of a germ jet; ``tol`` only matters for floating jets.

    Floating jets are first divided by their largest 2- or 3-jet
    coefficient, so ``tol`` acts on normalized quantities.
    """
    floating = f.kind == FLOAT
    mode = "float" if floating else "exact"
    ztol = tol if floating else 0.0
    if floating:
        s = _float_scale(f)
        if s > 0:
            f = f.scale(1.0 / s)
    rank = rank_at_origin(f, ztol)
    common = dict(mode=mode, tolerance=tol if floating else None)
    if rank > 0:
        return Classification(Verdict.NOT_RANK_ZERO, rank, **common)
    ident = jacobian_identifier(f, multiplier)
    hess = hessian_at_origin(ident, ztol)
    if hess.index == "degenerate":
        return Classification(Verdict.DEGENERATE_HESSIAN, 0, hess, **common)
    roots = hesse_quadric_roots(hess, ztol)
    if floating:
        # unit directions keep the tolerance meaningful
        roots = QuadricRoots(*(tuple(c / _norm(e) for c in e) for e in (roots.eta1, roots.eta2)),
                             roots.discriminant, roots.field, roots.convention)
    d1, d2, product = criterion_determinants(f, roots)
    if _is_zero(product, ztol):
        verdict = Verdict.NOT_RECOGNIZED
    elif hess.index == "index-1":
        verdict = Verdict.SHARKSFIN
    else:
        verdict = Verdict.DELTOID
    return Classification(verdict, 0, hess, roots, d1, d2, product, **common)


def _norm(e) -> float:
    return math.sqrt(sum(abs(complex(x)) ** 2 for x in e))

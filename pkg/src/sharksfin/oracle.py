"""Independent checks used by the test-suite.

Nothing here imports the classifier: the decision quantities are computed
straight from raw coefficients, and equivalences are generated from seeds.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from sharksfin.jets import EXACT, FLOAT, Jet2, JetError, MapJet2

__all__ = [
    "DiffeoJet",
    "ReducedFormError",
    "reduced_coefficients",
    "brute_force_condition",
    "brute_force_recognized",
    "reduced_form",
    "random_diffeo",
    "random_rotation",
    "random_a_equivalence",
    "random_unit",
    "random_vector_field",
    "vector_field_iterate",
    "tilde_shift_check",
]

RESTRICTIONS = ("rotation-only", "orientation-preserving", "general")


class ReducedFormError(JetError):
    pass


@dataclass(frozen=True)
class DiffeoJet:
    jet: MapJet2
    orientation: int
    restriction: str = "general"

    def __post_init__(self):
        (a, b), (c, d) = self.jet.linear_part()
        if a * d - b * c == 0:
            raise JetError("diffeomorphism jet needs an invertible linear part")


def reduced_form(eps: int, a30, a21, a12, a03, order: int = 4) -> MapJet2:
    """(uv, eps u^2/2 + v^2/2 + a30 u^3/6 + a21 u^2 v/2 + a12 u v^2/2 + a03 v^3/6)."""
    h = Fraction(1, 2)
    s = Fraction(1, 6)
    return MapJet2(
        Jet2(order, {(1, 1): 1}),
        Jet2(order, {(2, 0): eps * h, (0, 2): h, (3, 0): a30 * s, (2, 1): a21 * h,
                     (1, 2): a12 * h, (0, 3): a03 * s}),
    )


def reduced_coefficients(f: MapJet2) -> tuple:
    """(eps, a30, a21, a12, a03) of a jet in reduced form, else ReducedFormError."""
    if f.kind != EXACT or f.order < 3:
        raise ReducedFormError("reduced-form oracle needs an exact jet of order >= 3")
    f1, f2 = f.f1, f.f2
    for d in range(4):
        want = [0] * (d + 1)
        if d == 2:
            want = [0, 1, 0]
        if f1.homogeneous(d) != want:
            raise ReducedFormError("first component is not uv + O(4)")
    if any(f2.homogeneous(0)) or any(f2.homogeneous(1)):
        raise ReducedFormError("second component has terms of degree < 2")
    p, q, r = f2.homogeneous(2)
    if q != 0 or r != Fraction(1, 2) or abs(p) != Fraction(1, 2):
        raise ReducedFormError("quadratic part is not eps u^2/2 + v^2/2")
    c30, c21, c12, c03 = f2.homogeneous(3)
    return (1 if p > 0 else -1), 6 * c30, 2 * c21, 2 * c12, 6 * c03


def brute_force_condition(f: MapJet2) -> Fraction:
    """Decision quantity from the raw cubic coefficients; nonzero iff recognized.

    eps = 1:  (a30 + 3a21 + 3a12 + a03)(-a30 + 3a21 - 3a12 + a03)
    eps = -1: (a30 - 3a12)^2 + (3a21 - a03)^2
    """
    eps, a30, a21, a12, a03 = reduced_coefficients(f)
    if eps == 1:
        return (a30 + 3 * a21 + 3 * a12 + a03) * (-a30 + 3 * a21 - 3 * a12 + a03)
    return (a30 - 3 * a12) ** 2 + (3 * a21 - a03) ** 2


def brute_force_recognized(f: MapJet2) -> str | None:
    """'Sharksfin', 'Deltoid' or None from the closed forms."""
    eps = reduced_coefficients(f)[0]
    if brute_force_condition(f) == 0:
        return None
    return "Sharksfin" if eps == 1 else "Deltoid"


def tilde_shift_check(f: MapJet2) -> dict:
    """Apply the quadratic change killing u^2 v, u v^2 and compare with the shift formulas."""
    eps, a30, a21, a12, a03 = reduced_coefficients(f)
    n = f.order
    h = Fraction(1, 2)
    phi = MapJet2(
        Jet2(n, {(1, 0): 1, (2, 0): a12 * h, (1, 1): -eps * a21 * h}),
        Jet2(n, {(0, 1): 1, (1, 1): -a12 * h, (0, 2): eps * a21 * h}),
    )
    g = f.compose(phi)
    t30, t03 = a30 + 3 * eps * a12, a03 + 3 * eps * a21
    g1, g2 = g.f1, g.f2
    return {
        "first_is_uv": all(g1.homogeneous(d) == ([0, 1, 0] if d == 2 else [0] * (d + 1)) for d in range(4)),
        "quadratic_kept": g2.homogeneous(2) == f.f2.homogeneous(2),
        "mixed_cubics_vanish": g2[2, 1] == 0 and g2[1, 2] == 0,
        "a30_shift": 6 * g2[3, 0] == t30,
        "a03_shift": 6 * g2[0, 3] == t03,
        "tilde": (t30, t03),
        "jet": g,
    }


# -- random generators ------------------------------------------------------

def _rational(rng: random.Random, bound: int = 3, den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_rotation(rng: random.Random, order: int, kind: str = EXACT) -> MapJet2:
    """A rotation with rational entries (from a random Pythagorean slope) or a float angle."""
    if kind == FLOAT:
        th = rng.uniform(0.0, 2 * math.pi)
        c, s = math.cos(th), math.sin(th)
    else:
        m = _rational(rng, 5, 4)
        c = (1 - m * m) / (1 + m * m)
        s = 2 * m / (1 + m * m)
        if rng.random() < 0.5:
            c, s = -c, -s
    return MapJet2.linear(((c, -s), (s, c)), order, kind=kind)


def random_diffeo(rng: random.Random, order: int, restriction: str = "general",
                  kind: str = EXACT, bound: int = 3) -> DiffeoJet:
    if restriction not in RESTRICTIONS:
        raise ValueError(f"unknown restriction {restriction!r}")
    if restriction == "rotation-only":
        return DiffeoJet(random_rotation(rng, order, kind), 1, restriction)
    draw = (lambda: rng.uniform(-1.0, 1.0)) if kind == FLOAT else (lambda: _rational(rng, bound))
    while True:
        a, b, c, d = draw(), draw(), draw(), draw()
        det = a * d - b * c
        if det == 0 or (kind == FLOAT and abs(det) < 0.1):
            continue
        if restriction == "orientation-preserving" and det < 0:
            a, b, c, d = b, a, d, c
            det = -det
        break
    comps = []
    for lin in ((a, b), (c, d)):
        table = {(1, 0): lin[0], (0, 1): lin[1]}
        for dd in range(2, order + 1):
            for j in range(dd + 1):
                table[(dd - j, j)] = draw()
        comps.append(Jet2(order, table, kind=kind))
    return DiffeoJet(MapJet2(*comps), 1 if det > 0 else -1, restriction)


def random_a_equivalence(f: MapJet2, seed: int, restriction: str = "general") -> MapJet2:
    """Phi o f o phi for a seeded random pair of diffeomorphism jets.

    rotation-only: Phi is a rotation, phi the identity.
    """
    rng = random.Random(seed)
    kind = FLOAT if f.kind == FLOAT else EXACT
    target = random_diffeo(rng, f.order, restriction, kind)
    if restriction == "rotation-only":
        return target.jet.compose(f)
    source = random_diffeo(rng, f.order, restriction, kind)
    return target.jet.compose(f.compose(source.jet))


def random_unit(rng: random.Random, order: int, bound: int = 3) -> Jet2:
    """Jet with a nonzero rational constant term."""
    table = {}
    for d in range(order + 1):
        for j in range(d + 1):
            table[(d - j, j)] = _rational(rng, bound)
    while table[(0, 0)] == 0:
        table[(0, 0)] = _rational(rng, bound)
    return Jet2(order, table)


def random_vector_field(rng: random.Random, eta, order: int, bound: int = 3) -> tuple[Jet2, Jet2]:
    """A non-constant vector-field jet whose value at 0 is eta."""
    comps = []
    for e in eta:
        table = {(0, 0): e}
        for d in range(1, order + 1):
            for j in range(d + 1):
                table[(d - j, j)] = _rational(rng, bound)
        comps.append(Jet2(order, table))
    if comps[0].kind != comps[1].kind:
        comps = [c.to_quad() for c in comps]
    return comps[0], comps[1]


def vector_field_iterate(f: MapJet2, xi: tuple[Jet2, Jet2], k: int) -> tuple:
    """(xi^k f)(0) with xi acting as the derivation xi1 d/du + xi2 d/dv."""
    if k > f.order:
        raise JetError("iterate exceeds the truncation order")
    out = []
    for comp in f:
        g = comp
        for _ in range(k):
            gu, gv = g.deriv("u"), g.deriv("v")
            n = gu.order
            x1 = xi[0].truncate(n) if xi[0].order > n else xi[0].pad(n)
            x2 = xi[1].truncate(n) if xi[1].order > n else xi[1].pad(n)
            g = x1 * gu + x2 * gv
        out.append(g.constant_term)
    return tuple(out)

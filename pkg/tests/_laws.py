"""Algebraic laws of truncated jets, as plain predicates.

Used by the Hypothesis suite and by the seeded 10^4-case sweep of the
acceptance run.
"""
import random
from fractions import Fraction

from sharksfin.jets import Jet2, MapJet2, series_elem


def random_jet(rng: random.Random, order: int, constant: bool = True, bound: int = 5) -> Jet2:
    table = {}
    for d in range(0 if constant else 1, order + 1):
        for j in range(d + 1):
            if rng.random() < 0.7:
                table[(d - j, j)] = Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
    return Jet2(order, table)


def random_map(rng: random.Random, order: int) -> MapJet2:
    return MapJet2(random_jet(rng, order, False), random_jet(rng, order, False))


def ring_laws(a: Jet2, b: Jet2, c: Jet2) -> bool:
    one = Jet2.constant(1, a.order)
    return ((a * b) * c == a * (b * c)
            and a * b == b * a
            and a * (b + c) == a * b + a * c
            and (a + b) + c == a + (b + c)
            and a * one == a
            and a - a == Jet2.zero(a.order))


def compose_associative(g: Jet2, p: MapJet2, q: MapJet2) -> bool:
    return g.compose(p).compose(q) == g.compose(p.compose(q))


def chain_rule(g: Jet2, phi: MapJet2) -> bool:
    n = g.order
    lhs = g.compose(phi).deriv("u")
    low = phi.truncate(n - 1)
    rhs = g.deriv("u").compose(low) * phi.f1.deriv("u") + g.deriv("v").compose(low) * phi.f2.deriv("u")
    lhs_v = g.compose(phi).deriv("v")
    rhs_v = g.deriv("u").compose(low) * phi.f1.deriv("v") + g.deriv("v").compose(low) * phi.f2.deriv("v")
    return lhs == rhs and lhs_v == rhs_v


def pythagoras(x: Jet2) -> bool:
    s, c = series_elem("sin", x), series_elem("cos", x)
    return s * s + c * c == Jet2.constant(1, x.order)

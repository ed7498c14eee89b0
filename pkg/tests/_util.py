"""Small builders shared by the test modules."""
from fractions import Fraction

from sharksfin.jets import Jet2, MapJet2

H = Fraction(1, 2)
S = Fraction(1, 6)


def germ(order, first, second, kind=None):
    return MapJet2(Jet2(order, first, kind=kind), Jet2(order, second, kind=kind))


def reduced(eps, a30=0, a21=0, a12=0, a03=0, order=4):
    """(uv, eps u^2/2 + v^2/2 + cubic) with Taylor-normalized cubic coefficients."""
    return germ(order, {(1, 1): 1},
                {(2, 0): eps * H, (0, 2): H, (3, 0): a30 * S, (2, 1): a21 * H, (1, 2): a12 * H, (0, 3): a03 * S})


SHARKSFIN = germ(4, {(1, 1): 1}, {(2, 0): 1, (0, 2): 1, (3, 0): 1})
DELTOID = germ(4, {(1, 1): 1}, {(2, 0): -1, (0, 2): 1, (3, 0): 1})

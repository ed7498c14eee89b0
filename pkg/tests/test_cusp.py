import math
from fractions import Fraction

import pytest

from _util import H, S, SHARKSFIN, germ, reduced
from sharksfin.classify import DegenerateHessianError, Verdict, classify_germ
from sharksfin.cusp import branch_curves, branch_image_cusps, branch_invariants, curve_cusp_test, germ_branches
from sharksfin.jets import CurveJet, Jet2, JetError, compose_with_curve


def test_standard_cusp():
    cd = curve_cusp_test(CurveJet(3, [0, 0, 1, 0], [0, 0, 0, 1]))
    assert cd.is_cusp
    assert cd.kappa == pytest.approx(12 / 2 ** 2.5)
    assert cd.kappa == pytest.approx(2.1213203, abs=1e-7)
    assert cd.kappa_exact == (12, 4)


def test_not_cusps():
    assert curve_cusp_test(CurveJet(4, [0, 0, 1, 0, 0], [0, 0, 0, 0, 1])).reason == "degenerate"
    assert curve_cusp_test(CurveJet(3, [0, 1, 0, 0], [0, 0, 1, 0])).reason == "regular"
    assert curve_cusp_test(CurveJet(3, [0, 0, 0, 1], [0, 0, 0, 0])).reason == "higher"


def test_quartic_term_is_irrelevant():
    a = curve_cusp_test(CurveJet(4, [0, 0, 1, 0, 0], [0, 0, 0, 1, 1]))
    assert a.is_cusp and a.kappa == pytest.approx(2.1213203, abs=1e-7)


def test_cusp_needs_three_jet():
    with pytest.raises(JetError):
        curve_cusp_test(CurveJet(2, [0, 0, 1], [0, 0, 0]))


def _on_zero_set(lam, br):
    for g in (br.gamma1, br.gamma2):
        vals = compose_with_curve(lam, g, g.order)
        assert all(v == 0 for v in vals[: lam.order + 1])


def test_branches_of_pure_quadric():
    lam = Jet2(4, {(0, 2): 1, (2, 0): -1})
    br = branch_curves(lam)
    dirs = {tuple(g.derivative_at_zero(1)) for g in (br.gamma1, br.gamma2)}
    slopes = {d[1] / d[0] for d in dirs}
    assert slopes == {1, -1}
    _on_zero_set(lam, br)


def test_branches_with_cubic_term():
    lam = Jet2(4, {(0, 2): 1, (2, 0): -1, (3, 0): Fraction(-1, 2)})
    br = branch_curves(lam)
    _on_zero_set(lam, br)
    for g in (br.gamma1, br.gamma2):
        # normalize to the graph v = s(t + t^2/4) over u = t
        x1, y1 = g.derivative_at_zero(1)
        s = y1 / x1
        rep = g.reparametrize([0, 1 / x1, -Fraction(g.x[2]) / x1 ** 3])
        assert rep.x[1] == 1 and rep.x[2] == 0
        assert rep.y[1] == s and rep.y[2] == s / 4


def test_axis_branches():
    br = branch_curves(Jet2(3, {(1, 1): 1}))
    assert {br.eta1, br.eta2} == {(1, 0), (0, 1)}


def test_definite_identifier_has_no_real_branches():
    with pytest.raises(DegenerateHessianError):
        branch_curves(Jet2(3, {(0, 2): 1, (2, 0): 1}))


def test_branch_images_of_reduced_form():
    f = germ(5, {(1, 1): 1}, {(2, 0): H, (0, 2): H, (3, 0): S})
    c1, c2 = branch_image_cusps(f, germ_branches(f))
    seconds = {tuple(c.c2) for c in (c1, c2)}
    # gamma' = (1, +-1) up to scale; rescale c'' to the (+-1, 1) normalization
    normalized = {(x / y * 1, 1) for x, y in seconds}
    assert normalized == {(1, 1), (-1, 1)}
    assert c1.is_cusp and c2.is_cusp


def test_half_determinants_reduced_form():
    # gamma_+- = (t, +-t): f o gamma has c'' = 2(+-1, 1) and det/2 = +-1
    f = reduced(1, a30=1, order=5)
    for sign in (1, -1):
        g = CurveJet(4, [0, 1, 0, 0, 0], [0, sign, 0, 0, 0])
        from sharksfin.jets import map_compose_curve

        cd = curve_cusp_test(map_compose_curve(f, g, 4))
        assert tuple(cd.c2) == (2 * sign, 2)
        assert cd.det / 2 == sign


def test_no_cusps_without_cubic_part():
    f = reduced(1, order=5)
    c1, c2 = branch_image_cusps(f, germ_branches(f))
    assert not c1.is_cusp and not c2.is_cusp


def test_branch_invariants_signs_and_angle():
    f = germ(5, {(1, 1): 1}, {(2, 0): H, (0, 2): H, (3, 0): S})
    inv = branch_invariants(f)
    assert inv.kappa_plus == pytest.approx(-inv.kappa_minus)
    assert abs(inv.kappa_plus) == pytest.approx(2 / 8 ** 1.25)
    assert inv.theta_gamma == pytest.approx(math.pi / 2)


def test_branch_invariants_of_seed():
    assert classify_germ(SHARKSFIN).verdict == Verdict.SHARKSFIN
    inv = branch_invariants(SHARKSFIN)
    assert inv.plus.is_cusp and inv.minus.is_cusp

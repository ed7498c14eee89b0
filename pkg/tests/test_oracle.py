import random
from fractions import Fraction

import pytest

from _util import SHARKSFIN, reduced
from sharksfin.classify import Verdict, classify_germ
from sharksfin.jets import JetError, MapJet2
from sharksfin.oracle import (
    DiffeoJet,
    ReducedFormError,
    brute_force_condition,
    brute_force_recognized,
    random_a_equivalence,
    random_diffeo,
    random_rotation,
    random_vector_field,
    reduced_coefficients,
    reduced_form,
    tilde_shift_check,
    vector_field_iterate,
)


def test_condition_examples():
    assert brute_force_condition(reduced(1, a30=1)) == -1
    assert brute_force_condition(reduced(1, a30=1, a03=1)) == 0
    assert brute_force_condition(reduced(-1, a30=3, a12=1)) == 0
    assert brute_force_recognized(reduced(1, a30=1)) == "Sharksfin"
    assert brute_force_recognized(reduced(-1, a30=1)) == "Deltoid"
    assert brute_force_recognized(reduced(-1)) is None


def test_reduced_form_round_trip():
    f = reduced_form(-1, 1, 2, -1, Fraction(1, 2))
    assert reduced_coefficients(f) == (-1, 1, 2, -1, Fraction(1, 2))
    assert f == reduced(-1, 1, 2, -1, Fraction(1, 2))


def test_non_reduced_input_rejected():
    with pytest.raises(ReducedFormError):
        reduced_coefficients(SHARKSFIN)
    with pytest.raises(ReducedFormError):
        reduced_coefficients(reduced(1).to_float())


def test_tilde_shift():
    r = tilde_shift_check(reduced(1, a12=1))
    assert r["tilde"] == (3, 0)
    assert all(v for k, v in r.items() if k not in ("tilde", "jet"))
    same = tilde_shift_check(reduced(-1, a30=2, a03=-1))
    assert same["tilde"] == (2, -1)


@pytest.mark.parametrize("seed", range(30))
def test_tilde_shift_random(seed):
    rng = random.Random(seed)
    c = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
    r = tilde_shift_check(reduced(rng.choice([1, -1]), *c))
    assert r["first_is_uv"] and r["quadratic_kept"] and r["mixed_cubics_vanish"]
    assert r["a30_shift"] and r["a03_shift"]


def test_identity_conjugation_keeps_f():
    ident = MapJet2.identity(4)
    assert ident.compose(SHARKSFIN.compose(ident)) == SHARKSFIN


def test_half_turn_rotation():
    rng = random.Random(0)
    for _ in range(200):
        rot = random_rotation(rng, 4)
        (a, b), (c, d) = rot.linear_part()
        assert a * d - b * c == 1
        if a == -1:
            g = rot.compose(SHARKSFIN)
            assert g == SHARKSFIN.scale(-1)
            break
    else:
        pytest.fail("no half turn drawn")


def test_generators_are_seeded():
    assert random_a_equivalence(SHARKSFIN, 7) == random_a_equivalence(SHARKSFIN, 7)
    assert random_a_equivalence(SHARKSFIN, 7) != random_a_equivalence(SHARKSFIN, 8)


@pytest.mark.parametrize("restriction", ["rotation-only", "orientation-preserving", "general"])
def test_conjugations_keep_sharksfin(restriction):
    for seed in range(60):
        g = random_a_equivalence(SHARKSFIN, seed, restriction)
        assert classify_germ(g).verdict == Verdict.SHARKSFIN


def test_orientation_preserving_diffeos():
    rng = random.Random(5)
    for _ in range(100):
        d = random_diffeo(rng, 3, "orientation-preserving")
        (a, b), (c, e) = d.jet.linear_part()
        assert a * e - b * c > 0 and d.orientation == 1


def test_singular_diffeo_rejected():
    with pytest.raises(JetError):
        DiffeoJet(MapJet2.from_terms(3, [(2, 0, 1)], [(0, 1, 1)]), 1)
    with pytest.raises(ValueError):
        random_diffeo(random.Random(0), 3, "affine")


def test_vector_field_iterate_constant_field():
    from sharksfin.jets import directional_iterate

    f = reduced(1, a30=1)
    xi = random_vector_field(random.Random(1), (1, 1), 0)
    assert vector_field_iterate(f, xi, 3) == directional_iterate(f, (1, 1), 3)


def test_grid_agreement_sample():
    for eps in (1, -1):
        for a30 in range(-2, 3):
            for a03 in range(-2, 3):
                f = reduced(eps, a30, 1, 0, a03)
                ours = classify_germ(f).verdict
                assert (ours in (Verdict.SHARKSFIN, Verdict.DELTOID)) == (brute_force_condition(f) != 0)

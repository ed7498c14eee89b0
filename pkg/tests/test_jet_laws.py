import random

from hypothesis import given, settings
from hypothesis import strategies as st

from _laws import chain_rule, compose_associative, pythagoras, random_jet, random_map, ring_laws
from sharksfin.jets import FLOAT, Jet2

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)
orders = st.integers(min_value=1, max_value=6)


@settings(max_examples=200, deadline=None)
@given(seeds, orders)
def test_ring_laws(seed, n):
    rng = random.Random(seed)
    assert ring_laws(random_jet(rng, n), random_jet(rng, n), random_jet(rng, n))


@settings(max_examples=200, deadline=None)
@given(seeds, orders)
def test_composition_is_associative(seed, n):
    rng = random.Random(seed)
    assert compose_associative(random_jet(rng, n), random_map(rng, n), random_map(rng, n))


@settings(max_examples=200, deadline=None)
@given(seeds, st.integers(min_value=2, max_value=6))
def test_chain_rule(seed, n):
    rng = random.Random(seed)
    assert chain_rule(random_jet(rng, n), random_map(rng, n))


@settings(max_examples=200, deadline=None)
@given(seeds, orders)
def test_sin_cos_identity(seed, n):
    rng = random.Random(seed)
    assert pythagoras(random_jet(rng, n, constant=False))


@settings(max_examples=100, deadline=None)
@given(seeds, orders)
def test_float_jets_track_exact_ones(seed, n):
    rng = random.Random(seed)
    a, b = random_jet(rng, n), random_jet(rng, n)
    p = random_map(rng, n)
    exact = (a * b).compose(p)
    approx = (a.to_float() * b.to_float()).compose(p.to_float())
    assert approx.kind == FLOAT
    assert approx.allclose(exact.to_float(), 1e-9)


@settings(max_examples=100, deadline=None)
@given(seeds, orders)
def test_inverse_series(seed, n):
    from sharksfin.jets import series_elem

    rng = random.Random(seed)
    a = random_jet(rng, n)
    if a.constant_term == 0:
        a = a + 1
    assert a * series_elem("inverse", a) == Jet2.constant(1, n)

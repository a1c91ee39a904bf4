from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ellsoule.measures import (
    GroupSpec,
    Measure,
    TorsorSpec,
    convolve,
    dirac,
    integrate,
    pushforward,
    reduce_mod,
    torsor_elements,
    trace,
)


def rand_measure(spec, rng_values):
    pts = torsor_elements(spec)
    return Measure(spec, {x: Fraction(v) for x, v in zip(pts, rng_values) if v})


values8 = st.lists(st.integers(-9, 9), min_size=8, max_size=8)


def test_fiber_elements_spot():
    spec = TorsorSpec(2, 1, 3, 1, "reduction", (1,))
    assert torsor_elements(spec) == [(1,), (4,)]
    spec5 = TorsorSpec(5, 1, 3, 1, "reduction", (1,))
    assert torsor_elements(spec5) == [(1,), (4,), (7,), (10,), (13,)]


def test_fiber_cardinality():
    for ell, r, N, d in [(2, 2, 3, 1), (3, 1, 4, 2), (5, 1, 3, 1), (2, 3, 5, 2)]:
        spec = TorsorSpec(ell, r, N, d, "reduction", (1,) * d)
        assert len(torsor_elements(spec)) == ell ** (r * d)


def test_both_flavors_same_fiber():
    a = TorsorSpec(2, 2, 3, 1, "reduction", (2,))
    b = TorsorSpec(2, 2, 3, 1, "multiplication", (2,))
    assert torsor_elements(a) == torsor_elements(b)


def test_spec_validation():
    with pytest.raises(ValueError):
        TorsorSpec(4, 1, 3)  # ell not prime
    with pytest.raises(ValueError):
        TorsorSpec(3, 1, 6)  # gcd(ell, N) != 1


def test_dirac_convolution_is_group_law():
    spec = GroupSpec(6, 1)
    assert convolve(dirac(spec, (1,)), dirac(spec, (2,))) == dirac(spec, (3,))


@given(values8, values8)
def test_convolution_commutes(vals1, vals2):
    spec = GroupSpec(8, 1)
    mu = rand_measure(spec, vals1)
    nu = rand_measure(spec, vals2)
    assert convolve(mu, nu) == convolve(nu, mu)


@given(values8, values8, values8)
def test_convolution_associates(v1, v2, v3):
    spec = GroupSpec(8, 1)
    mu, nu, rho = (rand_measure(spec, v) for v in (v1, v2, v3))
    assert convolve(convolve(mu, nu), rho) == convolve(mu, convolve(nu, rho))


def test_torsor_convolution_adds_base_points():
    s1 = TorsorSpec(2, 1, 3, 1, "reduction", (1,))
    s2 = TorsorSpec(2, 1, 3, 1, "reduction", (2,))
    mu = dirac(s1, (1,))
    nu = dirac(s2, (5,))
    out = convolve(mu, nu)
    assert out.spec.t == (0,)
    assert out == dirac(out.spec, (0,))


@given(values8, values8)
def test_total_mass_multiplicative_under_convolution(v1, v2):
    spec = GroupSpec(8, 1)
    mu = rand_measure(spec, v1)
    nu = rand_measure(spec, v2)
    assert convolve(mu, nu).total_mass() == mu.total_mass() * nu.total_mass()


def test_trace_tower_collapses_fibers():
    hi = TorsorSpec(2, 2, 3, 1, "reduction", (1,))
    mu = Measure(hi, {x: Fraction(i + 1) for i, x in enumerate(torsor_elements(hi))})
    lo = trace(mu)
    assert lo.spec.r == 1
    assert lo.total_mass() == mu.total_mass()
    # values over the lower fiber aggregate the two preimages each
    assert set(lo.values) == {(1,), (4,)}


@given(values8)
def test_pushforward_preserves_mass(vals):
    spec = GroupSpec(8, 1)
    mu = rand_measure(spec, vals)
    for phi in ("neg", ("mult", 3), ("mult", 2)):
        assert pushforward(phi, mu).total_mass() == mu.total_mass()


@given(values8)
def test_pushforward_composition(vals):
    spec = GroupSpec(8, 1)
    mu = rand_measure(spec, vals)
    one_step = pushforward(("mult", 6), mu)
    two_step = pushforward(("mult", 3), pushforward(("mult", 2), mu))
    assert one_step == two_step


def test_projection_of_rank_two():
    spec = GroupSpec(4, 2)
    mu = dirac(spec, (1, 3))
    assert pushforward(("proj", 0), mu) == dirac(GroupSpec(4, 1), (1,))
    assert pushforward(("proj", 1), mu) == dirac(GroupSpec(4, 1), (3,))


def test_integrate_spot_first_moment():
    # smoothed quadratic measure over the fiber 1 mod 3 at level 15
    from ellsoule.bernoulli import bernoulli_measure

    mu = bernoulli_measure(5, 1, 3, 7, 1)
    assert sorted(mu.values.values()) == [-30, -20, -11, 18, 39]
    assert integrate(mu, lambda x: Fraction(x)) == -181


def test_reduce_mod_inverts_units():
    spec = GroupSpec(8, 1)
    mu = Measure(spec, {(1,): Fraction(14, 5)})
    assert reduce_mod(mu, 4, 2) == {(1,): 2}


def test_reduce_mod_rejects_bad_denominator():
    spec = GroupSpec(8, 1)
    mu = Measure(spec, {(1,): Fraction(1, 2)})
    with pytest.raises(ArithmeticError):
        reduce_mod(mu, 4, 2)

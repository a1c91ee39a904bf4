from fractions import Fraction
from math import comb, factorial

from hypothesis import given, strategies as st

from ellsoule.tsym import TSym, divided_power, exponent_tuples, sym_to_tsym, tsym_map


coords2 = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
degrees = st.integers(0, 5)


def test_exponent_tuples_rank2_dimension():
    # rank 2, degree k has exactly k + 1 basis symbols
    for k in range(7):
        assert len(exponent_tuples(2, k)) == k + 1


def test_divided_power_binomial_product():
    # e^{[a]} e^{[b]} = prod C(a_i + b_i, a_i) e^{[a+b]}
    a = TSym.basis(2, (2, 1))
    b = TSym.basis(2, (1, 3))
    assert a * b == TSym.basis(2, (3, 4), coeff=comb(3, 2) * comb(4, 1))


@given(coords2, degrees, degrees)
def test_divided_power_addition_law(g, ka, kb):
    # (g)^{[ka]} (g)^{[kb]} = C(ka+kb, ka) g^{[ka+kb]}
    lhs = divided_power(g, ka, 2) * divided_power(g, kb, 2)
    rhs = divided_power(g, ka + kb, 2).scale(comb(ka + kb, ka))
    assert lhs == rhs


@given(coords2, coords2, degrees)
def test_divided_power_of_sum(g, h, k):
    # (g+h)^{[k]} = sum_{i+j=k} g^{[i]} h^{[j]}
    s = tuple(gi + hi for gi, hi in zip(g, h))
    rhs = TSym.zero(2)
    for i in range(k + 1):
        rhs = rhs + divided_power(g, i, 2) * divided_power(h, k - i, 2)
    assert divided_power(s, k, 2) == rhs


def test_sym_to_tsym_scales_by_factorials():
    # x^2 y in Sym maps to 2! 1! e^{[2,1]}
    assert sym_to_tsym((2, 1)) == TSym.basis(2, (2, 1), coeff=factorial(2) * factorial(1))


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=3))
def test_sym_to_tsym_is_multiplicative(monomials):
    total = tuple(map(sum, zip(*monomials)))
    prod = sym_to_tsym(monomials[0])
    for m in monomials[1:]:
        prod = prod * sym_to_tsym(m)
    assert prod == sym_to_tsym(total)


def test_spot_e2_times_e3():
    e2 = TSym.basis(1, (2,))
    e3 = TSym.basis(1, (3,))
    assert e2 * e3 == TSym.basis(1, (5,), coeff=10)


# functoriality of the induced maps


@given(st.integers(-5, 5), coords2, degrees)
def test_scalar_map_acts_by_powers(c, g, k):
    a = divided_power(g, k, 2)
    img = tsym_map(c, a)
    assert img == divided_power(tuple(c * x for x in g), k, 2)


@given(coords2, degrees)
def test_matrix_map_on_divided_powers(g, k):
    phi = ((1, 1), (0, 1))  # unipotent: (x, y) -> (x + y, y)
    a = divided_power(g, k, 2)
    target = (phi[0][0] * g[0] + phi[0][1] * g[1], phi[1][0] * g[0] + phi[1][1] * g[1])
    assert tsym_map(phi, a) == divided_power(target, k, 2)


@given(coords2, degrees, st.integers(-3, 3), st.integers(-3, 3))
def test_map_composition(g, k, c1, c2):
    a = divided_power(g, k, 2)
    assert tsym_map(c1, tsym_map(c2, a)) == tsym_map(c1 * c2, a)


@given(coords2, coords2, degrees, degrees)
def test_map_is_ring_hom(g, h, ka, kb):
    a = divided_power(g, ka, 2)
    b = divided_power(h, kb, 2)
    assert tsym_map(3, a * b) == tsym_map(3, a) * tsym_map(3, b)


# base change


def test_base_change_reduces_coefficients():
    a = TSym.basis(2, (1, 0), coeff=7) + TSym.basis(2, (0, 1), coeff=-3)
    b = a.base_change("Z/5")
    assert b.coeff((1, 0)) == 2
    assert b.coeff((0, 1)) == 2


def test_base_change_inverts_units():
    a = TSym.basis(1, (1,), coeff=Fraction(14, 5))
    assert a.base_change("Z/4").coeff((1,)) == 2


def test_base_change_zero_ring():
    # Z/1 is the zero ring: everything collapses to zero
    a = TSym.basis(1, (2,), coeff=Fraction(3, 2))
    b = a.base_change("Z/1")
    assert b == TSym.zero(1, "Z/1")


@given(coords2, coords2, degrees, degrees)
def test_base_change_commutes_with_product(g, h, ka, kb):
    a = divided_power(g, ka, 2)
    b = divided_power(h, kb, 2)
    assert (a * b).base_change("Z/9") == a.base_change("Z/9") * b.base_change("Z/9")

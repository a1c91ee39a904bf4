from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ellsoule.cyclotomic import CycloElement, cyclo_poly, euler_phi, zeta


levels = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])
small_rats = st.fractions(max_denominator=12)


@st.composite
def elements(draw, M=None):
    if M is None:
        M = draw(levels)
    deg = euler_phi(M)
    coeffs = draw(st.lists(small_rats, min_size=deg, max_size=deg))
    return CycloElement.from_poly(M, coeffs)


def test_cyclo_poly_twelve():
    # Phi_12 = x^4 - x^2 + 1
    assert tuple(cyclo_poly(12)) == (1, 0, -1, 0, 1)


def test_zeta_order():
    for M in (3, 4, 5, 12):
        z = zeta(M)
        assert z**M == CycloElement.rational(M, 1)
        for j in range(1, M):
            assert z**j != CycloElement.rational(M, 1)


def test_zeta_pow_wraps():
    assert CycloElement.zeta_pow(6, 7) == zeta(6)
    assert CycloElement.zeta_pow(6, -1) == zeta(6) ** 5


# field laws


@given(st.sampled_from([3, 4, 6, 12]), st.data())
def test_add_commutes(M, data):
    a = data.draw(elements(M=M))
    b = data.draw(elements(M=M))
    assert a + b == b + a


@given(elements(M=12), elements(M=12), elements(M=12))
def test_mul_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements(M=12), elements(M=12), elements(M=12))
def test_mul_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(elements(M=12))
def test_inverse(a):
    if a == CycloElement.rational(12, 0):
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == CycloElement.rational(12, 1)


@given(elements(M=12), st.sampled_from([1, 5, 7, 11]))
def test_galois_is_ring_map(a, j):
    b = zeta(12)
    assert (a * b).galois(j) == a.galois(j) * b.galois(j)
    assert (a + b).galois(j) == a.galois(j) + b.galois(j)


def test_galois_on_zeta():
    assert zeta(12).galois(7) == zeta(12) ** 7


def test_embed_compatible():
    # zeta_3 inside Q(zeta_6): zeta_6^2
    assert zeta(3).embed(6) == zeta(6) ** 2
    a = zeta(3) + CycloElement.rational(3, Fraction(1, 2))
    assert a.embed(12) == zeta(12) ** 4 + CycloElement.rational(12, Fraction(1, 2))


def test_minus_one_is_half_turn():
    assert zeta(6) ** 3 == -CycloElement.rational(6, 1)
    assert zeta(8) ** 4 == -CycloElement.rational(8, 1)


@given(elements(M=8))
def test_pow_negative_is_inverse_power(a):
    if a != CycloElement.rational(8, 0):
        assert a**-2 == (a.inverse()) ** 2


def test_cyclotomic_relation_reduces():
    # 1 + zeta_3 + zeta_3^2 = 0
    z = zeta(3)
    assert z**2 + z + CycloElement.rational(3, 1) == CycloElement.rational(3, 0)

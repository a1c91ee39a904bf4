"""Bernoulli polynomials and the c-smoothed second-Bernoulli measures.

The level-(ell^r N) measure attached to a smoothing integer c with
gcd(c, ell*N) = 1 assigns to a residue x the exact rational

    B(x) = (M/2) * (c^2 B_2({x/M}) - B_2({c x/M})),      M = ell^r N,

which is an integer whenever gcd(c, 6) = 1 as well.  Restricted to a fiber
{x == t mod N} this is a measure on the level-r torsor; the family over r is
compatible under the trace maps (the distribution relation of B_2), and its
degree-k torsor moments satisfy the congruence

    mom^k == N^{k+1}/(c^k (k+2)) * (c^{k+2} B_{k+2}({t/N}) - B_{k+2}({c t/N}))
                                                          (mod ell^r),

whose right side is the closed moment formula implemented here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .measures import Measure, TorsorSpec, torsor_elements
from .numutil import frac_part

__all__ = [
    "bernoulli_poly",
    "bern_eval",
    "frac",
    "smoothed_b2",
    "bernoulli_measure",
    "bernoulli_moment_closed",
]


@lru_cache(maxsize=None)
def bernoulli_poly(k: int) -> tuple[Fraction, ...]:
    """Coefficients (ascending) of the k-th Bernoulli polynomial B_k(x).

    Defined by B_0 = 1 and the recurrence
    sum_{j=0}^{k} C(k+1, j) B_j(x) = (k+1) x^k.
    """
    if k < 0:
        raise ValueError("degree must be >= 0")
    if k == 0:
        return (Fraction(1),)
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(k + 1)  # (k+1) x^k
    for j in range(k):
        bj = bernoulli_poly(j)
        w = comb(k + 1, j)
        for i, c in enumerate(bj):
            coeffs[i] -= w * c
    return tuple(c / (k + 1) for c in coeffs)


def bern_eval(k: int, x) -> Fraction:
    """B_k evaluated at an exact rational."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(bernoulli_poly(k)):
        acc = acc * x + c
    return acc


def frac(x) -> Fraction:
    """The representative of x mod Z in [0, 1)."""
    return frac_part(Fraction(x))


def smoothed_b2(M: int, c: int, x: int) -> Fraction:
    """(M/2) * (c^2 B_2({x/M}) - B_2({c x/M}))."""
    return Fraction(M, 2) * (
        c * c * bern_eval(2, frac(Fraction(x, M)))
        - bern_eval(2, frac(Fraction(c * x, M)))
    )


def bernoulli_measure(ell: int, r: int, N: int, c: int, t: int) -> Measure:
    """The c-smoothed Bernoulli measure on the rank-1 fiber over t.

    Values are exact rationals; they are integers when gcd(c, 6) = 1 too,
    and that is asserted (ell-integrality is what reduce_mod checks later).
    """
    if gcd(c, ell * N) != 1:
        raise ValueError(f"gcd(c, ell*N) = gcd({c}, {ell * N}) != 1")
    spec = TorsorSpec(ell, r, N, 1, "reduction", (t,))
    M = spec.modulus
    integral = gcd(c, 6) == 1
    values = {}
    for x in torsor_elements(spec):
        v = smoothed_b2(M, c, x[0])
        if integral and v.denominator != 1:
            raise AssertionError(
                f"value {v} at {x} not integral despite gcd(c, 6*ell*N) = 1"
            )
        values[x] = v
    return Measure(spec, values)


def bernoulli_moment_closed(k: int, N: int, c: int, t: int) -> Fraction:
    """Closed form of the limit degree-k moment over the fiber at t."""
    a = frac(Fraction(t, N))
    ca = frac(Fraction(c * t, N))
    return (
        Fraction(N) ** (k + 1)
        / (Fraction(c) ** k * (k + 2))
        * (Fraction(c) ** (k + 2) * bern_eval(k + 2, a) - bern_eval(k + 2, ca))
    )

"""Small integer/rational helpers shared across the package."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def is_prime(n: int) -> bool:
    """Deterministic primality test for the small moduli used here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % p == 0:
            return n == p
    d = 37
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer n."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def frac_part(x: Fraction) -> Fraction:
    """The representative of x mod Z in [0, 1)."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def rat_str(x: Fraction | int) -> str:
    """Render an exact rational as "num/den" ("num" when den == 1)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    """Inverse of rat_str; accepts "num", "num/den", and signs."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def mod_inverse_reduce(x: Fraction, q: int, ell: int) -> int:
    """Reduce a rational with ell-unit denominator into Z/q, q a power of ell.

    Raises ArithmeticError when ell divides the denominator (the value is not
    ell-integral, so it has no image in Z/q).
    """
    if gcd(x.denominator, ell) != 1:
        raise ArithmeticError(
            f"{x} is not {ell}-integral; cannot reduce mod {q}"
        )
    return (x.numerator * pow(x.denominator, -1, q)) % q


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)

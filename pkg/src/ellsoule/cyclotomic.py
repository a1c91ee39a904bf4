"""Exact cyclotomic field arithmetic.

Elements of Q(zeta_M) are stored as the unique reduced residue modulo the
M-th cyclotomic polynomial Phi_M: a tuple of phi(M) rational coordinates
(a_0, ..., a_{phi(M)-1}) representing sum a_i zeta_M^i.  Reduction mod Phi_M
(rather than mod x^M - 1) makes equality of coordinates equality in the
field, which every series-coefficient comparison in this package relies on.

All arithmetic is pure and exact; no floats, no complex embeddings.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "cyclo_poly",
    "euler_phi",
    "CycloElement",
    "zeta",
    "cyclo_rational",
]


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("phi is defined for positive integers")
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials (ascending coefficients).

    Requires the division to be exact over Z whenever the remainder is
    expected to vanish; used only with monic denominators.
    """
    num = list(num)
    q = [0] * (max(len(num) - len(den) + 1, 0))
    d = len(den) - 1
    lead = den[-1]
    while len(num) - 1 >= d and _poly_trim(list(num)):
        if len(num) - 1 < d:
            break
        coeff = num[-1]
        if coeff == 0:
            num.pop()
            continue
        assert coeff % lead == 0
        c = coeff // lead
        pos = len(num) - 1 - d
        q[pos] = c
        for i, dc in enumerate(den):
            num[pos + i] -= c * dc
        num.pop()
    return q, _poly_trim(num)


@lru_cache(maxsize=None)
def cyclo_poly(M: int) -> tuple[int, ...]:
    """The M-th cyclotomic polynomial Phi_M, ascending integer coefficients.

    Computed by exact division of x^M - 1 by the Phi_d of proper divisors d.
    """
    if M < 1:
        raise ValueError("conductor must be positive")
    if M == 1:
        return (-1, 1)
    num = [0] * (M + 1)
    num[0] = -1
    num[M] = 1
    for d in range(1, M):
        if M % d == 0:
            num, rem = _poly_divmod_int(num, list(cyclo_poly(d)))
            assert not rem
    return tuple(num)


@lru_cache(maxsize=None)
def _xpow_table(M: int) -> tuple[tuple[Fraction, ...], ...]:
    """x^k mod Phi_M for 0 <= k <= 2*(phi(M)-1), as coordinate tuples."""
    phi = euler_phi(M)
    phi_poly = cyclo_poly(M)
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * phi
    cur[0] = Fraction(1)
    for _ in range(2 * phi - 1):
        rows.append(tuple(cur))
        # multiply by x, then reduce the single overflow term via
        # x^phi = -(phi_poly[0] + ... + phi_poly[phi-1] x^{phi-1})
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * phi_poly[i]
    return tuple(rows)


def _reduce_poly(M: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce an arbitrary-degree polynomial in zeta_M modulo Phi_M."""
    phi = euler_phi(M)
    table = None
    out = [Fraction(0)] * phi
    for k, c in enumerate(coeffs):
        if not c:
            continue
        k %= M  # zeta_M^M = 1
        if k < phi:
            out[k] += c
        else:
            if table is None:
                table = _xpow_table(M)
            if k < len(table):
                row = table[k]
            else:
                row = _zeta_pow_coords(M, k)
            for i in range(phi):
                out[i] += c * row[i]
    return tuple(out)


@lru_cache(maxsize=None)
def _zeta_pow_coords(M: int, k: int) -> tuple[Fraction, ...]:
    """Coordinates of zeta_M^k (any k) in the reduced basis."""
    phi = euler_phi(M)
    phi_poly = cyclo_poly(M)
    k %= M
    if k < phi:
        coords = [Fraction(0)] * phi
        coords[k] = Fraction(1)
        return tuple(coords)
    # reduce x^k mod Phi_M by iterated multiplication by x (k < M is small)
    cur = [Fraction(0)] * phi
    cur[0] = Fraction(1)
    for _ in range(k):
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * phi_poly[i]
    return tuple(cur)


def _mul_coords(
    M: int, a: tuple[Fraction, ...], b: tuple[Fraction, ...]
) -> tuple[Fraction, ...]:
    phi = euler_phi(M)
    conv = [Fraction(0)] * (2 * phi - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                conv[i + j] += ai * bj
    table = _xpow_table(M)
    out = [Fraction(0)] * phi
    for k, c in enumerate(conv):
        if not c:
            continue
        row = table[k]
        for i in range(phi):
            out[i] += c * row[i]
    return tuple(out)


class CycloElement:
    """An element of Q(zeta_M), reduced modulo Phi_M."""

    __slots__ = ("M", "coeffs")

    def __init__(self, M: int, coeffs):
        phi = euler_phi(M)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coordinates for conductor {M}")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):  # immutable
        raise AttributeError("CycloElement is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_poly(M: int, coeffs) -> "CycloElement":
        """Build from arbitrary-length zeta_M-power coefficients."""
        return CycloElement(M, _reduce_poly(M, [Fraction(c) for c in coeffs]))

    @staticmethod
    def rational(M: int, x) -> "CycloElement":
        phi = euler_phi(M)
        coords = [Fraction(0)] * phi
        coords[0] = Fraction(x)
        return CycloElement(M, coords)

    @staticmethod
    def zeta_pow(M: int, k: int) -> "CycloElement":
        return CycloElement(M, _zeta_pow_coords(M, k))

    # -- structure ----------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.M == other.M and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.M, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    # -- ring operations ----------------------------------------------
    def _coerce(self, other) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.M != self.M:
                raise ValueError("conductor mismatch; embed explicitly")
            return other
        return CycloElement.rational(self.M, other)

    def __add__(self, other):
        other = self._coerce(other)
        return CycloElement(
            self.M, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.M, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CycloElement.rational(self.M, 0)
            return CycloElement(self.M, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        return CycloElement(self.M, _mul_coords(self.M, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        """Multiplicative inverse via the extended Euclidean algorithm
        on the coordinate polynomial and Phi_M over Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_M)")
        # extended gcd of a(x) and Phi_M(x)
        a = list(self.coeffs)
        b = [Fraction(c) for c in cyclo_poly(self.M)]

        def trim(p):
            while p and not p[-1]:
                p.pop()
            return p

        def divmod_q(num, den):
            num = list(num)
            q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
            while trim(num) and len(num) >= len(den):
                c = num[-1] / den[-1]
                pos = len(num) - len(den)
                q[pos] += c
                for i, dc in enumerate(den):
                    num[pos + i] -= c * dc
                num.pop()
            return q, num

        r0, r1 = trim(a), trim(b)
        s0, s1 = [Fraction(1)], []
        while r1:
            q, r = divmod_q(r0, r1)
            r0, r1 = r1, trim(r)
            # s_new = s0 - q*s1
            prod = [Fraction(0)] * (len(q) + len(s1) if s1 else 0)
            for i, qi in enumerate(q):
                if not qi:
                    continue
                for j, sj in enumerate(s1):
                    prod[i + j] += qi * sj
            new = [Fraction(0)] * max(len(s0), len(prod))
            for i, c in enumerate(s0):
                new[i] += c
            for i, c in enumerate(prod):
                new[i] -= c
            s0, s1 = s1, trim(new)
        # r0 = gcd (a nonzero constant, since Phi_M is irreducible)
        if len(r0) != 1:
            raise ZeroDivisionError("element is zero modulo Phi_M")
        unit = r0[0]
        inv_coeffs = [c / unit for c in s0]
        return CycloElement.from_poly(self.M, inv_coeffs)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __pow__(self, n: int) -> "CycloElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloElement.rational(self.M, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- field maps -----------------------------------------------------
    def embed(self, M2: int) -> "CycloElement":
        """Ring embedding Q(zeta_M) -> Q(zeta_M2), zeta_M -> zeta_M2^{M2/M}."""
        if M2 % self.M != 0:
            raise ValueError(f"{self.M} does not divide {M2}")
        s = M2 // self.M
        out = [Fraction(0)] * (euler_phi(self.M) * s + 1)
        big: list[Fraction] = []
        for i, c in enumerate(self.coeffs):
            k = i * s
            while len(big) <= k:
                big.append(Fraction(0))
            big[k] += c
        return CycloElement.from_poly(M2, big)

    def galois(self, u: int) -> "CycloElement":
        """The automorphism determined by zeta_M -> zeta_M^u, gcd(u, M) = 1."""
        if gcd(u, self.M) != 1:
            raise ValueError(f"{u} is not coprime to {self.M}")
        phi = euler_phi(self.M)
        out = [Fraction(0)] * phi
        changed = False
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            row = _zeta_pow_coords(self.M, (i * u) % self.M)
            for j in range(phi):
                out[j] += c * row[j]
            changed = True
        return CycloElement(self.M, out if changed else out)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z{self.M}")
            else:
                terms.append(f"{c}*z{self.M}^{i}")
        return " + ".join(terms) if terms else "0"


def zeta(M: int, k: int = 1) -> CycloElement:
    """zeta_M^k as a CycloElement."""
    return CycloElement.zeta_pow(M, k)


def cyclo_rational(M: int, x) -> CycloElement:
    return CycloElement.rational(M, x)

"""Truncated Laurent–Puiseux series with exact cyclotomic coefficients.

A series is a finite map n -> a_n (a_n in Q(zeta_M), n an integer exponent
meaning q^{n/M}) together with a truncation window T: it represents

    f = sum_{n < T} a_n q^{n/M} + O(q^{T/M}).

Every series carries its own window, and binary operations compute the
tightest window that is still sound, so heterogeneous products (e.g. norm
products of many unit factors) track precision automatically:

  * add:   min(T_f, T_g)
  * mul:   min(T_f + val_lb(g), T_g + val_lb(f)), val_lb = least stored
           exponent (or the window itself when no term is stored)
  * invert (valuation v, unit constant term): T - 2v

Negative exponents are allowed; zero coefficients are never stored, so the
zero series is the empty map and representations are canonical.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .cyclotomic import CycloElement

__all__ = ["PuiseuxSeries"]


class PuiseuxSeries:
    """Truncated Laurent–Puiseux series over Q(zeta_M) in q^{1/M}."""

    __slots__ = ("M", "T", "terms")

    def __init__(self, M: int, T: int, terms: dict[int, CycloElement]):
        if M < 1:
            raise ValueError("exponent denominator must be positive")
        clean: dict[int, CycloElement] = {}
        for n, c in terms.items():
            if n >= T:
                continue
            if not isinstance(c, CycloElement):
                c = CycloElement.rational(M, c)
            if c.M != M:
                raise ValueError("coefficient conductor must equal series M")
            if not c.is_zero():
                clean[n] = c
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("PuiseuxSeries is immutable")

    # -- constructors ---------------------------------------------------
    @staticmethod
    def zero(M: int, T: int) -> "PuiseuxSeries":
        return PuiseuxSeries(M, T, {})

    @staticmethod
    def one(M: int, T: int) -> "PuiseuxSeries":
        return PuiseuxSeries(M, T, {0: CycloElement.rational(M, 1)})

    @staticmethod
    def monomial(M: int, n: int, T: int, coeff=1) -> "PuiseuxSeries":
        c = coeff if isinstance(coeff, CycloElement) else CycloElement.rational(M, coeff)
        return PuiseuxSeries(M, T, {n: c})

    # -- inspection -------------------------------------------------------
    def val_lb(self) -> int:
        """Least stored exponent, or T when no terms are stored."""
        return min(self.terms) if self.terms else self.T

    def valuation(self) -> Fraction:
        """The least exponent with nonzero coefficient, as n/M."""
        if not self.terms:
            raise ValueError("series is zero to its truncation order")
        return Fraction(min(self.terms), self.M)

    def constant_term(self) -> CycloElement:
        return self.terms.get(0, CycloElement.rational(self.M, 0))

    def coeff(self, n: int) -> CycloElement:
        return self.terms.get(n, CycloElement.rational(self.M, 0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return (
            self.M == other.M and self.T == other.T and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.M, self.T, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        bits = [
            f"({c!r})*q^({n}/{self.M})"
            for n, c in sorted(self.terms.items())
        ]
        body = " + ".join(bits) if bits else "0"
        return f"{body} + O(q^({self.T}/{self.M}))"

    # -- conductor management --------------------------------------------
    def rescale(self, M2: int) -> "PuiseuxSeries":
        """Re-express in q^{1/M2} for M | M2 (exponents and window scale by
        M2/M; coefficients embed into Q(zeta_M2))."""
        if M2 % self.M != 0:
            raise ValueError(f"{self.M} does not divide {M2}")
        s = M2 // self.M
        if s == 1:
            return self
        return PuiseuxSeries(
            M2, self.T * s, {n * s: c.embed(M2) for n, c in self.terms.items()}
        )

    def _common(self, other: "PuiseuxSeries"):
        M2 = lcm(self.M, other.M)
        return self.rescale(M2), other.rescale(M2)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        f, g = self._common(other)
        T = min(f.T, g.T)
        terms = dict(f.terms)
        for n, c in g.terms.items():
            terms[n] = terms[n] + c if n in terms else c
        return PuiseuxSeries(f.M, T, terms)

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries(self.M, self.T, {n: -c for n, c in self.terms.items()})

    def __sub__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return self + (-other)

    def scale(self, c) -> "PuiseuxSeries":
        """Multiply by a scalar (rational or CycloElement of conductor M)."""
        if not isinstance(c, CycloElement):
            c = CycloElement.rational(self.M, c)
        return PuiseuxSeries(self.M, self.T, {n: a * c for n, a in self.terms.items()})

    def __mul__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        f, g = self._common(other)
        T = min(f.T + g.val_lb(), g.T + f.val_lb())
        out: dict[int, CycloElement] = {}
        for n1, c1 in f.terms.items():
            for n2, c2 in g.terms.items():
                n = n1 + n2
                if n >= T:
                    continue
                prod = c1 * c2
                if n in out:
                    out[n] = out[n] + prod
                else:
                    out[n] = prod
        return PuiseuxSeries(f.M, T, out)

    def shift(self, n0: int) -> "PuiseuxSeries":
        """Multiply by the exact monomial q^{n0/M}."""
        return PuiseuxSeries(
            self.M, self.T + n0, {n + n0: c for n, c in self.terms.items()}
        )

    def invert(self) -> "PuiseuxSeries":
        """Multiplicative inverse; requires a nonzero lowest-order term.

        If f = q^{v/M} * u with u(0) a unit, the inverse is computed by the
        standard coefficient recurrence on the unit part and carries the
        sound window T - 2v.
        """
        if not self.terms:
            raise ZeroDivisionError("series is zero to its truncation order")
        v = min(self.terms)
        W = self.T - v  # window of the unit part
        u = {n - v: c for n, c in self.terms.items()}
        u0 = u[0]
        u0_inv = u0.inverse()
        inv: dict[int, CycloElement] = {0: u0_inv}
        zero = CycloElement.rational(self.M, 0)
        for n in range(1, W):
            acc = zero
            for m, um in u.items():
                if 0 < m <= n:
                    b = inv.get(n - m)
                    if b is not None and not b.is_zero():
                        acc = acc + um * b
            if not acc.is_zero():
                inv[n] = -(u0_inv * acc)
        # unit-part inverse has window W; shifting by -v gives T - 2v
        return PuiseuxSeries(self.M, W - v, {n - v: c for n, c in inv.items()})

    def __pow__(self, k: int) -> "PuiseuxSeries":
        if k < 0:
            return self.invert() ** (-k)
        # power by repeated squaring; window bookkeeping is handled by mul
        base = self
        acc = None
        n = k
        while n:
            if n & 1:
                acc = base if acc is None else acc * base
            n >>= 1
            if n:
                base = base * base
        if acc is None:
            # k == 0: exact 1 with the window of self as a safe default
            return PuiseuxSeries.one(self.M, self.T)
        return acc

    def rotate(self, j: int) -> "PuiseuxSeries":
        """Substitute q^{1/M} -> zeta_M^j q^{1/M}: coeff_n *= zeta_M^{jn}."""
        return PuiseuxSeries(
            self.M,
            self.T,
            {
                n: c * CycloElement.zeta_pow(self.M, (j * n) % self.M)
                for n, c in self.terms.items()
            },
        )

    def truncate(self, T2: int) -> "PuiseuxSeries":
        """Weaken the window to T2 <= T (drop higher terms)."""
        if T2 > self.T:
            raise ValueError("cannot strengthen a truncation window")
        return PuiseuxSeries(self.M, T2, {n: c for n, c in self.terms.items() if n < T2})

    def agree_up_to(self, other: "PuiseuxSeries", W: int) -> bool:
        """Coefficient-by-coefficient equality for all exponents < W.

        Both windows must reach W (common conductor taken automatically).
        """
        f, g = self._common(other)
        if f.T < W or g.T < W:
            raise ValueError(
                f"insufficient truncation: windows {f.T}, {g.T} < required {W}"
            )
        for n in set(f.terms) | set(g.terms):
            if n < W and f.coeff(n) != g.coeff(n):
                return False
        return True

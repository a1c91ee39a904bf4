"""Graded divided-power algebra of symmetric tensors, rank 1 or 2.

Degree-k component has basis e^{[n]} = e_1^{[n_1]} ... e_d^{[n_d]} over
exponent tuples with |n| = k.  The two structural laws are

    (g + h)^{[k]} = sum_{m+n=k} g^{[m]} h^{[n]}          (addition)
    e^{[a]} * e^{[b]} = prod_i C(a_i + b_i, a_i) e^{[a+b]} (product)

so the algebra is integrally distinct from the symmetric algebra: the map
from Sym sends e_1^{n_1}...e_d^{n_d} to (prod_i n_i!) e^{[n]}.

Coefficients live over Z, Q, or Z/m (ring tags "Z", "Q", "Z/<m>"); reduction
mod m commutes with the product, and no operation ever divides.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

__all__ = [
    "TSym",
    "divided_power",
    "sym_to_tsym",
    "tsym_map",
    "exponent_tuples",
]


def _ring_normalize(ring: str, c):
    """Coerce a coefficient into the given ring's canonical form."""
    if ring == "Q":
        return Fraction(c)
    if ring == "Z":
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"{c} is not an integer")
            c = c.numerator
        return int(c)
    if ring.startswith("Z/"):
        m = int(ring[2:])
        if isinstance(c, Fraction):
            if _gcd(c.denominator, m) != 1:
                raise ArithmeticError(f"denominator of {c} not invertible mod {m}")
            return (c.numerator * pow(c.denominator, -1, m)) % m
        return int(c) % m
    raise ValueError(f"unknown ring tag {ring!r}")


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def exponent_tuples(d: int, k: int) -> list[tuple[int, ...]]:
    """All exponent tuples of length d with entries >= 0 summing to k."""
    if d == 1:
        return [(k,)]
    out = []
    for first in range(k + 1):
        for rest in exponent_tuples(d - 1, k - first):
            out.append((first,) + rest)
    return out


class TSym:
    """An element of the truncated divided-power algebra, rank d over a ring.

    comps maps degree k to {exponent tuple: coefficient}; zero coefficients
    are dropped, so representations are canonical.
    """

    __slots__ = ("d", "ring", "comps")

    def __init__(self, d: int, ring: str, comps: dict[int, dict[tuple[int, ...], object]]):
        if d not in (1, 2):
            raise ValueError("rank must be 1 or 2")
        clean: dict[int, dict[tuple[int, ...], object]] = {}
        for k, terms in comps.items():
            row = {}
            for n, c in terms.items():
                n = tuple(int(x) for x in n)
                if len(n) != d or any(x < 0 for x in n) or sum(n) != k:
                    raise ValueError(f"bad exponent tuple {n} in degree {k}")
                c = _ring_normalize(ring, c)
                if c:
                    row[n] = c
            if row:
                clean[k] = row
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "comps", clean)

    def __setattr__(self, *a):
        raise AttributeError("TSym is immutable")

    # -- constructors ----------------------------------------------------
    @staticmethod
    def zero(d: int, ring: str = "Q") -> "TSym":
        return TSym(d, ring, {})

    @staticmethod
    def one(d: int, ring: str = "Q") -> "TSym":
        return TSym(d, ring, {0: {(0,) * d: 1}})

    @staticmethod
    def basis(d: int, n: tuple[int, ...], ring: str = "Q", coeff=1) -> "TSym":
        """coeff * e^{[n]}."""
        return TSym(d, ring, {sum(n): {tuple(n): coeff}})

    # -- structure ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, TSym):
            return NotImplemented
        return (
            self.d == other.d and self.ring == other.ring and self.comps == other.comps
        )

    def __hash__(self):
        return hash(
            (
                self.d,
                self.ring,
                tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.comps.items())),
            )
        )

    def __bool__(self):
        return bool(self.comps)

    def component(self, k: int) -> "TSym":
        return TSym(self.d, self.ring, {k: dict(self.comps.get(k, {}))})

    def coeff(self, n: tuple[int, ...]):
        row = self.comps.get(sum(n), {})
        c = row.get(tuple(n), 0)
        return c

    def degrees(self) -> list[int]:
        return sorted(self.comps)

    # -- linear structure ---------------------------------------------------
    def _check(self, other: "TSym"):
        if self.d != other.d or self.ring != other.ring:
            raise ValueError("rank/ring mismatch")

    def __add__(self, other: "TSym") -> "TSym":
        self._check(other)
        comps = {k: dict(v) for k, v in self.comps.items()}
        for k, terms in other.comps.items():
            row = comps.setdefault(k, {})
            for n, c in terms.items():
                row[n] = row.get(n, 0) + c
        return TSym(self.d, self.ring, comps)

    def __neg__(self) -> "TSym":
        return TSym(
            self.d,
            self.ring,
            {k: {n: -c for n, c in v.items()} for k, v in self.comps.items()},
        )

    def __sub__(self, other: "TSym") -> "TSym":
        return self + (-other)

    def scale(self, c) -> "TSym":
        return TSym(
            self.d,
            self.ring,
            {k: {n: v * c for n, v in row.items()} for k, row in self.comps.items()},
        )

    # -- the divided-power product ------------------------------------------
    def __mul__(self, other: "TSym") -> "TSym":
        self._check(other)
        comps: dict[int, dict[tuple[int, ...], object]] = {}
        for k1, t1 in self.comps.items():
            for k2, t2 in other.comps.items():
                row = comps.setdefault(k1 + k2, {})
                for n1, c1 in t1.items():
                    for n2, c2 in t2.items():
                        n = tuple(a + b for a, b in zip(n1, n2))
                        w = 1
                        for a, b in zip(n1, n2):
                            w *= comb(a + b, a)
                        row[n] = row.get(n, 0) + c1 * c2 * w
        return TSym(self.d, self.ring, comps)

    def __pow__(self, k: int) -> "TSym":
        result = TSym.one(self.d, self.ring)
        for _ in range(k):
            result = result * self
        return result

    # -- base change ----------------------------------------------------------
    def base_change(self, ring: str) -> "TSym":
        """Move coefficients into another ring (Z -> Q, Z -> Z/m, Q -> Z/m
        when denominators are invertible)."""
        return TSym(
            self.d,
            ring,
            {k: dict(v) for k, v in self.comps.items()},
        )


def divided_power(coords, k: int, d: int | None = None, ring: str = "Q") -> TSym:
    """h^{[k]} for a degree-1 element h = sum coords_i e_i.

    Equals sum_{|n|=k} (prod_i coords_i^{n_i}) e^{[n]}, the unique extension
    of the addition law (g+h)^{[k]} = sum g^{[m]} h^{[n]}.
    """
    coords = tuple(coords)
    if d is None:
        d = len(coords)
    if len(coords) != d:
        raise ValueError("coordinate count must match rank")
    terms = {}
    for n in exponent_tuples(d, k):
        c = 1
        for x, e in zip(coords, n):
            if e:
                c = c * (x ** e)
        terms[n] = c
    return TSym(d, ring, {k: terms})


def sym_to_tsym(monomial: tuple[int, ...], ring: str = "Q", coeff=1) -> TSym:
    """Image of coeff * e_1^{n_1}...e_d^{n_d} under the algebra map from Sym.

    The map is the ring homomorphism fixing degree one, which forces the
    coefficient prod_i n_i! on the divided-power basis vector e^{[n]}.
    """
    n = tuple(monomial)
    w = 1
    for e in n:
        w *= factorial(e)
    return TSym.basis(len(n), n, ring, _mul_coeff(coeff, w, ring))


def _mul_coeff(c, w, ring):
    if ring == "Q":
        return Fraction(c) * w
    return c * w


def tsym_map(phi, a: TSym) -> TSym:
    """The induced map TSym(phi) for phi a scalar or a d'-by-d integer matrix.

    A scalar c multiplies the degree-k component by c^k.  A matrix phi sends
    e_j^{[1]} to sum_i phi[i][j] e_i^{[1]} and basis vectors to divided-power
    products of the column images, which is the functorial map on symmetric
    tensors.
    """
    if isinstance(phi, int):
        comps = {
            k: {n: c * (phi ** k) for n, c in row.items()}
            for k, row in a.comps.items()
        }
        return TSym(a.d, a.ring, comps)
    rows = [list(r) for r in phi]
    d_out = len(rows)
    d_in = len(rows[0]) if rows else 0
    if d_in != a.d:
        raise ValueError("matrix shape does not match element rank")
    columns = [tuple(rows[i][j] for i in range(d_out)) for j in range(d_in)]
    out = TSym.zero(d_out, a.ring)
    for k, row in a.comps.items():
        for n, c in row.items():
            img = TSym.one(d_out, a.ring)
            for j, e in enumerate(n):
                if e:
                    img = img * divided_power(columns[j], e, d_out, a.ring)
            out = out + img.scale(c)
    return out

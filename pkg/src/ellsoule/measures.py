"""Finite-level measure algebras on cyclic groups and their torsors.

The ambient group at level r is G = (Z/(ell^r * N))^d.  A torsor spec fixes a
surjection G -> (Z/N)^d — reduction mod N, or multiplication by ell^r under
the additive identification of the N-torsion — and a base point t; both
surjections have the same fibers

    fiber(t) = { x in G : x == t (mod N) componentwise },

of cardinality ell^{r d}, so the flavor is retained as bookkeeping only.
Measures are exact-rational-valued functions on one fiber; reduction into
Z/ell^r is a separate, checked operation.  Bare (non-torsor) groups (Z/m)^d
are supported for the plain convolution-algebra laws.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _iproduct
from math import gcd

from .numutil import is_prime, mod_inverse_reduce

__all__ = [
    "TorsorSpec",
    "GroupSpec",
    "Measure",
    "torsor_elements",
    "dirac",
    "pushforward",
    "convolve",
    "trace",
    "integrate",
    "reduce_mod",
]


@dataclass(frozen=True)
class TorsorSpec:
    """Fiber over t of the level-r surjection (Z/ell^r N)^d -> (Z/N)^d."""

    ell: int
    r: int
    N: int
    d: int = 1
    flavor: str = "reduction"
    t: tuple[int, ...] = (0,)

    def __post_init__(self):
        if not is_prime(self.ell):
            raise ValueError(f"ell = {self.ell} is not prime")
        if self.r < 0:
            raise ValueError("level r must be >= 0")
        if self.N < 2:
            raise ValueError("N must be >= 2")
        if gcd(self.ell, self.N) != 1:
            raise ValueError(f"gcd(ell, N) = gcd({self.ell}, {self.N}) != 1")
        if self.d not in (1, 2):
            raise ValueError("rank must be 1 or 2")
        if self.flavor not in ("reduction", "multiplication"):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        t = tuple(int(x) % self.N for x in self.t)
        if len(t) != self.d:
            raise ValueError("base point rank mismatch")
        object.__setattr__(self, "t", t)

    @property
    def modulus(self) -> int:
        return self.ell ** self.r * self.N

    def contains(self, x: tuple[int, ...]) -> bool:
        return len(x) == self.d and all(
            0 <= xi < self.modulus and xi % self.N == ti
            for xi, ti in zip(x, self.t)
        )

    def with_t(self, t: tuple[int, ...]) -> "TorsorSpec":
        return TorsorSpec(self.ell, self.r, self.N, self.d, self.flavor, tuple(t))


@dataclass(frozen=True)
class GroupSpec:
    """A bare product group (Z/m)^d (no torsor structure)."""

    m: int
    d: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("modulus must be positive")
        if self.d not in (1, 2):
            raise ValueError("rank must be 1 or 2")

    @property
    def modulus(self) -> int:
        return self.m

    def contains(self, x: tuple[int, ...]) -> bool:
        return len(x) == self.d and all(0 <= xi < self.m for xi in x)


Spec = TorsorSpec | GroupSpec


def torsor_elements(spec: Spec) -> list[tuple[int, ...]]:
    """Enumerate the fiber (sorted); for a bare group, the whole group."""
    if isinstance(spec, GroupSpec):
        return [tuple(x) for x in _iproduct(range(spec.m), repeat=spec.d)]
    per_component = [
        [ti + spec.N * j for j in range(spec.ell ** spec.r)] for ti in spec.t
    ]
    return [tuple(x) for x in _iproduct(*per_component)]


def _key(spec: Spec, x) -> tuple[int, ...]:
    x = tuple(int(v) % spec.modulus for v in (x if isinstance(x, (tuple, list)) else (x,)))
    if not spec.contains(x):
        raise ValueError(f"{x} is not in the fiber of {spec}")
    return x


class Measure:
    """Exact-rational-valued measure supported on one fiber (or bare group)."""

    __slots__ = ("spec", "values")

    def __init__(self, spec: Spec, values: dict):
        vals: dict[tuple[int, ...], Fraction] = {}
        for x, v in values.items():
            v = Fraction(v)
            if v:
                vals[_key(spec, x)] = v
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, *a):
        raise AttributeError("Measure is immutable")

    def __call__(self, x) -> Fraction:
        return self.values.get(_key(self.spec, x), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Measure):
            return NotImplemented
        return self.spec == other.spec and self.values == other.values

    def __hash__(self):
        return hash((self.spec, tuple(sorted(self.values.items()))))

    def __add__(self, other: "Measure") -> "Measure":
        if self.spec != other.spec:
            raise ValueError("measures live on different fibers")
        vals = dict(self.values)
        for x, v in other.values.items():
            vals[x] = vals.get(x, Fraction(0)) + v
        return Measure(self.spec, vals)

    def __neg__(self) -> "Measure":
        return Measure(self.spec, {x: -v for x, v in self.values.items()})

    def __sub__(self, other: "Measure") -> "Measure":
        return self + (-other)

    def scale(self, c) -> "Measure":
        return Measure(self.spec, {x: v * c for x, v in self.values.items()})

    def total_mass(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))

    def __repr__(self):
        body = ", ".join(
            f"{x}: {v}" for x, v in sorted(self.values.items())
        )
        return f"Measure({self.spec}, {{{body}}})"


def dirac(spec: Spec, x) -> Measure:
    """Unit mass at a point of the fiber."""
    return Measure(spec, {_key(spec, x): Fraction(1)})


def _map_point(phi, spec: Spec, x: tuple[int, ...]) -> tuple[int, ...]:
    m = spec.modulus
    if phi == "neg":
        return tuple((-xi) % m for xi in x)
    if isinstance(phi, tuple) and phi and phi[0] == "mult":
        a = phi[1]
        return tuple((a * xi) % m for xi in x)
    if isinstance(phi, tuple) and phi and phi[0] == "proj":
        i = phi[1]
        return (x[i],)
    if phi == "reduce":
        if isinstance(spec, TorsorSpec):
            m2 = spec.ell ** (spec.r - 1) * spec.N
        else:
            raise ValueError("level reduction needs a torsor spec")
        return tuple(xi % m2 for xi in x)
    raise ValueError(f"unsupported map description {phi!r}")


def _push_spec(phi, spec: Spec) -> Spec:
    if phi == "neg":
        if isinstance(spec, TorsorSpec):
            return spec.with_t(tuple((-ti) % spec.N for ti in spec.t))
        return spec
    if isinstance(phi, tuple) and phi and phi[0] == "mult":
        a = phi[1]
        if isinstance(spec, TorsorSpec):
            return spec.with_t(tuple((a * ti) % spec.N for ti in spec.t))
        return spec
    if isinstance(phi, tuple) and phi and phi[0] == "proj":
        i = phi[1]
        if isinstance(spec, TorsorSpec):
            return TorsorSpec(
                spec.ell, spec.r, spec.N, 1, spec.flavor, (spec.t[i],)
            )
        return GroupSpec(spec.m, 1)
    if phi == "reduce":
        if not isinstance(spec, TorsorSpec):
            raise ValueError("level reduction needs a torsor spec")
        if spec.r == 0:
            raise ValueError("cannot reduce below level 0")
        return TorsorSpec(spec.ell, spec.r - 1, spec.N, spec.d, spec.flavor, spec.t)
    raise ValueError(f"unsupported map description {phi!r}")


def pushforward(phi, mu: Measure) -> Measure:
    """(phi_! mu)(y) = sum over phi(x) = y of mu(x).

    Supported map descriptions: "neg", ("mult", a), ("proj", i), "reduce"
    (one level of the trace tower).
    """
    spec2 = _push_spec(phi, mu.spec)
    vals: dict[tuple[int, ...], Fraction] = {}
    for x, v in mu.values.items():
        y = _map_point(phi, mu.spec, x)
        if phi == "reduce":
            y = tuple(yi % spec2.modulus for yi in y)
        vals[y] = vals.get(y, Fraction(0)) + v
    return Measure(spec2, vals)


def trace(mu: Measure) -> Measure:
    """Pushforward along the canonical level surjection r+1 -> r."""
    return pushforward("reduce", mu)


def convolve(mu: Measure, nu: Measure) -> Measure:
    """(mu * nu)(z) = sum_{x + y = z} mu(x) nu(y).

    Defined for two measures on the same ambient group: two bare-group
    measures, or two torsor measures with the same (ell, r, N, d, flavor)
    (base points add — the group case is the fiber over 0, and a group
    measure acts on any torsor fiber by translation).
    """
    if isinstance(mu.spec, GroupSpec) and isinstance(nu.spec, GroupSpec):
        if mu.spec != nu.spec:
            raise ValueError("incompatible group specs")
        spec = mu.spec
    elif isinstance(mu.spec, TorsorSpec) and isinstance(nu.spec, TorsorSpec):
        a, b = mu.spec, nu.spec
        if (a.ell, a.r, a.N, a.d, a.flavor) != (b.ell, b.r, b.N, b.d, b.flavor):
            raise ValueError("incompatible torsor specs")
        spec = a.with_t(tuple((x + y) % a.N for x, y in zip(a.t, b.t)))
    else:
        raise ValueError("cannot convolve a bare-group with a torsor measure")
    m = spec.modulus
    vals: dict[tuple[int, ...], Fraction] = {}
    for x, vx in mu.values.items():
        for y, vy in nu.values.items():
            z = tuple((a + b) % m for a, b in zip(x, y))
            vals[z] = vals.get(z, Fraction(0)) + vx * vy
    return Measure(spec, vals)


def integrate(mu: Measure, f) -> object:
    """sum_x mu(x) f(*x); f receives one argument per component."""
    total = None
    for x, v in sorted(mu.values.items()):
        term = f(*x) * v
        total = term if total is None else total + term
    return Fraction(0) if total is None else total


def reduce_mod(mu: Measure, q: int, ell: int | None = None) -> dict[tuple[int, ...], int]:
    """Checked reduction of the values into Z/q, q a power of a prime ell.

    Raises ArithmeticError when some value is not ell-integral.
    """
    if ell is None:
        if isinstance(mu.spec, TorsorSpec):
            ell = mu.spec.ell
        else:
            raise ValueError("specify the prime for a bare-group measure")
    return {
        x: mod_inverse_reduce(v, q, ell) for x, v in sorted(mu.values.items())
    }

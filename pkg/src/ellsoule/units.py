"""q-expansions of the canonical smoothed theta unit and its cusp calculus.

At level M (with gcd(c, 6M) = 1, c > 1) and a torsion point (x, y) with
canonical representatives in [0, M), (x, y) != (0, 0), the unit's expansion
in q^{1/M} over Q(zeta_M) is

    q^{e0} * (-zeta^y)^{(c-c^2)/2} * (-1)^m zeta^{mcy}
           * (1 - q^x zeta^y)^{c^2} / (1 - q^{x'} zeta^{y'})
           * gtilde(x, y)^{c^2} / gtilde(x', y'),

where e0 = (M/2)(c^2 B_2({x/M}) - B_2({c x/M})) (an integer, in q^{1/M}
units), (x', y') = (c x mod M, c y mod M) with carry m = (c x - x')/M, and

    gtilde(u, v) = prod_{n >= 1} (1 - q^{nM+u} zeta^v)(1 - q^{nM-u} zeta^{-v}).

The scalar is forced by the reduction of the smoothed index into [0, M):
shifting the expansion index u -> u - 1 multiplies the product by
-zeta^{-y'}, and m such shifts bring c x down to x'.  With that carry factor
the expansions are exactly norm-compatible: the product over the d^2
preimages of a point under multiplication by d equals the base expansion.

Everything downstream is read off this expansion: the residue measure at the
cusp aggregates actual q-valuations over a fiber (with ramification factor
ell^r), and the cusp (q = 0) value of the valuation-normalized unit is an
exact cyclotomic number.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .bernoulli import smoothed_b2
from .cyclotomic import CycloElement, euler_phi
from .measures import Measure, TorsorSpec, torsor_elements
from .numutil import ceil_div
from .puiseux import PuiseuxSeries

__all__ = [
    "theta_series",
    "theta_qexp",
    "residue_elliptic_soule",
    "norm_check_theta",
    "eta_exponent",
    "eta_qexp",
    "epsilon_series",
    "cusp_value_closed",
    "epsilon_cusp_eval",
    "cusp_square_check",
    "RatFun",
    "xi",
    "xi_c",
    "norm_under_power",
]


def _check_theta_args(M: int, c: int, point: tuple[int, int]) -> tuple[int, int]:
    if M < 2:
        raise ValueError("level must be >= 2")
    if c <= 1 or gcd(c, 6 * M) != 1:
        raise ValueError(f"need c > 1 with gcd(c, 6M) = gcd({c}, {6 * M}) = 1")
    x, y = int(point[0]) % M, int(point[1]) % M
    if (x, y) == (0, 0):
        raise ValueError("the unit has no expansion at the origin")
    return x, y


def _one_minus(M: int, n: int, zexp: int, T: int) -> PuiseuxSeries:
    """1 - q^{n/M} zeta_M^{zexp} at window T."""
    terms = {0: CycloElement.rational(M, 1)}
    z = -CycloElement.zeta_pow(M, zexp)
    if n in terms:
        terms[n] = terms[n] + z
    else:
        terms[n] = z
    return PuiseuxSeries(M, T, terms)


def _gtilde(M: int, u: int, v: int, W: int) -> PuiseuxSeries:
    """Truncated gtilde(u, v): factors n = 1 .. ceil(W/M) + 1.

    Each omitted factor is 1 + O(q^{n - u/M}) with n - u/M > W/M, so the
    window W is sound.
    """
    out = PuiseuxSeries.one(M, W)
    n_max = ceil_div(max(W, 0), M) + 1
    for n in range(1, n_max + 1):
        out = out * _one_minus(M, n * M + u, v, W)
        out = out * _one_minus(M, n * M - u, -v, W)
    return out


def theta_series(M: int, c: int, point: tuple[int, int], trunc: int) -> PuiseuxSeries:
    """The smoothed theta unit's q-expansion at level M, window `trunc`
    (in q^{1/M} units)."""
    x, y = _check_theta_args(M, c, point)
    e0f = smoothed_b2(M, c, x)
    if e0f.denominator != 1:
        raise AssertionError(f"prefactor exponent {e0f} is not an integer")
    e0 = e0f.numerator
    W = trunc - e0
    if W <= 0:
        raise ValueError(
            f"truncation {trunc} too small to represent the leading term q^{e0}/{M}"
        )
    x2, y2 = (c * x) % M, (c * y) % M
    # scalar prefactor: (-zeta^y)^{(c-c^2)/2} and the index-reduction carry
    # (-1)^m zeta^{mcy}, m = floor(cx/M); (c - c^2)/2 is an integer, c odd
    half = (c - c * c) // 2
    carry = (c * x) // M
    scalar = CycloElement.zeta_pow(M, (y * half + carry * c * y) % M)
    if (half + carry) % 2:
        scalar = -scalar
    num = _one_minus(M, x, y, W) ** (c * c)
    den = _one_minus(M, x2, y2, W)
    series = num * den.invert()
    series = series * (_gtilde(M, x, y, W) ** (c * c))
    series = series * _gtilde(M, x2, y2, W).invert()
    series = series.scale(scalar)
    return series.shift(e0)


def theta_qexp(
    ell: int, r: int, N: int, c: int, point: tuple[int, int], trunc: int
) -> PuiseuxSeries:
    """theta_series at level M = ell^r * N, with the gcd(c, 6 ell N) check."""
    if gcd(ell, N) != 1:
        raise ValueError(f"gcd(ell, N) = gcd({ell}, {N}) != 1")
    if gcd(c, 6 * ell * N) != 1 or c <= 1:
        raise ValueError(f"need c > 1 coprime to 6*ell*N = {6 * ell * N}")
    return theta_series(ell ** r * N, c, point, trunc)


def residue_elliptic_soule(
    ell: int, r: int, N: int, c: int, t: tuple[int, int], margin: int = 4
) -> Measure:
    """Residue measure at the cusp, from actual q-expansion valuations.

    For t != (0,0) in (Z/N)^2, the value at x in the rank-1 fiber over t[0] is

        (1/ell^r) * sum over y with (x, y) == t mod N of M * valuation(theta at (x, y)),

    each valuation read off an assembled series (never the closed formula).
    """
    t = (int(t[0]) % N, int(t[1]) % N)
    if t == (0, 0):
        raise ValueError("residue measure needs t != (0, 0)")
    spec = TorsorSpec(ell, r, N, 1, "reduction", (t[0],))
    M = spec.modulus
    q = ell ** r
    values = {}
    for x in torsor_elements(spec):
        acc = Fraction(0)
        for j in range(q):
            y = t[1] + N * j
            e0 = smoothed_b2(M, c, x[0])
            # window just past the expected leading exponent; the valuation
            # is then read from the actual series
            series = theta_series(M, c, (x[0], y), int(e0) + margin)
            acc += M * series.valuation()
        values[x] = acc / q
    return Measure(spec, values)


def norm_check_theta(
    M: int, d: int, c: int, point: tuple[int, int], window: int, margin: int = 3
) -> dict:
    """Check multiplication-by-d norm compatibility of the theta unit.

    The product of the level-dM expansions over the d^2 preimages
    (x + iM, y + jM) of `point` must equal the level-M expansion rescaled to
    q^{1/dM}, coefficient by coefficient, for all exponents below `window`
    (in q^{1/dM} units).  Reports the sound comparison window actually used.
    """
    if gcd(d, c) != 1:
        raise ValueError(f"gcd(d, c) = gcd({d}, {c}) != 1")
    x, y = _check_theta_args(M, c, point)
    if d == 1:
        return {"ok": True, "window": window, "level": M, "mismatches": []}
    base = theta_series(M, c, (x, y), ceil_div(window, d) + margin)
    base_rescaled = base.rescale(d * M)
    # leading exponents of the preimage factors can be negative, so each
    # factor's window is sized so the product window reaches `window`
    lead = {
        (i, j): int(smoothed_b2(d * M, c, (x + i * M) % (d * M)))
        for i in range(d)
        for j in range(d)
    }
    V = sum(lead.values())
    prod = None
    for i in range(d):
        for j in range(d):
            T_ij = window + margin - (V - lead[i, j])
            f = theta_series(d * M, c, (x + i * M, y + j * M), T_ij)
            prod = f if prod is None else prod * f
    W = min(window, base_rescaled.T, prod.T)
    if W < window:
        return {
            "ok": False,
            "window": W,
            "level": d * M,
            "mismatches": ["insufficient truncation"],
        }
    mism = []
    f, g = base_rescaled, prod
    for n in sorted(set(f.terms) | set(g.terms)):
        if n < W and f.coeff(n) != g.coeff(n):
            mism.append(n)
    return {"ok": not mism, "window": W, "level": d * M, "mismatches": mism}


def eta_exponent(ell: int, r: int, N: int, c: int, x1: int) -> int:
    """Exponent (in q^{1/M} units) of the monomial normalizer at a point
    with first coordinate x1: the smoothed-B_2 value itself."""
    v = smoothed_b2(ell ** r * N, c, x1)
    assert v.denominator == 1
    return v.numerator


def eta_qexp(ell: int, r: int, N: int, c: int, x: tuple[int, ...], T: int = 1) -> PuiseuxSeries:
    """The monomial q^{Bp(x)/N} = q^{B(x_1)/M}, Bp = (1/ell^r) * B o pr_1."""
    M = ell ** r * N
    n = eta_exponent(ell, r, N, c, int(x[0]) % M)
    return PuiseuxSeries.monomial(M, n, n + max(T, 1))


def epsilon_series(
    ell: int, r: int, N: int, c: int, point: tuple[int, int], trunc: int
) -> PuiseuxSeries:
    """theta / eta at `point`: the valuation-normalized unit (valuation 0)."""
    M = ell ** r * N
    x, y = int(point[0]) % M, int(point[1]) % M
    n = eta_exponent(ell, r, N, c, x)
    theta = theta_qexp(ell, r, N, c, (x, y), trunc + n)
    return theta.shift(-n)


def cusp_value_closed(M: int, c: int, y: int) -> CycloElement:
    """(-beta)^{(c-c^2)/2} (1-beta)^{c^2} / (1-beta^c) for beta = zeta_M^y.

    This is the constant term of the normalized unit at (0, y): the carry
    vanishes there, leaving the scalar (-beta)^{(c-c^2)/2} on the constant
    terms of the remaining factors.
    """
    y = int(y) % M
    if y == 0:
        raise ValueError("beta = 1 is outside the cusp-value domain")
    beta = CycloElement.zeta_pow(M, y)
    one = CycloElement.rational(M, 1)
    half = (c - c * c) // 2
    return ((-beta) ** half) * ((one - beta) ** (c * c)) * (one - beta ** c).inverse()


def epsilon_cusp_eval(
    ell: int, r: int, N: int, c: int, y: int, trunc: int = 4
) -> CycloElement:
    """Constant term of the normalized unit at (0, y), asserted equal to the
    closed cyclotomic formula; returns the common value."""
    M = ell ** r * N
    eps = epsilon_series(ell, r, N, c, (0, y), trunc)
    if eps.terms and min(eps.terms) < 0:
        raise AssertionError("normalized unit has negative valuation")
    ct = eps.constant_term()
    closed = cusp_value_closed(M, c, y)
    if ct != closed:
        raise AssertionError(
            f"cusp constant term {ct!r} differs from closed form {closed!r}"
        )
    return closed


def cusp_square_check(M: int, c: int, y: int) -> bool:
    """(cusp value)^2 == Xi_c(beta) * Xi_c(beta^{-1}) in Q(zeta_M)."""
    y = int(y) % M
    beta = CycloElement.zeta_pow(M, y)
    beta_inv = CycloElement.zeta_pow(M, (-y) % M)
    v = cusp_value_closed(M, c, y)
    return v * v == _xi_c_at(beta, c) * _xi_c_at(beta_inv, c)


def _xi_c_at(b: CycloElement, c: int) -> CycloElement:
    one = CycloElement.rational(b.M, 1)
    return ((one - b) ** (c * c)) * (one - b ** c).inverse()


# ---------------------------------------------------------------------------
# rational functions in one variable over a cyclotomic field, and the norm
# under the substitution w -> zeta_d^j w
# ---------------------------------------------------------------------------


def _ptrim(p: list[CycloElement]) -> list[CycloElement]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _pmul(a: list[CycloElement], b: list[CycloElement], M: int) -> list[CycloElement]:
    zero = CycloElement.rational(M, 0)
    out = [zero] * (len(a) + len(b) - 1 if a and b else 0)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return _ptrim(out)


class RatFun:
    """A ratio of polynomials in w with coefficients in Q(zeta_D).

    Polynomials are ascending coefficient lists; equality is tested by
    cross-multiplication, so no normal form is needed.
    """

    __slots__ = ("M", "num", "den")

    def __init__(self, M: int, num, den):
        def conv(p):
            out = []
            for c in p:
                if not isinstance(c, CycloElement):
                    c = CycloElement.rational(M, c)
                elif c.M != M:
                    raise ValueError("coefficient conductor mismatch")
                out.append(c)
            return _ptrim(out)

        num, den = conv(list(num)), conv(list(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFun is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFun):
            return NotImplemented
        if self.M != other.M:
            return NotImplemented
        return _pmul(self.num, other.den, self.M) == _pmul(other.num, self.den, self.M)

    def __hash__(self):
        raise TypeError("RatFun is unhashable (no normal form)")

    def __repr__(self):
        return f"RatFun(M={self.M}, num={self.num}, den={self.den})"


def xi() -> RatFun:
    """Xi(w) = 1 - w over Q."""
    return RatFun(1, [1, -1], [1])


def xi_c(c: int) -> RatFun:
    """Xi_c(w) = (1 - w)^{c^2} / (1 - w^c) over Q."""
    one = CycloElement.rational(1, 1)
    lin = [one, -one]
    num = [one]
    for _ in range(c * c):
        num = _pmul(num, lin, 1)
    den = [CycloElement.rational(1, 0)] * (c + 1)
    den[0] = one
    den[c] = -one
    return RatFun(1, num, den)


def _subst_rotate(p: list[CycloElement], j: int, d: int, D: int) -> list[CycloElement]:
    """p(zeta_d^j w) over Q(zeta_D) (d | D): coeff_i *= zeta_d^{ji}."""
    out = []
    for i, c in enumerate(p):
        out.append(c * CycloElement.zeta_pow(D, (j * i * (D // d)) % D))
    return _ptrim(out)


def norm_under_power(f: RatFun, d: int) -> RatFun:
    """prod_{j=0}^{d-1} f(zeta_d^j w), re-expressed in z = w^d over Q.

    Requires f to have rational coefficients and nonzero constant terms; the
    product must only involve exponents divisible by d with rational
    coefficients (checked), else the input was not norm-equivariant.
    """
    if f.num[0].is_zero() or f.den[0].is_zero():
        raise ValueError("nonzero constant terms are required")
    D = d
    num = [c.rational_value() for c in f.num]
    den = [c.rational_value() for c in f.den]

    def to_big(p):
        return [CycloElement.rational(D, c) for c in p]

    big_num = [CycloElement.rational(D, 1)]
    big_den = [CycloElement.rational(D, 1)]
    for j in range(d):
        big_num = _pmul(big_num, _subst_rotate(to_big(num), j, d, D), D)
        big_den = _pmul(big_den, _subst_rotate(to_big(den), j, d, D), D)

    def collapse(p):
        out = []
        for i, c in enumerate(p):
            if i % d == 0:
                if not c.is_rational():
                    raise ValueError("norm product has irrational coefficients")
                out.append(CycloElement.rational(1, c.rational_value()))
            elif not c.is_zero():
                raise ValueError(
                    f"norm product has exponent {i} not divisible by {d}"
                )
        return out

    return RatFun(1, collapse(big_num), collapse(big_den))

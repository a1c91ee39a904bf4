"""Acceptance suite: eight exact-equality criteria, one test line each.

Every check here is an exact identity over Q or Q(zeta_M) — no tolerances
anywhere.  Each criterion also carries a wall-clock budget; the budgets are
generous on purpose (the whole file runs in a few seconds) and exist to keep
the suite at desk scale.
"""

import time
from fractions import Fraction
from math import gcd

from ellsoule.bernoulli import bernoulli_measure, bernoulli_moment_closed
from ellsoule.formal import (
    eis_residue_closed,
    residue,
    residue_soule_closed,
    soule_elliptic,
)
from ellsoule.measures import integrate
from ellsoule.moments import moment_torsor
from ellsoule.numutil import mod_inverse_reduce
from ellsoule.units import (
    cusp_square_check,
    cusp_value_closed,
    epsilon_cusp_eval,
    norm_check_theta,
    residue_elliptic_soule,
)
from ellsoule.verify import suite_dir, suite_moments, suite_tsym


class _Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc == (None, None, None):
            assert self.elapsed < self.seconds, (
                f"ran {self.elapsed:.2f}s, budget {self.seconds}s"
            )


def test_criterion_1_bernoulli_moment_congruence():
    # torsor moments of the smoothed quadratic measure match the closed
    # Bernoulli expression mod ell^r on the full desk grid; exact spot at
    # (ell=5, r=1, N=3, c=7, t=1, k=1): -181 = 4 = 38/7 mod 5
    with _Budget(10):
        for ell in (2, 3, 5):
            for r in (1, 2, 3):
                q = ell**r
                for N in (3, 4):
                    if gcd(ell, N) != 1:
                        continue
                    for c in (5, 7, 11):
                        if gcd(c, 6 * ell * N) != 1:
                            continue
                        for t in range(N):
                            mu = bernoulli_measure(ell, r, N, c, t)
                            for k in range(5):
                                mom = moment_torsor(mu, k).coeff((k,))
                                closed = bernoulli_moment_closed(k, N, c, t)
                                assert (
                                    mod_inverse_reduce(mom - closed, q, ell) == 0
                                ), (ell, r, N, c, t, k)
        mu = bernoulli_measure(5, 1, 3, 7, 1)
        raw = integrate(mu, lambda x: Fraction(x))
        assert raw == -181
        assert mod_inverse_reduce(raw, 5, 5) == 4
        assert mod_inverse_reduce(Fraction(38, 7), 5, 5) == 4
        assert bernoulli_moment_closed(1, 3, 7, 1) == Fraction(38, 7)


def test_criterion_2_residue_measure_equality():
    # the measure read off q-expansion valuations equals the Bernoulli
    # measure exactly, fiber by fiber
    with _Budget(60):
        for ell, r, N, c in ((2, 1, 3, 5), (2, 2, 3, 5), (3, 1, 4, 5)):
            for t1 in range(N):
                for t2 in range(N):
                    if (t1, t2) == (0, 0):
                        continue
                    got = residue_elliptic_soule(ell, r, N, c, (t1, t2))
                    want = bernoulli_measure(ell, r, N, c, t1)
                    assert got == want, (ell, r, N, c, t1, t2)


def test_criterion_3_norm_compatibility():
    # product over the four doubling preimages equals the rescaled base
    # series coefficient-by-coefficient in Q(zeta_12), 24 units of q^{1/12}
    with _Budget(60):
        for point in ((1, 1), (1, 0), (0, 1)):
            rep = norm_check_theta(6, 2, 5, point, 24)
            assert rep["ok"], (point, rep["mismatches"])
            assert rep["window"] == 24


def test_criterion_4_cusp_evaluation():
    # constant term at every point over the cusp equals the closed
    # cyclotomic value, and its square factors through the smoothed Xi
    with _Budget(10):
        for r in (1, 2):
            M = 2**r * 3
            for y in range(1, M):
                got = epsilon_cusp_eval(2, r, 3, 5, y)
                assert got == cusp_value_closed(M, 5, y), (r, y)
                assert cusp_square_check(M, 5, y), (r, y)


def test_criterion_5_two_route_boundary_agreement():
    # 50 seeded residue-zero weight functions per (N, k), two smoothing
    # factors each: the closed boundary formula agrees with the
    # smoothed-unit route symbol by symbol
    with _Budget(5):
        rep = suite_dir(count=50, seed=0, kmax=5)
        assert rep["all_pass"], [
            row["case"] for row in rep["cases"] if not row["pass"]
        ]
        two_route = [r for r in rep["cases"] if r["case"].startswith("two_route")]
        assert len(two_route) == 3 * 5 * 2  # (N, k) grid, two factors each


def test_criterion_6_closed_residue_consistency():
    # the closed residue of a smoothed class equals the residue of its
    # expansion, identically over the grid; frozen spot at weight 2
    with _Budget(1):
        for N in (2, 3, 4, 5):
            for k in range(1, 7):
                for c in (5, 7, 11, 13):
                    if gcd(c, N) != 1:
                        continue
                    for a in range(N):
                        for b in range(N):
                            if (a, b) == (0, 0):
                                continue
                            lhs = residue(soule_elliptic(k, N, c, (a, b)))
                            rhs = residue_soule_closed(k, N, c, (a, b))
                            assert lhs == rhs, (k, N, c, a, b)
        assert eis_residue_closed(2, 3, (1, 0)) == Fraction(-13, 720)


def test_criterion_7_moment_map_laws():
    # Dirac, convolution, negation, projection, tower, redeclaration and
    # weighted-moment laws over >= 100 seeded randomized cases
    with _Budget(10):
        rep = suite_moments(seed=0, kmax=4)
        assert rep["summary"]["total"] >= 100
        assert rep["all_pass"], [
            row["case"] for row in rep["cases"] if not row["pass"]
        ]


def test_criterion_8_divided_power_laws():
    # addition law, binomial product law, base-change commutation and the
    # rank-2 dimension count, degrees up to six
    with _Budget(5):
        rep = suite_tsym(kmax=6, seed=0)
        assert rep["all_pass"], [
            row["case"] for row in rep["cases"] if not row["pass"]
        ]

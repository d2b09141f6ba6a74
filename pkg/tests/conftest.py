"""Shared helpers for the test suite.

Randomized drivers are seeded; set PONCELET_SEED to re-run them with a
different seed.
"""

import os
import random
from fractions import Fraction

from poncelet.polycore import (
    UniPolyR,
    sign_variations,
    squarefree_decomposition,
    sturm_chain,
)

DEFAULT_SEED = 20260826


def make_rng(salt: int = 0) -> random.Random:
    seed = int(os.environ.get("PONCELET_SEED", str(DEFAULT_SEED)))
    return random.Random(seed + salt)


def rand_fraction(rng: random.Random, num: int = 12, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_center_off_sigma(rng: random.Random) -> tuple[Fraction, Fraction]:
    """A random rational center avoiding the unit circle and the origin."""
    while True:
        x = rand_fraction(rng)
        y = rand_fraction(rng)
        r2 = x * x + y * y
        if r2 != 0 and r2 != 1:
            return x, y


def cauchy_bound(g: UniPolyR) -> Fraction:
    lead = g.coeffs[-1]
    return 1 + max(abs(c / lead) for c in g.coeffs)


def real_root_profile(f: UniPolyR) -> list[int]:
    """Sorted multiplicities of the real roots of f, via square-free
    factors and Sturm counting only (no refinement)."""
    profile = []
    for g, mult in squarefree_decomposition(f):
        chain = sturm_chain(g)
        b = cauchy_bound(g)
        count = sign_variations(chain, -b) - sign_variations(chain, b)
        profile.extend([mult] * count)
    return sorted(profile)


def rand_quartic(rng: random.Random) -> UniPolyR:
    """A random rational quartic; 40% of the time built from an explicit
    root structure so multiple roots actually occur."""
    if rng.random() < 0.6:
        coeffs = [rand_fraction(rng, 9, 5) for _ in range(4)]
        lead = Fraction(0)
        while lead == 0:
            lead = rand_fraction(rng, 9, 5)
        return UniPolyR(coeffs + [lead])
    f = UniPolyR([rng.choice([1, 2, -1, 3])])
    deg = 0
    while deg < 4:
        if deg <= 2 and rng.random() < 0.4:
            b = rand_fraction(rng, 4, 2)
            c = rand_fraction(rng, 4, 2)
            f = f * UniPolyR([c, b, 1])  # real or complex pair
            deg += 2
        else:
            r = rand_fraction(rng, 4, 3)
            mult = min(rng.choice([1, 1, 2, 2, 3]), 4 - deg)
            f = f * UniPolyR([-r, 1]) ** mult
            deg += mult
    return f


def series_sqrt(d: list[complex], order: int) -> list[complex]:
    """Taylor coefficients of sqrt(d0 + d1 t + d2 t^2 + ...) up to the given
    order, by coefficient convolution (independent of the exact recursion)."""
    import cmath

    s = [cmath.sqrt(d[0])]
    for k in range(1, order + 1):
        acc = sum(s[i] * s[k - i] for i in range(1, k))
        dk = d[k] if k < len(d) else 0.0
        s.append((dk - acc) / (2 * s[0]))
    return s


# Acceptance-criterion pass/fail lines collected by tests/test_acceptance.py.
# Echoed in the terminal summary so they are visible even with output capture.
ACCEPTANCE_REPORT: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)

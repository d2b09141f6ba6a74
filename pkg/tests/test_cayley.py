"""Pencil coefficients, the series recursion, Hankel determinants, and
canonical locus polynomials."""

from fractions import Fraction

import pytest

from conftest import make_rng, series_sqrt
from poncelet.cayley import (
    DegenerateParabola,
    atilde_sequence,
    hankel_raw,
    locus,
    locus_at_p,
    pencil_coeffs,
    proper_divisors,
)
from poncelet.polycore import LaurentPoly3, canonicalize, poly_div_exact
from poncelet.verify import paper_locus

P = LaurentPoly3.var_p()
X = LaurentPoly3.var_x()
Y = LaurentPoly3.var_y()


def test_pencil_coefficients():
    pc = pencil_coeffs()
    assert pc.delta1 == LaurentPoly3.const(-1)
    assert pc.delta2 == -(P**2)
    assert pc.theta2 == -2 * P**2 - 2 * P * X
    assert pc.theta1 == -(P**2) - 2 * P * X + Y**2 - 1


def test_pencil_coefficients_at_point():
    pc = pencil_coeffs()
    vals = tuple(
        c.evaluate(Fraction(1, 2), Fraction(1), Fraction(0))
        for c in (pc.delta1, pc.theta1, pc.theta2, pc.delta2)
    )
    assert vals == (-1, Fraction(-9, 4), Fraction(-3, 2), Fraction(-1, 4))


def test_first_three_entries():
    seq = atilde_sequence(3)
    assert seq[1] == -(P**2) - P * X
    assert seq[2] == X**2 + Y**2 - 1
    # entry 3 is genuinely Laurent in p
    pinv = LaurentPoly3.var_p(-1)
    q4 = (X**2 + Y**2) * P + X * (X**2 + Y**2 - 1)
    assert seq[3] == -3 * pinv * q4
    assert seq[3].min_p_exponent() == -1


def test_entry_recursion_start_values():
    pc = pencil_coeffs()
    seq = atilde_sequence(3)
    assert seq[2] == pc.theta1 - poly_div_exact(seq[1] * seq[1], pc.delta2)
    assert seq[3] == 3 * pc.delta1 - 3 * poly_div_exact(seq[1] * seq[2], pc.delta2)


def test_entry_symmetries():
    # entries are even in y and invariant under (p,x) -> (-p,-x)
    for k in range(1, 9):
        a = atilde_sequence(k)[k]
        flip_y = LaurentPoly3(
            {(ep, ex, ey): (-c if ey % 2 else c) for (ep, ex, ey), c in a.terms.items()}
        )
        flip_px = LaurentPoly3(
            {(ep, ex, ey): (-c if (ep + ex) % 2 else c) for (ep, ex, ey), c in a.terms.items()}
        )
        assert flip_y == a
        assert flip_px == a


GOLDEN = {
    3: "x^2 + y^2 - 1",
    4: "p*x^2 + p*y^2 + x^3 + x*y^2 - x",
}


def test_golden_loci_match_reference():
    for n in range(3, 8):
        assert locus(n).canonical == paper_locus(n)


def test_locus_text_small_cases():
    from poncelet.polycore import format_poly, parse_poly

    for n, text in GOLDEN.items():
        assert locus(n).canonical == parse_poly(text)


def test_raw_hankel_scalar_normalizations():
    # the raw determinants equal the canonical loci up to an explicit
    # monomial scalar (and the divisor factor for n=6)
    assert 2 * hankel_raw(3) == paper_locus(3)
    assert -2 * P * hankel_raw(4) == paper_locus(4)
    assert -16 * P**2 * hankel_raw(5) == paper_locus(5)
    assert 64 * P**4 * hankel_raw(6) == paper_locus(3) * paper_locus(6)
    assert -512 * P**6 * hankel_raw(7) == paper_locus(7)


def test_divisibility_structure():
    for n, k in ((6, 3), (8, 4), (9, 3)):
        q = poly_div_exact(hankel_raw(n), hankel_raw(k))
        assert not q.is_zero()
    # quotient of the 6-gon determinant by the triangle factor is the
    # hexagon locus
    assert canonicalize(poly_div_exact(hankel_raw(6), hankel_raw(3))) == paper_locus(6)


def test_divisors_removed_bookkeeping():
    assert proper_divisors(12) == [3, 4, 6]
    assert locus(12).divisors_removed == (3, 4, 6)
    assert locus(7).divisors_removed == ()
    for n in range(8, 13):
        can = locus(n).canonical
        assert can.min_p_exponent() == 0
        _, lead = can.leading_term()
        assert lead > 0


def test_locus_bounds():
    with pytest.raises(ValueError):
        locus(2)
    with pytest.raises(ValueError):
        locus(13)


def test_locus_at_p():
    assert locus_at_p(3, Fraction(1, 2)) == X**2 + Y**2 - 1
    assert locus_at_p(3, Fraction(7)) == X**2 + Y**2 - 1
    q = locus_at_p(4, Fraction(1, 2))
    expected = canonicalize(X**2 + Y**2 + 2 * X * (X**2 + Y**2 - 1))
    assert q == expected
    with pytest.raises(DegenerateParabola):
        locus_at_p(3, Fraction(0))


def test_numeric_evaluation_consistency():
    """The exact Hankel determinants agree with determinants of numerically
    computed sqrt-series coefficients (convolution route), up to the scalar
    power of the leading coefficient."""
    import cmath

    pc = pencil_coeffs()
    rng = make_rng(10)
    h5, h7, h6 = hankel_raw(5), hankel_raw(7), hankel_raw(6)
    for _ in range(100):
        p = Fraction(rng.randint(1, 40), rng.randint(1, 20)) * rng.choice([1, -1])
        x = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        y = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        d = [
            complex(c.evaluate(p, x, y))
            for c in (pc.delta2, pc.theta2, pc.theta1, pc.delta1)
        ]
        s = series_sqrt(d, 6)
        a0 = cmath.sqrt(complex(d[0]))
        px, xx, yx = float(p), float(x), float(y)

        det5 = s[2] * s[4] - s[3] ** 2
        ref5 = h5.evaluate(px, xx, yx) / a0**2
        assert abs(det5 - ref5) <= 1e-9 * max(1.0, abs(ref5))

        det6 = s[3] * s[5] - s[4] ** 2
        ref6 = h6.evaluate(px, xx, yx) / a0**2
        assert abs(det6 - ref6) <= 1e-9 * max(1.0, abs(ref6))

        det7 = (
            s[2] * (s[4] * s[6] - s[5] ** 2)
            - s[3] * (s[3] * s[6] - s[4] * s[5])
            + s[4] * (s[3] * s[5] - s[4] ** 2)
        )
        ref7 = h7.evaluate(px, xx, yx) / a0**3
        assert abs(det7 - ref7) <= 1e-9 * max(1.0, abs(ref7))

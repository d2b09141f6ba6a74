"""Exact polynomial arithmetic, division, canonical form, Sturm isolation,
and discriminants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_rng, rand_fraction
from poncelet.polycore import (
    LaurentPoly3,
    NotDivisible,
    UniPolyR,
    UnsupportedDegree,
    ZeroPolynomial,
    canonicalize,
    discriminant,
    format_poly,
    parse_poly,
    poly_div_exact,
    poly_gcd,
    resultant,
    sign_variations,
    specialize,
    squarefree_decomposition,
    sturm_chain,
    sturm_real_roots,
)

P = LaurentPoly3.var_p()
X = LaurentPoly3.var_x()
Y = LaurentPoly3.var_y()


# -- arithmetic and exact division -------------------------------------------


def test_basic_arithmetic():
    a = P**2 - 2 * X * Y + 3
    b = P**2 + 1
    assert a + b == 2 * P**2 - 2 * X * Y + 4
    assert a - a == LaurentPoly3()
    assert (P + X) * (P - X) == P**2 - X**2
    assert (P + 1) ** 3 == P**3 + 3 * P**2 + 3 * P + 1


def test_laurent_exponents():
    a = LaurentPoly3.var_p(-2) * X
    assert a.evaluate(Fraction(1, 2), 3, 0) == 12
    assert a.min_p_exponent() == -2


def test_div_exact_roundtrip():
    a = 2 * P**2 * X - Y**3 + 5
    b = LaurentPoly3.var_p(-1) * 3 + X * Y
    assert poly_div_exact(a * b, b) == a


def test_div_exact_rejects_non_divisor():
    with pytest.raises(NotDivisible):
        poly_div_exact(P**2 + 1, P + 1)


def test_canonicalize_clears_p_and_sign():
    a = LaurentPoly3.var_p(-3) * Fraction(-2, 3) * X - LaurentPoly3.var_p(-2)
    c = canonicalize(a)
    assert c.min_p_exponent() == 0
    _, lead = c.leading_term()
    assert lead > 0
    # primitive integer coefficients
    for coeff in c.terms.values():
        assert coeff.denominator == 1


def _rand_poly(rng, nterms=4):
    a = LaurentPoly3()
    for _ in range(nterms):
        a = a + LaurentPoly3.monomial(
            rand_fraction(rng, 6, 4),
            rng.randint(-2, 3),
            rng.randint(0, 3),
            rng.randint(0, 3),
        )
    return a


def test_canonicalize_multiplicative():
    rng = make_rng(1)
    for _ in range(150):
        a, b = _rand_poly(rng), _rand_poly(rng)
        if a.is_zero() or b.is_zero():
            continue
        assert canonicalize(a * b) == canonicalize(canonicalize(a) * canonicalize(b))


def test_div_exact_property():
    rng = make_rng(2)
    for _ in range(150):
        a, b = _rand_poly(rng), _rand_poly(rng)
        if b.is_zero():
            continue
        assert poly_div_exact(a * b, b) == a


# -- text round trip ----------------------------------------------------------


def test_format_parse_examples():
    q3 = X**2 + Y**2 - 1
    assert format_poly(q3) == "x^2 + y^2 - 1"
    assert parse_poly(format_poly(q3)) == q3


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.integers(-3, 3),
            st.integers(0, 4),
            st.integers(0, 4),
            st.fractions(min_value=-9, max_value=9, max_denominator=8),
        ),
        min_size=1,
        max_size=6,
    )
)
def test_format_parse_roundtrip(term_data):
    a = LaurentPoly3()
    for ep, ex, ey, c in term_data:
        a = a + LaurentPoly3.monomial(c, ep, ex, ey)
    assert parse_poly(format_poly(a)) == a


# -- specialization -----------------------------------------------------------


def test_specialize():
    a = P**2 * X + P * Y - 1
    f = specialize(a, Fraction(2), Fraction(3))
    assert f == UniPolyR([Fraction(-1), Fraction(3), Fraction(2)])


# -- Sturm isolation -----------------------------------------------------------


def test_sturm_simple_quartic():
    # (p^2-1)(p^2-4): roots -2,-1,1,2
    f = UniPolyR([4, 0, -5, 0, 1])
    roots = sturm_real_roots(f)
    assert [m for _, m, _ in roots] == [1, 1, 1, 1]
    vals = roots.values()
    assert vals == pytest.approx([-2.0, -1.0, 1.0, 2.0], abs=1e-11)


def test_sturm_double_root():
    # 2p^2 - p + 1/8 = 2(p - 1/4)^2
    f = UniPolyR([Fraction(1, 8), -1, 2])
    roots = sturm_real_roots(f)
    assert len(roots) == 1
    val, mult, (lo, hi) = next(iter(roots))
    assert mult == 2
    assert val == pytest.approx(0.25, abs=1e-12)
    assert hi - lo <= Fraction(1, 10**12)


def test_sturm_exclude_zero():
    f = UniPolyR([0, 0, -1, 0, 1])  # p^2(p-1)(p+1)
    roots = sturm_real_roots(f, exclude_zero=True)
    assert roots.values() == pytest.approx([-1.0, 1.0], abs=1e-11)


def test_sturm_isolating_intervals_bracket_sign_change():
    rng = make_rng(3)
    for _ in range(60):
        coeffs = [rand_fraction(rng, 8, 4) for _ in range(rng.randint(2, 5))]
        coeffs.append(Fraction(rng.choice([1, 2, -1])))
        f = UniPolyR(coeffs)
        sf = squarefree_decomposition(f)
        for val, mult, (lo, hi) in sturm_real_roots(f):
            # after square-free reduction the factor changes sign across
            # the isolating interval
            g = next(g for g, m in sf if m == mult and g(lo) * g(hi) <= 0)
            assert g(lo) * g(hi) <= 0


def test_sturm_count_matches_variations():
    rng = make_rng(4)
    for _ in range(60):
        coeffs = [rand_fraction(rng, 8, 4) for _ in range(rng.randint(2, 5))]
        coeffs.append(Fraction(1))
        f = UniPolyR(coeffs)
        if any(m > 1 for _, m in squarefree_decomposition(f)):
            continue  # Sturm counting assumes a square-free input
        chain = sturm_chain(f)
        b = 1 + max(abs(c) for c in f.coeffs)
        count = sign_variations(chain, -b) - sign_variations(chain, b)
        assert count == len(sturm_real_roots(f))


def test_squarefree_structure():
    # p^3 (p-1)^2 (p+2)
    f = UniPolyR([0, 0, 0, 1]) * UniPolyR([1, -2, 1]) * UniPolyR([2, 1])
    sf = squarefree_decomposition(f)
    by_mult = {m: g for g, m in sf}
    assert by_mult[3] == UniPolyR([0, 1])
    assert by_mult[2] == UniPolyR([-1, 1])
    assert by_mult[1] == UniPolyR([2, 1])


def test_poly_gcd():
    a = UniPolyR([-1, 0, 1]) * UniPolyR([3, 1])
    b = UniPolyR([-1, 1]) * UniPolyR([5, 1])
    assert poly_gcd(a, b) == UniPolyR([-1, 1])


# -- discriminants -------------------------------------------------------------


def test_discriminant_examples():
    assert discriminant(UniPolyR([4, 0, -5, 0, 1])) == 5184
    assert discriminant(UniPolyR([0, -1, 1])) == 1
    assert discriminant(UniPolyR([1, 0, 0, 1])) == -27


def test_discriminant_rejects_wrong_degree():
    with pytest.raises(UnsupportedDegree):
        discriminant(UniPolyR([1, 1]))
    with pytest.raises(UnsupportedDegree):
        discriminant(UniPolyR([1, 0, 0, 0, 0, 1]))


def test_resultant_of_coprime_and_shared_root():
    f = UniPolyR([-1, 0, 1])
    g = UniPolyR([-1, 1])
    assert resultant(f, g) == 0
    h = UniPolyR([2, 1])
    assert resultant(g, h) == 3


def test_quartic_disc_double_route_agreement():
    # discriminant() itself computes the closed formula and the
    # resultant-based value and raises on mismatch; drive it over many
    # random quartics.
    rng = make_rng(5)
    for _ in range(1000):
        coeffs = [rand_fraction(rng, 9, 5) for _ in range(4)]
        lead = Fraction(0)
        while lead == 0:
            lead = rand_fraction(rng, 9, 5)
        f = UniPolyR(coeffs + [lead])
        d = discriminant(f)
        # sanity: a detected double root forces discriminant 0
        if any(m > 1 for _, m in squarefree_decomposition(f)):
            assert d == 0


def test_zero_polynomial_guards():
    with pytest.raises(ZeroPolynomial):
        sturm_real_roots(UniPolyR([]))
    with pytest.raises(ZeroPolynomial):
        UniPolyR([]).degree()

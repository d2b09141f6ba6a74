"""Exact arithmetic kernel: trivariate Laurent polynomials, univariate
polynomials over Q, Sturm-based real root isolation, discriminants.

Coefficients are `fractions.Fraction` throughout.  Polynomials in the three
variables (p, x, y) allow negative exponents in p only; x and y exponents
are always nonnegative.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]
Expo = tuple[int, int, int]  # (e_p, e_x, e_y)

# Interval width for reported roots.  Tighter than the 1e-9 tolerance of the
# numeric closure oracle by a wide margin: near-degenerate parabolas amplify
# root error by ~1e4 in the traced closure residual.
ROOT_WIDTH = Fraction(1, 10**15)


class PolycoreError(Exception):
    pass


class NotDivisible(PolycoreError):
    pass


class ZeroPolynomial(PolycoreError):
    pass


class NegativePExponent(PolycoreError):
    pass


class UnsupportedDegree(PolycoreError):
    pass


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected int or Fraction, got {type(c).__name__}")


class LaurentPoly3:
    """Polynomial in (p, x, y) over Q, Laurent in p.

    Stored sparsely as {(e_p, e_x, e_y): coefficient} with no zero
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Expo, Scalar] | None = None):
        clean: dict[Expo, Fraction] = {}
        if terms:
            for (ep, ex, ey), c in terms.items():
                if ex < 0 or ey < 0:
                    raise ValueError("x and y exponents must be nonnegative")
                c = _as_fraction(c)
                if c:
                    clean[(int(ep), int(ex), int(ey))] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c: Scalar) -> "LaurentPoly3":
        return LaurentPoly3({(0, 0, 0): c})

    @staticmethod
    def monomial(c: Scalar, ep: int = 0, ex: int = 0, ey: int = 0) -> "LaurentPoly3":
        return LaurentPoly3({(ep, ex, ey): c})

    @staticmethod
    def var_p(power: int = 1) -> "LaurentPoly3":
        return LaurentPoly3({(power, 0, 0): 1})

    @staticmethod
    def var_x() -> "LaurentPoly3":
        return LaurentPoly3({(0, 1, 0): 1})

    @staticmethod
    def var_y() -> "LaurentPoly3":
        return LaurentPoly3({(0, 0, 1): 1})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def min_p_exponent(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no p-degree")
        return min(e[0] for e in self.terms)

    def leading_term(self) -> tuple[Expo, Fraction]:
        """Leading term in lexicographic order p > x > y."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly3.const(other)
        if not isinstance(other, LaurentPoly3):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "LaurentPoly3":
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly3":
        return _raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly3":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "LaurentPoly3":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly3":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return LaurentPoly3()
            return _raw({e: k * c for e, k in self.terms.items()})
        if not isinstance(other, LaurentPoly3):
            return NotImplemented
        out: dict[Expo, Fraction] = {}
        for (a1, a2, a3), ca in self.terms.items():
            for (b1, b2, b3), cb in other.terms.items():
                e = (a1 + b1, a2 + b2, a3 + b3)
                s = out.get(e, _ZERO) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly3":
        if n < 0:
            raise ValueError("negative powers not supported; divide explicitly")
        result = LaurentPoly3.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation --------------------------------------------------------

    def evaluate(self, p, x, y):
        """Numeric or exact evaluation; works for Fraction, float, complex."""
        exact = all(isinstance(v, (int, Fraction)) for v in (p, x, y))
        total = Fraction(0) if exact else 0.0
        for (ep, ex, ey), c in self.terms.items():
            coeff = c if exact else float(c)
            total = total + coeff * p**ep * x**ex * y**ey
        return total

    def substitute_p(self, p: Fraction) -> "LaurentPoly3":
        """Exact substitution of a rational p, leaving a polynomial in x, y."""
        if p == 0:
            raise ZeroPolynomial("p = 0 is a degenerate parabola")
        out: dict[Expo, Fraction] = {}
        for (ep, ex, ey), c in self.terms.items():
            e = (0, ex, ey)
            s = out.get(e, _ZERO) + c * Fraction(p) ** ep
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(out)

    def __repr__(self) -> str:
        return f"LaurentPoly3({format_poly(self)!r})"


_ZERO = Fraction(0)


def _raw(terms: dict[Expo, Fraction]) -> LaurentPoly3:
    p = LaurentPoly3.__new__(LaurentPoly3)
    p.terms = terms
    return p


def _coerce(v) -> LaurentPoly3:
    if isinstance(v, LaurentPoly3):
        return v
    if isinstance(v, (int, Fraction)):
        return LaurentPoly3.const(v)
    raise TypeError(f"cannot coerce {type(v).__name__} to LaurentPoly3")


def poly_arith(a: LaurentPoly3, b: LaurentPoly3, op: str) -> LaurentPoly3:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_div_exact(a: LaurentPoly3, b: LaurentPoly3) -> LaurentPoly3:
    """Exact quotient a / b; raises NotDivisible when the remainder is nonzero.

    Division by pure p-powers always succeeds (p is invertible).
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return LaurentPoly3()
    sa, sb = a.min_p_exponent(), b.min_p_exponent()
    ra = _raw({(ep - sa, ex, ey): c for (ep, ex, ey), c in a.terms.items()})
    rb = _raw({(ep - sb, ex, ey): c for (ep, ex, ey), c in b.terms.items()})
    (le, lc) = rb.leading_term()
    quotient: dict[Expo, Fraction] = {}
    rem = ra
    while rem.terms:
        (re, rc) = rem.leading_term()
        qe = (re[0] - le[0], re[1] - le[1], re[2] - le[2])
        if qe[1] < 0 or qe[2] < 0 or qe[0] < 0:
            raise NotDivisible(f"{format_poly(a)} is not divisible by {format_poly(b)}")
        qc = rc / lc
        quotient[qe] = qc
        rem = rem - _raw({qe: qc}) * rb
    shift = sa - sb
    return _raw({(ep + shift, ex, ey): c for (ep, ex, ey), c in quotient.items()})


def poly_det(m: Sequence[Sequence[LaurentPoly3]]) -> LaurentPoly3:
    """Exact determinant: cofactor expansion up to 4x4, Bareiss above."""
    k = len(m)
    for row in m:
        if len(row) != k:
            raise ValueError("matrix must be square")
    if k <= 4:
        return _det_cofactor([list(r) for r in m])
    return _det_bareiss([list(r) for r in m])


def _det_cofactor(m: list[list[LaurentPoly3]]) -> LaurentPoly3:
    k = len(m)
    if k == 1:
        return m[0][0]
    if k == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = LaurentPoly3()
    sign = 1
    for j in range(k):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det_cofactor(minor)
        total = total + term if sign > 0 else total - term
        sign = -sign
    return total


def _det_bareiss(m: list[list[LaurentPoly3]]) -> LaurentPoly3:
    # Fraction-free elimination; every interior division is exact.
    k = len(m)
    m = [[_coerce(v) for v in row] for row in m]
    sign = 1
    prev = LaurentPoly3.const(1)
    for i in range(k - 1):
        if m[i][i].is_zero():
            for r in range(i + 1, k):
                if not m[r][i].is_zero():
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return LaurentPoly3()
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                num = m[i][i] * m[r][c] - m[r][i] * m[i][c]
                m[r][c] = poly_div_exact(num, prev)
            m[r][i] = LaurentPoly3()
        prev = m[i][i]
    det = m[k - 1][k - 1]
    return det if sign > 0 else -det


def canonicalize(a: LaurentPoly3) -> LaurentPoly3:
    """Unique scalar * p-power normal form.

    The result is a true polynomial in (p, x, y) whose lowest p-degree is
    zero, with integer coefficients of content 1 and a positive leading
    coefficient in lex order p > x > y.
    """
    if a.is_zero():
        raise ZeroPolynomial("cannot canonicalize the zero polynomial")
    shift = -a.min_p_exponent()
    terms = {(ep + shift, ex, ey): c for (ep, ex, ey), c in a.terms.items()}
    denom_lcm = 1
    num_gcd = 0
    for c in terms.values():
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
        num_gcd = math.gcd(num_gcd, abs(c.numerator))
    scale = Fraction(denom_lcm, num_gcd)
    lead = terms[max(terms)]
    if lead < 0:
        scale = -scale
    return _raw({e: c * scale for e, c in terms.items()})


def specialize(a: LaurentPoly3, x: Scalar, y: Scalar) -> "UniPolyR":
    """Substitute a rational center (x, y), leaving a polynomial in p."""
    x = _as_fraction(x)
    y = _as_fraction(y)
    coeffs: dict[int, Fraction] = {}
    for (ep, ex, ey), c in a.terms.items():
        if ep < 0:
            raise NegativePExponent("canonicalize before specializing")
        coeffs[ep] = coeffs.get(ep, _ZERO) + c * x**ex * y**ey
    if not coeffs:
        return UniPolyR([])
    deg = max(coeffs)
    return UniPolyR([coeffs.get(i, _ZERO) for i in range(deg + 1)])


# -- text form -------------------------------------------------------------


def format_poly(a: LaurentPoly3) -> str:
    """Canonical text form: terms sorted lex p > x > y descending."""
    if a.is_zero():
        return "0"
    parts = []
    for e in sorted(a.terms, reverse=True):
        c = a.terms[e]
        factors = []
        for name, expo in zip(("p", "x", "y"), e):
            if expo == 1:
                factors.append(name)
            elif expo != 0:
                factors.append(f"{name}^{expo}")
        mag = abs(c)
        if not factors:
            body = _fmt_frac(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_fmt_frac(mag)] + factors)
        parts.append(("-" if c < 0 else "+", body))
    sign0, body0 = parts[0]
    out = body0 if sign0 == "+" else "-" + body0
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_poly(text: str) -> LaurentPoly3:
    """Inverse of format_poly (accepts any ordering of the same term syntax)."""
    text = text.strip()
    if text in ("0", "-0", "+0"):
        return LaurentPoly3()
    tokens = text.replace("-", " - ").replace("+", " + ").split()
    # Re-join "-" that belongs to exponents such as p^-2.
    merged: list[str] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok in "+-" and merged and merged[-1].endswith("^"):
            merged[-1] += tok + tokens[i + 1]
            i += 2
        else:
            merged.append(tok)
            i += 1
    terms: dict[Expo, Fraction] = {}
    sign = 1
    for tok in merged:
        if tok == "+":
            sign = 1
            continue
        if tok == "-":
            sign = -1
            continue
        coeff = Fraction(1)
        expo = [0, 0, 0]
        for factor in tok.split("*"):
            if factor and factor[0] in "pxy":
                idx = "pxy".index(factor[0])
                expo[idx] += int(factor[2:]) if "^" in factor else 1
            else:
                coeff *= Fraction(factor)
        e = (expo[0], expo[1], expo[2])
        c = terms.get(e, _ZERO) + sign * coeff
        if c:
            terms[e] = c
        else:
            terms.pop(e, None)
        sign = 1
    return _raw(terms)


# -- univariate polynomials over Q ------------------------------------------


class UniPolyR:
    """Dense univariate polynomial over Q; index = degree in p."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no degree")
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPolyR):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __call__(self, v):
        total = 0 if isinstance(v, (int, Fraction)) else type(v)(0)
        for c in reversed(self.coeffs):
            total = total * v + (c if isinstance(v, (int, Fraction)) else float(c))
        return total

    def __add__(self, other: "UniPolyR") -> "UniPolyR":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [_ZERO] * (n - len(self.coeffs))
        b = other.coeffs + [_ZERO] * (n - len(other.coeffs))
        return UniPolyR([x + y for x, y in zip(a, b)])

    def __sub__(self, other: "UniPolyR") -> "UniPolyR":
        return self + other.scale(-1)

    def __mul__(self, other: "UniPolyR") -> "UniPolyR":
        if self.is_zero() or other.is_zero():
            return UniPolyR([])
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPolyR(out)

    def __pow__(self, n: int) -> "UniPolyR":
        if n < 0:
            raise ValueError("negative power")
        out = UniPolyR([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: Scalar) -> "UniPolyR":
        c = _as_fraction(c)
        return UniPolyR([a * c for a in self.coeffs])

    def derivative(self) -> "UniPolyR":
        return UniPolyR([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPolyR":
        if self.is_zero():
            return self
        return self.scale(1 / self.coeffs[-1])

    def divmod(self, other: "UniPolyR") -> tuple["UniPolyR", "UniPolyR"]:
        if other.is_zero():
            raise ZeroDivisionError
        q = [_ZERO] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        d = other.degree()
        lc = other.coeffs[-1]
        while len(r) - 1 >= d and any(r):
            while r and not r[-1]:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            f = r[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[k + i] -= f * c
            r.pop()
        return UniPolyR(q), UniPolyR(r)

    def __repr__(self):
        return f"UniPolyR({self.coeffs!r})"


def poly_gcd(a: UniPolyR, b: UniPolyR) -> UniPolyR:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def squarefree_decomposition(f: UniPolyR) -> list[tuple[UniPolyR, int]]:
    """Yun's algorithm: returns [(g_i, i)] with f = lc * prod g_i^i."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    f = f.monic()
    if f.degree() == 0:
        return []
    d = f.derivative()
    a = poly_gcd(f, d)
    b = f.divmod(a)[0]
    c = d.divmod(a)[0] - b.derivative()
    out = []
    i = 1
    while b.degree() > 0:
        g = poly_gcd(b, c)
        if g.degree() > 0:
            out.append((g.monic(), i))
        b = b.divmod(g)[0]
        c = c.divmod(g)[0] - b.derivative()
        i += 1
    return out


def sturm_chain(f: UniPolyR) -> list[UniPolyR]:
    chain = [f, f.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree() > 0:
        rem = chain[-2].divmod(chain[-1])[1]
        if rem.is_zero():
            break
        chain.append(rem.scale(-1))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def sign_variations(chain: Sequence[UniPolyR], at: Fraction) -> int:
    signs = []
    for g in chain:
        v = g(at)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


class RootList:
    """Real roots of a rational polynomial, with multiplicities and
    pairwise-disjoint isolating intervals."""

    __slots__ = ("roots",)

    def __init__(self, roots: list[tuple[float, int, tuple[Fraction, Fraction]]]):
        self.roots = roots

    def values(self) -> list[float]:
        return [r[0] for r in self.roots]

    def distinct_count(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[tuple[float, int, tuple[Fraction, Fraction]]]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __repr__(self):
        return f"RootList({self.roots!r})"


def _isolate_squarefree(g: UniPolyR) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals (lo, hi] for all real roots of square-free g."""
    if g.degree() == 0:
        return []
    chain = sturm_chain(g)
    lead = abs(g.coeffs[-1])
    bound = 1 + max(abs(c) for c in g.coeffs) / lead
    lo, hi = -bound, bound
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, sign_variations(chain, lo), sign_variations(chain, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        vm = sign_variations(chain, mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    return sorted(out)


def _refine(g: UniPolyR, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect the half-open isolating interval (lo, hi] of square-free g."""
    if g(hi) == 0:
        # Root hit exactly; recenter a symmetric interval around it.
        eps = width / 2
        return hi - eps, hi + eps
    slo = 1 if g(lo) > 0 else -1
    while hi - lo >= width:
        mid = (lo + hi) / 2
        v = g(mid)
        if v == 0:
            eps = min(width, hi - mid, mid - lo) / 2
            return mid - eps, mid + eps
        if (1 if v > 0 else -1) == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def sturm_real_roots(f: UniPolyR, exclude_zero: bool = False) -> RootList:
    """All real roots with multiplicities, via square-free decomposition and
    Sturm bisection; isolating intervals refined below 1e-15 width."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    found: list[tuple[Fraction, Fraction, int, UniPolyR]] = []
    for g, mult in squarefree_decomposition(f):
        for lo, hi in _isolate_squarefree(g):
            lo, hi = _refine(g, lo, hi, ROOT_WIDTH)
            found.append((lo, hi, mult, g))
    found.sort(key=lambda r: r[0] + r[1])
    # Roots of distinct square-free factors are distinct; shrink any
    # intervals that still overlap.
    changed = True
    while changed:
        changed = False
        for i in range(len(found) - 1):
            if found[i][1] > found[i + 1][0]:
                lo, hi, mult, g = found[i]
                found[i] = (*_refine(g, lo, hi, (hi - lo) / 4), mult, g)
                lo, hi, mult, g = found[i + 1]
                found[i + 1] = (*_refine(g, lo, hi, (hi - lo) / 4), mult, g)
                changed = True
    roots = []
    for lo, hi, mult, g in found:
        if exclude_zero and lo <= 0 <= hi and g(Fraction(0)) == 0:
            continue
        roots.append((float((lo + hi) / 2), mult, (lo, hi)))
    return RootList(roots)


# -- discriminants -----------------------------------------------------------


def quartic_disc(A, B, C, D, E):
    """Closed-form discriminant of A t^4 + B t^3 + C t^2 + D t + E.

    Works over any commutative ring (Fraction or LaurentPoly3 entries).
    """
    return (
        B * B * C * C * D * D
        - 4 * A * C * C * C * D * D
        - 4 * B * B * B * D * D * D
        + 18 * A * B * C * D * D * D
        - 27 * A * A * D * D * D * D
        - 4 * B * B * C * C * C * E
        + 16 * A * C * C * C * C * E
        + 18 * B * B * B * C * D * E
        - 80 * A * B * C * C * D * E
        - 6 * A * B * B * D * D * E
        + 144 * A * A * C * D * D * E
        - 27 * B * B * B * B * E * E
        + 144 * A * B * B * C * E * E
        - 128 * A * A * C * C * E * E
        - 192 * A * A * B * D * E * E
        + 256 * A * A * A * E * E * E
    )


def quartic_P(A, B, C, D, E):
    return 8 * A * C - 3 * B * B


def quartic_D(A, B, C, D, E):
    return (
        -3 * B * B * B * B
        - 16 * A * A * C * C
        + 64 * A * A * A * E
        + 16 * A * B * B * C
        - 16 * A * A * B * D
    )


def quartic_R(A, B, C, D, E):
    return B * B * B + 8 * A * A * D - 4 * A * B * C


def quartic_O(A, B, C, D, E):
    return C * C + 12 * A * E - 3 * B * D


def resultant(f: UniPolyR, g: UniPolyR) -> Fraction:
    """Resultant via the Sylvester matrix (Bareiss over Q)."""
    n, m = f.degree(), g.degree()
    size = n + m
    rows: list[list[Fraction]] = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([_ZERO] * i + fc + [_ZERO] * (size - n - 1 - i))
    for i in range(n):
        rows.append([_ZERO] * i + gc + [_ZERO] * (size - m - 1 - i))
    return _det_fraction(rows)


def _det_fraction(m: list[list[Fraction]]) -> Fraction:
    k = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for i in range(k):
        piv = None
        for r in range(i, k):
            if m[r][i]:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        inv = 1 / m[i][i]
        for r in range(i + 1, k):
            if m[r][i]:
                f = m[r][i] * inv
                for c in range(i, k):
                    m[r][c] -= f * m[i][c]
    return det


def discriminant(f: UniPolyR) -> Fraction:
    """Exact discriminant for degrees 2-4.

    The quartic case is computed both by the closed formula and via
    Res(f, f'); the two must agree.
    """
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    deg = f.degree()
    c = f.coeffs
    if deg == 2:
        A, B, C = c[2], c[1], c[0]
        return B * B - 4 * A * C
    if deg == 3:
        a, b, cc, d = c[3], c[2], c[1], c[0]
        return (
            18 * a * b * cc * d
            - 4 * b**3 * d
            + b * b * cc * cc
            - 4 * a * cc**3
            - 27 * a * a * d * d
        )
    if deg == 4:
        A, B, C, D, E = c[4], c[3], c[2], c[1], c[0]
        closed = quartic_disc(A, B, C, D, E)
        via_res = resultant(f, f.derivative()) / A
        if closed != via_res:  # pragma: no cover - internal consistency
            raise PolycoreError("discriminant routes disagree")
        return closed
    raise UnsupportedDegree(f"degree {deg} not supported")

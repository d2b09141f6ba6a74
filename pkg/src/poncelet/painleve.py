"""Explicit algebraic Painleve VI solutions attached to the 3- and
4-isoperiodic families, verified by direct residual evaluation.

Derivatives with respect to the curve parameter come from order-2 truncated
Taylor jets, so the second-order residual of the differential equation can
be checked to tight tolerances.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

DERIV_TOL = 1e-9
RESIDUAL_TOL = 1e-7


class PainleveError(Exception):
    pass


class BranchPoint(PainleveError):
    pass


class Pole(PainleveError):
    pass


class SingularDenominator(PainleveError):
    pass


class SingularInput(PainleveError):
    pass


class DegenerateParabola(PainleveError):
    pass


@dataclass(frozen=True)
class PVIParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction


PICARD_PARAMS = PVIParams(Fraction(0), Fraction(0), Fraction(0), Fraction(1, 2))
OKAMOTO_PARAMS = PVIParams(Fraction(1, 8), Fraction(-1, 8), Fraction(1, 8), Fraction(3, 8))


@dataclass(frozen=True)
class Jet2:
    """Order-2 truncated Taylor coefficients (value, d/dp, d^2/dp^2)."""

    value: complex
    d1: complex = 0.0
    d2: complex = 0.0

    @staticmethod
    def variable(p: complex) -> "Jet2":
        return Jet2(complex(p), 1.0, 0.0)

    @staticmethod
    def const(c: complex) -> "Jet2":
        return Jet2(complex(c), 0.0, 0.0)

    def __add__(self, other) -> "Jet2":
        other = _as_jet(other)
        return Jet2(self.value + other.value, self.d1 + other.d1, self.d2 + other.d2)

    __radd__ = __add__

    def __neg__(self) -> "Jet2":
        return Jet2(-self.value, -self.d1, -self.d2)

    def __sub__(self, other) -> "Jet2":
        return self + (-_as_jet(other))

    def __rsub__(self, other) -> "Jet2":
        return _as_jet(other) + (-self)

    def __mul__(self, other) -> "Jet2":
        other = _as_jet(other)
        return Jet2(
            self.value * other.value,
            self.d1 * other.value + self.value * other.d1,
            self.d2 * other.value + 2 * self.d1 * other.d1 + self.value * other.d2,
        )

    __rmul__ = __mul__

    def inv(self) -> "Jet2":
        v = self.value
        if v == 0:
            raise ZeroDivisionError("jet with zero value")
        w = 1 / v
        return Jet2(w, -self.d1 * w * w, (2 * self.d1 * self.d1 / v - self.d2) * w * w)

    def __truediv__(self, other) -> "Jet2":
        return self * _as_jet(other).inv()

    def __rtruediv__(self, other) -> "Jet2":
        return _as_jet(other) * self.inv()

    def sqrt(self) -> "Jet2":
        s = cmath.sqrt(self.value)
        if s == 0:
            raise BranchPoint("square root branch point")
        d1 = self.d1 / (2 * s)
        d2 = self.d2 / (2 * s) - self.d1 * self.d1 / (4 * s * s * s)
        return Jet2(s, d1, d2)


def _as_jet(v) -> Jet2:
    if isinstance(v, Jet2):
        return v
    if isinstance(v, (int, float, complex, Fraction)):
        return Jet2.const(complex(v))
    raise TypeError(f"cannot coerce {type(v).__name__} to Jet2")


@dataclass(frozen=True)
class PVISolutionPoint:
    family: str  # "N3" | "N4"
    p: complex
    x: complex
    y0: complex
    y: complex
    dy0_dx: complex
    dy_dx: complex
    d2y_dx2: complex
    residual_y0: float
    residual_y: float


def cubic_spectrum(e, p: complex) -> tuple[complex, complex, complex]:
    """The three zeros of the pencil characteristic cubic at center e.

    Closed forms for (1, 0) and (0, 0); Cardano for a general center.
    """
    p = complex(p)
    if p == 0:
        raise DegenerateParabola("p must be nonzero")
    x, y = float(e[0]), float(e[1])
    if (x, y) == (1.0, 0.0):
        s = cmath.sqrt(p**3 * (p + 4))
        return (-1.0, (-(p * p + 2 * p) + s) / 2, (-(p * p + 2 * p) - s) / 2)
    if (x, y) == (0.0, 0.0):
        s = cmath.sqrt(p**4 - 4 * p * p)
        return (-1.0, (-p * p + s) / 2, (-p * p - s) / 2)
    # General pencil cubic: -l^3 + theta1 l^2 + theta2 l + delta2.
    a = -1.0
    b = -p * p - 2 * p * x + y * y - 1
    c = -2 * p * p - 2 * p * x
    d = -p * p
    return _cardano(a, b, c, d)


def _cardano(a: complex, b: complex, c: complex, d: complex) -> tuple[complex, complex, complex]:
    b, c, d = b / a, c / a, d / a
    q = (3 * c - b * b) / 9
    r = (9 * b * c - 27 * d - 2 * b**3) / 54
    disc = q**3 + r * r
    s = (r + cmath.sqrt(disc)) ** (1 / 3)
    t = q / s if s != 0 else 0j
    w = complex(-0.5, cmath.sqrt(3).real / 2)
    roots = []
    for k in range(3):
        u = s * w**k
        roots.append(u - (q / u if u != 0 else 0) - b / 3)
    return tuple(roots)


def okamoto(y0: complex, dy0_dx: complex, x: complex) -> complex:
    """Okamoto lift from a Picard solution to the (1/8,-1/8,1/8,3/8) family."""
    den = x * (x - 1) * dy0_dx - y0 * (y0 - 1)
    if den == 0:
        raise SingularDenominator("Okamoto denominator vanished")
    return y0 + y0 * (y0 - 1) * (y0 - x) / den


def pvi_residual(x: complex, y: complex, dy_dx: complex, d2y_dx2: complex, params: PVIParams) -> float:
    """Absolute defect of the Painleve VI equation at one evaluated point."""
    if x in (0, 1) or y in (0, 1) or y == x:
        raise SingularInput("evaluation point hits a pole of the equation")
    lhs = d2y_dx2
    rhs = (
        (1 / y + 1 / (y - 1) + 1 / (y - x)) * dy_dx * dy_dx / 2
        - (1 / x + 1 / (x - 1) + 1 / (y - x)) * dy_dx
        + y * (y - 1) * (y - x) / (x * x * (x - 1) ** 2)
        * (
            float(params.alpha)
            + float(params.beta) * x / (y * y)
            + float(params.gamma) * (x - 1) / ((y - 1) ** 2)
            + float(params.delta) * x * (x - 1) / ((y - x) ** 2)
        )
    )
    return abs(lhs - rhs)


def _point_from_jets(family: str, p: complex, xj: Jet2, y0j: Jet2, yj: Jet2) -> PVISolutionPoint:
    if xj.d1 == 0:
        raise SingularInput("dx/dp vanished; cannot reparametrize by x")
    dy0_dx = y0j.d1 / xj.d1
    dy_dx = yj.d1 / xj.d1
    d2y_dx2 = (yj.d2 * xj.d1 - yj.d1 * xj.d2) / xj.d1**3
    d2y0_dx2 = (y0j.d2 * xj.d1 - y0j.d1 * xj.d2) / xj.d1**3
    res0 = pvi_residual(xj.value, y0j.value, dy0_dx, d2y0_dx2, PICARD_PARAMS)
    res1 = pvi_residual(xj.value, yj.value, dy_dx, d2y_dx2, OKAMOTO_PARAMS)
    return PVISolutionPoint(
        family=family,
        p=p,
        x=xj.value,
        y0=y0j.value,
        y=yj.value,
        dy0_dx=dy0_dx,
        dy_dx=dy_dx,
        d2y_dx2=d2y_dx2,
        residual_y0=res0,
        residual_y=res1,
    )


def solution_n3(p: complex) -> PVISolutionPoint:
    """The algebraic solution family attached to 3-isoperiodicity (circle
    centered at (1, 0))."""
    pc = complex(p)
    if pc == 0 or pc == -4:
        raise BranchPoint("p in {0, -4}")
    if pc == -1:
        raise Pole("p = -1")
    P = Jet2.variable(pc)
    s = (P * P * P * (P + 4)).sqrt()
    xj = (P * P + 2 * P - 2 + s) / (2 * s)
    y0j = (P * P + 2 * P + s) / (2 * s)
    yj = (P * P + 2 * P + s) * (-(P * P) - 4 * P + 3 * s) / (4 * P * (P + 1) * s)
    point = _point_from_jets("N3", pc, xj, y0j, yj)
    if abs(point.dy0_dx - (-pc / 3)) > DERIV_TOL * max(1.0, abs(pc)):
        raise PainleveError("dy0/dx != -p/3; branch pairing broken")
    return point


def solution_n4(p: complex) -> PVISolutionPoint:
    """The algebraic solution family attached to 4-isoperiodicity (circle
    centered at the focus)."""
    pc = complex(p)
    if pc in (0, 2, -2):
        raise BranchPoint("p in {0, +-2}")
    P = Jet2.variable(pc)
    s = (P * P * (P * P - 4)).sqrt()
    xj = (P * P - 2 + s) / (2 * s)
    y0j = (1 + P * P / s) * Fraction(1, 2)
    yj = (P * P + s) / (2 * P * P)
    point = _point_from_jets("N4", pc, xj, y0j, yj)
    if abs(point.dy0_dx - pc * pc / 2) > DERIV_TOL * max(1.0, abs(pc) ** 2):
        raise PainleveError("dy0/dx != p^2/2; branch pairing broken")
    rel = point.y - point.y0 / (2 * point.y0 - 1)
    if abs(rel) > DERIV_TOL:
        raise PainleveError("y != y0/(2 y0 - 1)")
    return point


def sample_family(family: str, p_values) -> tuple[list[PVISolutionPoint], float]:
    """Batch evaluation; returns the points and the maximum PVI residual."""
    solver = {"N3": solution_n3, "N4": solution_n4}[family]
    points = [solver(p) for p in p_values]
    max_res = max((max(pt.residual_y0, pt.residual_y) for pt in points), default=0.0)
    return points, max_res


def hitchin_residual(x: complex, y: complex) -> float:
    """Defect of the quartic relation satisfied by the n=3 family."""
    return abs(
        x * y**3 * (y + 2)
        + x**3 * (2 * y - 1)
        - x * x * y * (y**3 - 2 * y * y + 6 * y - 2)
        - y**4
    )

"""Fixed-point integration and residue formulas for reduced spaces.

Conventions (frozen, calibration tag ``CALIBRATION``):

* On projective space the component at weight ``a`` has equivariant normal
  Euler class ``prod_nu (xi - nu b)`` over its moment-convention normal
  weights ``nu = c - a``; together with ``x -> xi + a b`` this makes
  ``integral(x^n) = 1`` over ``P^n``.
* On ``(P^1)^n`` the fixed point with signs ``a`` has Euler class
  ``2^n (prod a_i) b^n`` (tangent weight ``2 a_i b`` on each factor, so that
  the top class ``a_1 ... a_n`` integrates to 1).
* Reduced integrals at a regular level ``eps`` are
  ``SIGMA * sum_{mu(F) > eps} Res_{b=0} integral_F eta|_F / e_F``.
* The ``SU(2)`` reduction multiplies by the root product ``ROOT_FACTOR b^2``
  and divides by the Weyl group order 2.

Reduced integrals are evaluations against orbifold fundamental classes, so
they may be non-integral (e.g. 1/2 when a generic stabilizer is ``Z/2``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .rings import PnClass, SU2Class
from .space_model import CircleSpace, SU2ProductSpace

CALIBRATION = "ihquot-cal-1"
SIGMA = 1
ROOT_FACTOR = Fraction(-4)


class LocalizationError(ArithmeticError):
    """Negative powers of the equivariant parameter failed to cancel."""


class NonRegularLevel(ValueError):
    """The requested level contains a fixed point."""


class LaurentSeriesBeta:
    """Finite Laurent polynomial in the equivariant parameter ``b``."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Mapping[int, object] | None = None):
        self.coefficients = {int(e): Fraction(c) for e, c in sorted((coefficients or {}).items())
                             if c != 0}

    def __add__(self, other: "LaurentSeriesBeta") -> "LaurentSeriesBeta":
        out = dict(self.coefficients)
        for e, c in other.coefficients.items():
            out[e] = out.get(e, 0) + c
        return LaurentSeriesBeta(out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeriesBeta({0: other})
        return isinstance(other, LaurentSeriesBeta) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    def coefficient(self, e: int) -> Fraction:
        return self.coefficients.get(e, Fraction(0))

    def residue(self) -> Fraction:
        return self.coefficient(-1)

    def has_negative_powers(self) -> bool:
        return any(e < 0 for e in self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def constant(self) -> Fraction:
        if any(e != 0 for e in self.coefficients):
            raise ValueError(f"{self} is not a constant")
        return self.coefficient(0)

    def __repr__(self):
        return f"LaurentSeriesBeta({self.coefficients})"

    def __str__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"{c}*b^{e}" if e else str(c) for e, c in self.coefficients.items())


# projective space


def _inverse_euler(normal_weights, mult: int) -> dict[tuple[int, int], Fraction]:
    """``1 / prod (xi - nu b)`` expanded in ``xi`` modulo ``xi^mult``.

    Keys are ``(power of xi, power of b)``.
    """
    series = {(0, 0): Fraction(1)}
    for nu in normal_weights:
        c = Fraction(-nu)
        # 1/(xi + c b) = sum_j (-1)^j xi^j c^{-j-1} b^{-j-1}
        factor = {(j, -j - 1): Fraction((-1) ** j) / c ** (j + 1) for j in range(mult)}
        nxt: dict[tuple[int, int], Fraction] = {}
        for (i1, e1), c1 in series.items():
            for (i2, e2), c2 in factor.items():
                if i1 + i2 >= mult:
                    continue
                key = (i1 + i2, e1 + e2)
                nxt[key] = nxt.get(key, 0) + c1 * c2
        series = nxt
    return series


def component_term(space: CircleSpace, eta: PnClass, value) -> LaurentSeriesBeta:
    """``integral_F eta|_F / e_F`` for the component at moment value ``value``."""
    F = next(F for F in space.components if F.moment_value == value)
    mult = F.complex_dim + 1
    restricted = eta.restrict(int(value))
    inverse = _inverse_euler(F.normal_weights, mult)
    out: dict[int, Fraction] = {}
    for (i1, e1), c1 in restricted.items():
        for (i2, e2), c2 in inverse.items():
            if i1 + i2 == mult - 1:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return LaurentSeriesBeta(out)


def _require_linear(space: CircleSpace, eta: PnClass):
    if space.linear_weights is None:
        raise TypeError("class-level integration needs a space built by linear_pn")
    if tuple(eta.weights) != tuple(space.linear_weights):
        raise ValueError("class does not belong to this space")


# (P^1)^n


def su2_euler(signs) -> Fraction:
    prod = 1
    for a in signs:
        prod *= 2 * a
    return Fraction(prod)


def fixed_point_term(eta: SU2Class, signs) -> LaurentSeriesBeta:
    n = len(signs)
    return LaurentSeriesBeta({e - n: c / su2_euler(signs) for e, c in eta.restrict(signs).items()})


def abbv_integral(space, eta) -> LaurentSeriesBeta:
    """Integral over the whole space by summing fixed-point contributions.

    The result is a polynomial in ``b``; a surviving negative power raises
    :class:`LocalizationError`.
    """
    total = LaurentSeriesBeta()
    if isinstance(space, SU2ProductSpace):
        if eta.n != space.n:
            raise ValueError("class does not belong to this space")
        for signs in space.sign_vectors():
            total = total + fixed_point_term(eta, signs)
    else:
        _require_linear(space, eta)
        for F in space.components:
            total = total + component_term(space, eta, F.moment_value)
    if total.has_negative_powers():
        raise LocalizationError(f"localization mismatch: negative powers survive in {total}")
    return total


def kalkman_reduced_integral(space: CircleSpace, eta: PnClass, epsilon) -> Fraction:
    """Integral of ``eta`` over the reduction at the regular level ``epsilon``."""
    _require_linear(space, eta)
    epsilon = Fraction(epsilon)
    values = [F.moment_value for F in space.components]
    if epsilon in values:
        raise NonRegularLevel(f"level {epsilon} contains a fixed component")
    if not eta.is_zero() and eta.degree != 2 * space.half_dim - 2:
        raise ValueError(f"class degree {eta.degree} != reduced dimension {2 * space.half_dim - 2}")
    total = Fraction(0)
    for F in space.components:
        if F.moment_value > epsilon:
            total += component_term(space, eta, F.moment_value).residue()
    return SIGMA * total


def wall_residue(space: CircleSpace, eta: PnClass, value) -> Fraction:
    """Jump of the reduced integral when the level crosses ``value`` downward."""
    return SIGMA * component_term(space, eta, Fraction(value)).residue()


def su2_reduced_integral(space: SU2ProductSpace, eta: SU2Class, epsilon) -> Fraction:
    """Integral of ``eta`` over the ``SU(2)`` reduction at a level near ``epsilon``.

    Computed on the torus reduction by multiplying with the root product and
    dividing by the Weyl group order.  Odd-degree classes integrate to 0.
    """
    epsilon = Fraction(epsilon)
    if epsilon in space.torus_moment_values():
        raise NonRegularLevel(f"level {epsilon} contains a torus-fixed point")
    if eta.n != space.n:
        raise ValueError("class does not belong to this space")
    if eta.is_zero():
        return Fraction(0)
    if eta.degree != space.dim_reduced:
        raise ValueError(f"class degree {eta.degree} != reduced dimension {space.dim_reduced}")
    twisted = eta * SU2Class(space.n, {((), 2): ROOT_FACTOR})
    total = Fraction(0)
    for signs in space.sign_vectors():
        if sum(signs) > epsilon:
            total += fixed_point_term(twisted, signs).residue()
    return SIGMA * total / 2


def chamber(values, epsilon) -> tuple:
    """The open interval of regular levels containing ``epsilon``."""
    epsilon = Fraction(epsilon)
    lower = max((v for v in values if v < epsilon), default=None)
    upper = min((v for v in values if v > epsilon), default=None)
    return lower, upper

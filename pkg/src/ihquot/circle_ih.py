"""Intersection cohomology of reductions of circle actions.

Each fixed component ``F`` in the zero level gives an isolated-type
singularity whose link is governed by ``d(F) = min(p, q)`` and
``e(F) = max(p, q)``, the counts of positive and negative normal weights.
The intersection complex coincides with the one for the perversity
``2 d(F) - 1`` at those strata, which yields

    IP_t(M_0) = P^{S1}_t(Z) - sum_{F in F_0} t^{2 d(F)} P_t(F) / (1 - t^2)

and identifies IH with the classes whose restriction to each ``F`` has
equivariant-parameter degree below ``2 d(F) - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .localization import kalkman_reduced_integral
from .morse_series import equivariant_series_M, equivariant_series_Z
from .poincare import PoincarePolynomial, divide_by_one_minus_t2, is_palindromic
from .rings import PnClass
from .space_model import CircleSpace, FixedComponent, components_in_Z, weight_counts

PnEquivariantClass = PnClass


class NonPolynomialResult(ArithmeticError):
    """The corollary series has nonzero coefficients past the reduced dimension."""


@dataclass(frozen=True)
class SingularityData:
    component_label: str
    d: int
    e: int
    perversity_n: int


def singularity_data(F: FixedComponent) -> SingularityData:
    if F.moment_value != 0:
        raise ValueError(f"component {F.label!r} is not in the zero level")
    p, q = F.positive_count, F.negative_count
    d, e = min(p, q), max(p, q)
    return SingularityData(F.label, d, e, 2 * d - 1)


def working_truncation(space: CircleSpace) -> int:
    # reduced dimension plus a guard band of 2 * half_dim degrees
    return space.dim_reduced + 2 * space.half_dim


def singular_correction(space: CircleSpace, truncation: int) -> PoincarePolynomial:
    total = PoincarePolynomial()
    for F in components_in_Z(space):
        d = singularity_data(F).d
        total = total + F.poincare.shift(2 * d)
    return divide_by_one_minus_t2(total, truncation)


def intersection_poincare_circle(space: CircleSpace) -> PoincarePolynomial:
    trunc = working_truncation(space)
    series = equivariant_series_Z(space, trunc) - singular_correction(space, trunc)
    top = space.dim_reduced
    tail = {d: c for d, c in series.items() if d > top}
    if tail:
        raise NonPolynomialResult(
            f"intersection series has nonzero coefficients above degree {top}: {tail}")
    return series.truncate(top).as_exact()


def closed_form(p: int, q: int, r: int) -> PoincarePolynomial:
    """``(1 - t^{2p})(1 - t^{2q+2r}) / (1 - t^2)^2`` with ``p <= q`` enforced by swapping."""
    p, q = min(p, q), max(p, q)
    num = (PoincarePolynomial({0: 1}) - PoincarePolynomial.monomial(2 * p)) * \
        (PoincarePolynomial({0: 1}) - PoincarePolynomial.monomial(2 * q + 2 * r))
    bound = 2 * (p + q + r)
    once = divide_by_one_minus_t2(num, bound)
    return divide_by_one_minus_t2(once, bound)


def closed_form_for(space: CircleSpace) -> Optional[PoincarePolynomial]:
    if space.linear_weights is None:
        return None
    return closed_form(*weight_counts(space.linear_weights))


def closed_form_equivariant_Z(p: int, q: int, r: int, truncation: int) -> PoincarePolynomial:
    """``(1 + ... + t^{2p+2r-2} - t^{2q+2r} - ... - t^{2n}) / (1 - t^2)``, ``p <= q``."""
    p, q = min(p, q), max(p, q)
    n = p + q + r - 1
    num = {2 * k: 1 for k in range(p + r)}
    for k in range(q + r, n + 1):
        num[2 * k] = num.get(2 * k, 0) - 1
    return divide_by_one_minus_t2(PoincarePolynomial(num), truncation)


# classes on projective space


def restrict_to_component(eta: PnClass, F: FixedComponent) -> dict[tuple[int, int], Fraction]:
    """Restriction ``{(i, l): c}`` for ``xi^i b^l`` on the component ``F``."""
    return eta.restrict(int(F.moment_value))


def _require_linear(space: CircleSpace):
    if space.linear_weights is None:
        raise TypeError("class-level computations need a space built by linear_pn")


def v_membership_circle(eta: PnClass, space: CircleSpace) -> bool:
    _require_linear(space)
    if not eta.is_homogeneous():
        raise ValueError("class must be homogeneous")
    for F in components_in_Z(space):
        d = singularity_data(F).d
        if any(l > d - 1 for (_, l) in restrict_to_component(eta, F)):
            return False
    return True


def _forbidden_rows(space: CircleSpace, degree: int) -> list[list[Fraction]]:
    """Linear functionals on the degree slice that must vanish for membership.

    One functional per component of the zero level and per restricted
    monomial ``xi^i b^l`` with ``l >= d``.
    """
    basis = PnClass.basis(space.linear_weights, degree)
    rows = []
    for F in components_in_Z(space):
        d = singularity_data(F).d
        images = [restrict_to_component(eta, F) for eta in basis]
        keys = sorted({key for img in images for key in img if key[1] >= d})
        for key in keys:
            rows.append([img.get(key, Fraction(0)) for img in images])
    return rows


def member_basis(space: CircleSpace, degree: int) -> list[PnClass]:
    """Basis of the degree slice of classes on ``P^n`` satisfying membership."""
    _require_linear(space)
    basis = PnClass.basis(space.linear_weights, degree)
    if not basis:
        return []
    kernel = linalg.nullspace(_forbidden_rows(space, degree), len(basis))
    out = []
    for vec in kernel:
        cls = PnClass.constant(space.linear_weights, 0)
        for c, b in zip(vec, basis):
            if c:
                cls = cls + b * PnClass.constant(space.linear_weights, c)
        out.append(cls)
    return out


def v_dimension_series(space: CircleSpace) -> PoincarePolynomial:
    """Degreewise dimension of the membership subspace of ``H_{S1}(Z)``.

    Classes come from ``H_{S1}(P^n)``, which surjects onto ``H_{S1}(Z)``;
    the kernel is contained in the membership subspace (restriction to each
    ``F`` factors through ``Z``) and its dimension is read off from the two
    Morse series.
    """
    _require_linear(space)
    trunc = working_truncation(space)
    series_M = equivariant_series_M(space, trunc)
    series_Z = equivariant_series_Z(space, trunc)
    dims = {}
    for degree in range(0, trunc + 1, 2):
        members = len(member_basis(space, degree))
        kernel = series_M[degree] - series_Z[degree]
        dims[degree] = members - kernel
    result = PoincarePolynomial(dims, trunc)
    top = space.dim_reduced
    tail = {d: c for d, c in result.items() if d > top}
    if tail:
        raise NonPolynomialResult(f"membership dimensions nonzero above degree {top}: {tail}")
    return result.truncate(top).as_exact()


def pairing_matrix_circle(space: CircleSpace, degree: int, epsilon) -> list[list[Fraction]]:
    """Reduced-space pairing between member bases in complementary degrees."""
    left = member_basis(space, degree)
    right = member_basis(space, space.dim_reduced - degree)
    return [[kalkman_reduced_integral(space, a * b, epsilon) for b in right] for a in left]


def pairing_rank_series(space: CircleSpace, epsilon) -> PoincarePolynomial:
    """IH dimensions recovered as ranks of the reduced-space pairing."""
    top = space.dim_reduced
    return PoincarePolynomial(
        {r: linalg.rank(pairing_matrix_circle(space, r, epsilon)) for r in range(0, top + 1, 2)})


def is_dual(poly: PoincarePolynomial, space: CircleSpace) -> bool:
    return (is_palindromic(poly, space.dim_reduced)
            and poly.has_nonnegative_integer_coefficients())

"""``SU(2)`` acting diagonally on ``(P^1)^n``.

The invariant ring is ``Q[a_1..a_n, b^2] / (a_i^2 = b^2)``.  For ``n = 2m``
the reduction has isolated singularities at the orbits of balanced torus
fixed points, real dimension ``4m - 6`` and middle degree ``2m - 3``.  Below
the middle IH agrees with the invariant ring; above it, hard Lefschetz for
the Kahler class ``omega = a_1 + ... + a_n`` gives
``IH^{2m-3+i} = omega^i H^{2m-3-i}``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from . import linalg
from .localization import su2_reduced_integral
from .poincare import PoincarePolynomial, divide_by_one_minus_t2
from .rings import SU2Class, su2_basis
from .space_model import SU2ProductSpace, product_p1_su2

normal_form = SU2Class.normal_form


def su2_betti(n: int, r: int) -> int:
    """Dimension of the degree-``r`` slice of the invariant ring."""
    if r < 0 or r % 2:
        return 0
    half = r // 2
    # a_S b^{2j}: |S| + 2j = half
    return sum(comb(n, half - 2 * j) for j in range(half // 2 + 1) if half - 2 * j <= n)


def su2_series(n: int, truncation: int) -> PoincarePolynomial:
    """``(1 + t^2)^n / (1 - t^4)`` as a truncated series."""
    num = PoincarePolynomial({2 * k: comb(n, k) for k in range(n + 1)})
    # 1/(1 - t^4) = 1/(1 - t^2) * 1/(1 + t^2); divide by (1 - t^2) then by (1 + t^2)
    once = divide_by_one_minus_t2(num, truncation)
    out = {}
    for d in range(0, truncation + 1, 2):
        out[d] = once.coefficient(d) - out.get(d - 2, 0)
    return PoincarePolynomial(out, truncation)


def restrict_to_fixed(eta: SU2Class, signs) -> dict[int, Fraction]:
    return eta.restrict(signs)


def _half(n: int) -> int:
    if n % 2:
        raise ValueError(f"n={n} is odd: the reduction has no singular stratum, "
                         "every class trivially qualifies")
    return n // 2


def v_membership_su2(eta: SU2Class, n: int) -> bool:
    m = _half(n)
    if not eta.is_homogeneous():
        raise ValueError("class must be homogeneous")
    if not eta.weyl_invariant:
        raise ValueError("class must be Weyl invariant (even powers of b only)")
    if eta.degree < 2 * m - 3:
        return True
    space = product_p1_su2(n)
    return all(not eta.restrict(a) for a in space.balanced_sign_vectors())


def membership_basis_su2(n: int, degree: int) -> list[SU2Class]:
    """Basis of invariant classes of the given degree passing membership."""
    m = _half(n)
    basis = su2_basis(n, degree)
    if degree < 2 * m - 3 or not basis:
        return basis
    rows = []
    for a in product_p1_su2(n).balanced_sign_vectors():
        images = [eta.restrict(a) for eta in basis]
        for e in sorted({e for img in images for e in img}):
            rows.append([img.get(e, Fraction(0)) for img in images])
    return [_combine(n, vec, basis) for vec in linalg.nullspace(rows, len(basis))]


def _combine(n: int, vec, basis) -> SU2Class:
    out = SU2Class(n)
    for c, b in zip(vec, basis):
        if c:
            out = out + b * c
    return out


def _coords(eta: SU2Class, basis: list[SU2Class]) -> list[Fraction]:
    index = {next(iter(b.terms)): i for i, b in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for key, c in eta.terms.items():
        vec[index[key]] = c
    return vec


def omega_power_matrix(n: int, source_degree: int, i: int) -> list[list[Fraction]]:
    """Matrix of multiplication by ``omega^i`` between invariant monomial bases.

    Columns index the source basis, rows the target basis.
    """
    src = su2_basis(n, source_degree)
    tgt = su2_basis(n, source_degree + 2 * i)
    w = SU2Class.omega(n) ** i
    cols = [_coords(w * b, tgt) for b in src]
    return linalg.transpose(cols) if cols else []


@lru_cache(maxsize=None)
def ih_betti_su2(n: int, r: int) -> int:
    m = _half(n)
    if n < 4:
        raise ValueError("need n >= 4 for a positive-dimensional reduction")
    top = 4 * m - 6
    if r < 0 or r > top:
        raise ValueError(f"degree {r} outside 0..{top}")
    middle = 2 * m - 3
    if r <= middle:
        return su2_betti(n, r)
    i = r - middle
    return linalg.rank(omega_power_matrix(n, middle - i, i))


def ih_table_su2(n: int) -> list[int]:
    m = _half(n)
    return [ih_betti_su2(n, r) for r in range(4 * m - 5)]


def ih_basis_su2(n: int, r: int) -> list[SU2Class]:
    """Frozen basis of IH^r as invariant classes.

    Below the middle: monomials.  Above it: an independent subset (first
    found, in basis order) of ``omega^i`` times the monomials of degree
    ``r - 2i``.
    """
    m = _half(n)
    middle = 2 * m - 3
    if r <= middle:
        return su2_basis(n, r) if r % 2 == 0 else []
    i = r - middle
    w = SU2Class.omega(n) ** i
    images = [w * b for b in su2_basis(n, middle - i)]
    tgt = su2_basis(n, r)
    keep = linalg.independent_subset([_coords(c, tgt) for c in images])
    return [images[k] for k in keep]


def default_epsilon(n: int) -> Fraction:
    """A regular level in the chamber adjacent to zero."""
    return Fraction(1, 2)


def _check_epsilon(space: SU2ProductSpace, epsilon: Fraction):
    nearest = min(abs(v) for v in space.torus_moment_values() if v != 0)
    if epsilon == 0 or abs(epsilon) >= nearest:
        raise ValueError(f"level {epsilon} is not close to 0 (need 0 < |eps| < {nearest})")


def ih_pairing_su2(n: int, eta: SU2Class, zeta: SU2Class, epsilon=None) -> Fraction:
    m = _half(n)
    space = product_p1_su2(n)
    epsilon = default_epsilon(n) if epsilon is None else Fraction(epsilon)
    _check_epsilon(space, epsilon)
    if eta.degree + zeta.degree != 4 * m - 6:
        raise ValueError(f"degrees {eta.degree} + {zeta.degree} != {4 * m - 6}")
    for cls in (eta, zeta):
        if not v_membership_su2(cls, n):
            raise ValueError(f"class {cls} does not restrict into the IH subspace")
    return su2_reduced_integral(space, eta * zeta, epsilon)


def pairing_matrix_su2(n: int, r: int, epsilon=None) -> list[list[Fraction]]:
    m = _half(n)
    left = ih_basis_su2(n, r)
    right = ih_basis_su2(n, 4 * m - 6 - r)
    return [[ih_pairing_su2(n, a, b, epsilon) for b in right] for a in left]


def membership_pairing_rank(n: int, r: int, epsilon=None) -> int:
    """Rank of the reduced pairing on membership spaces of complementary degree.

    The pairing is nondegenerate on IH and kills classes vanishing on the
    zero level, so this rank is the IH Betti number, computed without hard
    Lefschetz.
    """
    m = _half(n)
    space = product_p1_su2(n)
    epsilon = default_epsilon(n) if epsilon is None else Fraction(epsilon)
    _check_epsilon(space, epsilon)
    left = membership_basis_su2(n, r)
    right = membership_basis_su2(n, 4 * m - 6 - r)
    mat = [[su2_reduced_integral(space, a * b, epsilon) for b in right] for a in left]
    return linalg.rank(mat)


def is_unimodal(values: list[int]) -> bool:
    peak = values.index(max(values)) if values else 0
    return (all(a <= b for a, b in zip(values[:peak], values[1:peak + 1]))
            and all(a >= b for a, b in zip(values[peak:], values[peak + 1:])))


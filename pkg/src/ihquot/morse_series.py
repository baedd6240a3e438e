"""Equivariant Morse theory of the norm square of the moment map.

The critical set of ``|mu|^2`` for a circle action is the zero level together
with the fixed components off it.  The stratification is equivariantly
perfect, so

    P^{S1}(M) = P^{S1}(Z) + sum_{mu(F) != 0} t^{index(F)} P(F) / (1 - t^2)

and the series of the zero level is read off by subtraction.
"""

from __future__ import annotations

from typing import Optional

from .poincare import PoincarePolynomial, divide_by_one_minus_t2
from .space_model import CircleSpace, FixedComponent


class MorseError(ValueError):
    pass


def default_truncation(space) -> int:
    return 2 * space.dim_reduced + 4


def morse_index(F: FixedComponent) -> int:
    """Real index of ``|mu|^2`` at ``F``: two per weight pulling ``mu`` toward 0."""
    if F.moment_value == 0:
        raise MorseError(f"component {F.label!r} lies in the zero level and has no index")
    return 2 * sum(1 for w in F.normal_weights if w * F.moment_value < 0)


def unstable_sum(space: CircleSpace) -> PoincarePolynomial:
    total = PoincarePolynomial()
    for F in space.components:
        if F.moment_value != 0:
            total = total + F.poincare.shift(morse_index(F))
    return total


def equivariant_series_Z(space: CircleSpace, out_truncation: Optional[int] = None) -> PoincarePolynomial:
    if out_truncation is None:
        out_truncation = default_truncation(space)
    if out_truncation < space.dim_reduced:
        raise MorseError(
            f"truncation {out_truncation} below the reduced dimension {space.dim_reduced}")
    series = divide_by_one_minus_t2(space.ambient_poincare - unstable_sum(space), out_truncation)
    bad = [(d, c) for d, c in series.items() if c < 0 or c.denominator != 1]
    if bad:
        raise MorseError(f"equivariant series of Z has invalid coefficients {bad}; "
                         "the Morse data is not perfect")
    return series


def equivariant_series_M(space, out_truncation: Optional[int] = None) -> PoincarePolynomial:
    if out_truncation is None:
        out_truncation = default_truncation(space)
    return divide_by_one_minus_t2(space.ambient_poincare, out_truncation)

"""Combinatorial models of Hamiltonian circle spaces.

A circle space is described by the Poincare polynomial of the ambient
manifold together with its fixed components: each component carries its own
Poincare polynomial, moment value and the multiset of circle weights on its
normal fibre.  Normal weights use the moment-map convention: near a
component with moment value ``c`` the moment map reads
``c + sum(w_k |z_k|^2)`` in normal coordinates.

Abstract inputs are taken on trust.  In particular the standing hypothesis
that some point of the zero level has finite stabilizer cannot be checked
from this data and remains the caller's responsibility.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .poincare import PoincarePolynomial


class SpaceError(ValueError):
    """Invalid space data."""


@dataclass(frozen=True)
class FixedComponent:
    label: str
    poincare: PoincarePolynomial
    moment_value: Fraction
    normal_weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "moment_value", Fraction(self.moment_value))
        object.__setattr__(self, "normal_weights", tuple(sorted(int(w) for w in self.normal_weights)))
        if any(w == 0 for w in self.normal_weights):
            raise SpaceError(f"component {self.label!r}: zero normal weight")
        p = self.poincare
        if not p.is_exact:
            raise SpaceError(f"component {self.label!r}: Poincare polynomial must be exact")
        if not p.has_nonnegative_integer_coefficients() or p.coefficient(0) < 1:
            raise SpaceError(
                f"component {self.label!r}: Poincare polynomial needs nonnegative integer "
                "coefficients and constant term >= 1")

    @property
    def positive_count(self) -> int:
        return sum(1 for w in self.normal_weights if w > 0)

    @property
    def negative_count(self) -> int:
        return sum(1 for w in self.normal_weights if w < 0)

    @property
    def complex_dim(self) -> int:
        return max(self.poincare.top_degree, 0) // 2

    @property
    def codim(self) -> int:
        return len(self.normal_weights)


@dataclass(frozen=True)
class CircleSpace:
    ambient_poincare: PoincarePolynomial
    components: tuple[FixedComponent, ...]
    half_dim: int
    # the weight list when built by linear_pn; enables ring-level computations
    linear_weights: Optional[tuple[int, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        comps = tuple(sorted(self.components, key=lambda F: (F.moment_value, F.normal_weights, F.label)))
        object.__setattr__(self, "components", comps)
        if not self.ambient_poincare.is_exact:
            raise SpaceError("ambient Poincare polynomial must be exact")
        if not comps:
            raise SpaceError("a circle space needs at least one fixed component")
        labels = [F.label for F in comps]
        if len(set(labels)) != len(labels):
            raise SpaceError("component labels must be unique")
        for F in comps:
            if F.complex_dim + F.codim != self.half_dim:
                raise SpaceError(
                    f"component {F.label!r}: dim {F.complex_dim} + {F.codim} normal weights "
                    f"!= half_dim {self.half_dim}")
        values = [F.moment_value for F in comps]
        if not (0 in values or (min(values) < 0 < max(values))):
            raise SpaceError("zero level is empty: all fixed moment values have one sign")

    @property
    def dim_reduced(self) -> int:
        """Real dimension of the reduced space."""
        return 2 * self.half_dim - 2

    def component(self, label: str) -> FixedComponent:
        for F in self.components:
            if F.label == label:
                return F
        raise KeyError(label)

    def euler_characteristic(self) -> Fraction:
        return self.ambient_poincare.evaluate(-1)

    def fixed_euler_characteristic(self) -> Fraction:
        return sum((F.poincare.evaluate(-1) for F in self.components), Fraction(0))


def _component_label(value: int, mult: int) -> str:
    return f"P{mult - 1}@{value}"


def linear_pn(weights: Sequence[int]) -> CircleSpace:
    """Linear circle action on projective space with the given weights.

    The moment map is ``sum(a_i |z_i|^2) / |z|^2`` so the component on which
    the weight-``a`` coordinates live has moment value exactly ``a``.
    """
    weights = tuple(int(w) for w in weights)
    if not weights:
        raise SpaceError("weight list is empty")
    if all(w > 0 for w in weights) or all(w < 0 for w in weights):
        raise SpaceError("zero level is empty: all weights have the same strict sign")
    n = len(weights) - 1
    counts = Counter(weights)
    comps = []
    for a, m in sorted(counts.items()):
        normal = [b - a for b, mb in counts.items() if b != a for _ in range(mb)]
        comps.append(FixedComponent(_component_label(a, m), PoincarePolynomial.projective(m - 1),
                                    Fraction(a), tuple(normal)))
    return CircleSpace(PoincarePolynomial.projective(n), tuple(comps), n, linear_weights=weights)


def components_in_Z(space: CircleSpace) -> list[FixedComponent]:
    return [F for F in space.components if F.moment_value == 0]


def weight_counts(weights: Sequence[int]) -> tuple[int, int, int]:
    """Numbers of positive, negative and zero weights."""
    return (sum(1 for w in weights if w > 0), sum(1 for w in weights if w < 0),
            sum(1 for w in weights if w == 0))


@dataclass(frozen=True)
class SU2ProductSpace:
    """``SU(2)`` acting diagonally on ``n`` copies of the projective line.

    Torus-fixed points are sign vectors: ``+1`` picks ``0`` and ``-1`` picks
    ``infinity`` in the corresponding factor.
    """
    n: int

    def __post_init__(self):
        if int(self.n) < 1:
            raise SpaceError("n must be a positive integer")

    @property
    def half_dim(self) -> int:
        return self.n

    @property
    def m(self) -> Optional[int]:
        return self.n // 2 if self.n % 2 == 0 else None

    @property
    def dim_reduced(self) -> int:
        """Real dimension of the reduction at zero."""
        return 2 * self.n - 6

    def sign_vectors(self) -> list[tuple[int, ...]]:
        return list(product((1, -1), repeat=self.n))

    def balanced_sign_vectors(self) -> list[tuple[int, ...]]:
        return [a for a in self.sign_vectors() if sum(a) == 0]

    def torus_moment_values(self) -> list[int]:
        return sorted({sum(a) for a in self.sign_vectors()})

    def stabilizer_weights(self) -> tuple[int, ...]:
        """Torus weights on the tangent space at a balanced fixed point."""
        if self.m is None:
            return ()
        return tuple([2] * self.m + [-2] * self.m)

    def slice_weights(self) -> tuple[int, ...]:
        """Torus weights on the normal slice at a balanced point.

        The tangent weights minus one ``+2``/``-2`` pair spanned by the orbit
        directions and the image of the moment differential.
        """
        if self.m is None:
            return ()
        return tuple([2] * (self.m - 1) + [-2] * (self.m - 1))


def product_p1_su2(n: int) -> SU2ProductSpace:
    return SU2ProductSpace(int(n))

"""The cosupport conditions C(j) for circle stabilizers.

At a fixed component ``F`` in the zero level with ``p`` positive and ``q``
negative normal weights, the normal slice ``W`` has

* ``W // C*`` of real dimension ``2(p + q - 1)``,
* null cone ``{x : 0 in closure(C* x)} = W+ u W-`` of real codimension
  ``2 min(p, q)``,

and C(j) asks ``dim(W // C*) + j < 2 codim(null cone)``.  For ``j = 0`` this
is ``max(p, q) + min(p, q) - 1 < 2 min(p, q)``, i.e. ``p == q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .space_model import CircleSpace, components_in_Z


@dataclass(frozen=True)
class ComponentBalance:
    label: str
    p_pos: int
    q_neg: int
    lhs: int
    rhs: int
    holds: bool


@dataclass(frozen=True)
class BalanceVerdict:
    j: int
    per_component: tuple[ComponentBalance, ...]

    @property
    def overall(self) -> bool:
        return all(c.holds for c in self.per_component)


def null_cone_codim(weights: Sequence[int]) -> int:
    """Complex codimension of ``W+ u W-`` inside the weight space."""
    p = sum(1 for w in weights if w > 0)
    q = sum(1 for w in weights if w < 0)
    return min(p, q)


def cj_for_weights(weights: Sequence[int], j: int, label: str = "") -> ComponentBalance:
    p = sum(1 for w in weights if w > 0)
    q = sum(1 for w in weights if w < 0)
    lhs = 2 * (p + q - 1) + j
    rhs = 2 * (2 * null_cone_codim(weights))
    return ComponentBalance(label, p, q, lhs, rhs, lhs < rhs)


def check_cj(space: CircleSpace, j: int) -> BalanceVerdict:
    rows = tuple(cj_for_weights(F.normal_weights, j, F.label) for F in components_in_Z(space))
    return BalanceVerdict(j, rows)


def is_almost_balanced(space: CircleSpace) -> bool:
    return check_cj(space, 0).overall

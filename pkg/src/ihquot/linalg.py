"""Exact row reduction over the rationals.

Matrices are lists of rows of :class:`~fractions.Fraction`.  Pivots are
chosen as the first nonzero entry scanning rows top to bottom, so results
are reproducible for identical inputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def as_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def rref(rows: Sequence[Sequence[object]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = as_matrix(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[object]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[object]], ncols: int) -> Matrix:
    """Basis of ``{v : rows @ v = 0}`` as a list of vectors of length ``ncols``.

    ``ncols`` is needed when ``rows`` is empty (every vector is in the kernel).
    """
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def independent_subset(vectors: Sequence[Sequence[object]]) -> list[int]:
    """Indices of a maximal linearly independent subset, greedy in order."""
    chosen: list[int] = []
    kept: Matrix = []
    for i, v in enumerate(vectors):
        trial = kept + [list(map(Fraction, v))]
        if rank(trial) > len(kept):
            kept = trial
            chosen.append(i)
    return chosen


def transpose(rows: Sequence[Sequence[object]]) -> Matrix:
    return [list(col) for col in zip(*rows)] if rows else []

"""Graded dimension polynomials and truncated power series in ``t``.

Coefficients are exact :class:`fractions.Fraction` values keyed by
cohomological degree.  A series may carry a ``truncation`` degree; every
coefficient above it is *unknown*, not zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional


class TruncationError(ValueError):
    """Raised when a question needs coefficients beyond a known truncation."""


def _min_trunc(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class PoincarePolynomial:
    __slots__ = ("_coeffs", "truncation")

    def __init__(self, coeffs: Mapping[int, object] | None = None,
                 truncation: Optional[int] = None):
        if truncation is not None and truncation < 0:
            raise ValueError("truncation degree must be nonnegative")
        clean = {}
        for deg, c in (coeffs or {}).items():
            deg = int(deg)
            if deg < 0:
                raise ValueError(f"negative degree {deg}")
            c = Fraction(c)
            if c == 0:
                continue
            if truncation is not None and deg > truncation:
                continue
            clean[deg] = c
        object.__setattr__(self, "_coeffs", dict(sorted(clean.items())))
        object.__setattr__(self, "truncation", truncation)

    def __setattr__(self, name, value):
        raise AttributeError("PoincarePolynomial is immutable")

    # construction helpers

    @classmethod
    def from_list(cls, coeffs: Iterable[object], step: int = 2,
                  truncation: Optional[int] = None) -> "PoincarePolynomial":
        """``from_list([1, 1, 1])`` is ``1 + t^2 + t^4``."""
        return cls({step * i: c for i, c in enumerate(coeffs)}, truncation)

    @classmethod
    def monomial(cls, degree: int, coeff: object = 1) -> "PoincarePolynomial":
        return cls({degree: coeff})

    @classmethod
    def projective(cls, k: int) -> "PoincarePolynomial":
        """Poincare polynomial of complex projective space of dimension ``k``."""
        if k < 0:
            return cls()
        return cls.from_list([1] * (k + 1))

    @classmethod
    def from_triples(cls, triples, truncation: Optional[int] = None):
        return cls({int(d): Fraction(int(n), int(q)) for d, n, q in triples}, truncation)

    # access

    @property
    def is_exact(self) -> bool:
        return self.truncation is None

    def coefficient(self, degree: int) -> Fraction:
        if self.truncation is not None and degree > self.truncation:
            raise TruncationError(
                f"coefficient of t^{degree} unknown (truncated at {self.truncation})")
        return self._coeffs.get(degree, Fraction(0))

    def __getitem__(self, degree: int) -> Fraction:
        return self.coefficient(degree)

    def items(self):
        return self._coeffs.items()

    def degrees(self):
        return list(self._coeffs)

    @property
    def top_degree(self) -> int:
        """Largest degree with nonzero stored coefficient, ``-1`` for zero."""
        return max(self._coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def evaluate(self, t: object) -> Fraction:
        if not self.is_exact:
            raise TruncationError("cannot evaluate a truncated series")
        t = Fraction(t)
        return sum((c * t ** d for d, c in self._coeffs.items()), Fraction(0))

    def truncate(self, degree: int) -> "PoincarePolynomial":
        return PoincarePolynomial(self._coeffs, _min_trunc(self.truncation, degree))

    def as_exact(self) -> "PoincarePolynomial":
        """Drop truncation metadata; caller vouches that the tail is zero."""
        return PoincarePolynomial(self._coeffs)

    def has_only_even_degrees(self) -> bool:
        return all(d % 2 == 0 for d in self._coeffs)

    def has_nonnegative_integer_coefficients(self) -> bool:
        return all(c >= 0 and c.denominator == 1 for c in self._coeffs.values())

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            out[d] = out.get(d, 0) + c
        return PoincarePolynomial(out, _min_trunc(self.truncation, other.truncation))

    __radd__ = __add__

    def __neg__(self):
        return PoincarePolynomial({d: -c for d, c in self._coeffs.items()}, self.truncation)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        # a product coefficient at degree k is known iff k <= min over
        # factors of (truncation + lowest degree of the other factor)
        trunc = None
        if self.truncation is not None and not other.is_zero():
            trunc = self.truncation + min(other._coeffs)
        if other.truncation is not None and not self.is_zero():
            trunc = _min_trunc(trunc, other.truncation + min(self._coeffs))
        out: dict[int, Fraction] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                if trunc is not None and d1 + d2 > trunc:
                    continue
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return PoincarePolynomial(out, trunc)

    __rmul__ = __mul__

    def shift(self, degree: int) -> "PoincarePolynomial":
        """Multiply by ``t^degree``."""
        trunc = None if self.truncation is None else self.truncation + degree
        return PoincarePolynomial({d + degree: c for d, c in self._coeffs.items()}, trunc)

    # comparison

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        bound = _min_trunc(self.truncation, other.truncation)
        degs = set(self._coeffs) | set(other._coeffs)
        if bound is not None:
            degs = {d for d in degs if d <= bound}
        return all(self._coeffs.get(d, 0) == other._coeffs.get(d, 0) for d in degs)

    def __hash__(self):
        return hash((tuple(self._coeffs.items()), self.truncation))

    def agrees_up_to(self, other: "PoincarePolynomial", degree: int) -> bool:
        """Coefficientwise equality through ``degree``.

        Raises :class:`TruncationError` when either side does not know its
        coefficients that far.
        """
        other = _coerce(other)
        for side in (self, other):
            if side.truncation is not None and side.truncation < degree:
                raise TruncationError(
                    f"series truncated at {side.truncation}, cannot compare through {degree}")
        return all(self.coefficient(d) == other.coefficient(d) for d in range(degree + 1))

    # serialization

    def to_triples(self) -> list[list[int]]:
        return [[d, c.numerator, c.denominator] for d, c in self._coeffs.items()]

    def __repr__(self):
        tail = "" if self.truncation is None else f" + O(t^{self.truncation + 1})"
        return f"PoincarePolynomial({self}{tail})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in self._coeffs.items():
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if d == 0:
                body = str(mag)
            else:
                power = "t" if d == 1 else f"t^{d}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(value):
    if isinstance(value, PoincarePolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return PoincarePolynomial({0: value})
    return NotImplemented


ONE = PoincarePolynomial({0: 1})
ZERO = PoincarePolynomial()
ONE_MINUS_T2 = PoincarePolynomial({0: 1, 2: -1})


def add(a: PoincarePolynomial, b: PoincarePolynomial) -> PoincarePolynomial:
    return a + b


def mul(a: PoincarePolynomial, b: PoincarePolynomial) -> PoincarePolynomial:
    return a * b


def divide_by_one_minus_t2(p: PoincarePolynomial, out_truncation: int) -> PoincarePolynomial:
    """Power series quotient ``p / (1 - t^2)``.

    The result is exact (``truncation is None``) when ``p`` is exact and the
    quotient is a polynomial; otherwise it is truncated at
    ``out_truncation`` (or earlier, if ``p`` itself is truncated).
    """
    if out_truncation < 0:
        raise ValueError("out_truncation must be nonnegative")
    if p.is_zero() and p.is_exact:
        return PoincarePolynomial()
    # q_k = sum of p_j over j <= k with j = k (mod 2)
    if p.is_exact and p.evaluate(1) == 0 and p.evaluate(-1) == 0:
        top = p.top_degree
        quotient = {}
        running = [Fraction(0), Fraction(0)]
        for k in range(top - 1):
            running[k % 2] += p._coeffs.get(k, 0)
            quotient[k] = running[k % 2]
        return PoincarePolynomial(quotient)
    trunc = _min_trunc(out_truncation, p.truncation)
    quotient = {}
    running = [Fraction(0), Fraction(0)]
    for k in range(trunc + 1):
        running[k % 2] += p._coeffs.get(k, 0)
        quotient[k] = running[k % 2]
    return PoincarePolynomial(quotient, trunc)


def is_palindromic(p: PoincarePolynomial, top_degree: int) -> bool:
    if p.truncation is not None and p.truncation < top_degree:
        raise TruncationError(
            f"series truncated at {p.truncation}; palindrome about {top_degree} undecidable")
    if p.top_degree > top_degree:
        return False
    return all(p.coefficient(k) == p.coefficient(top_degree - k) for k in range(top_degree + 1))

"""Presented equivariant cohomology rings.

``PnClass``
    circle-equivariant cohomology of projective space,
    ``Q[x, b] / prod_a (x - a b)^{m_a}``, kept with ``x``-degree at most ``n``.
``SU2Class``
    torus-equivariant cohomology of ``(P^1)^n``,
    ``Q[a_1..a_n, b] / (a_i^2 = b^2)``, kept square-free in the ``a_i``.

Restriction conventions: on the component of projective space spanned by
the weight-``a`` coordinates, ``x`` restricts to ``xi + a b`` with ``xi`` that
component's own hyperplane class; at a torus-fixed sign vector of
``(P^1)^n``, ``a_i`` restricts to ``a_i b``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .expr import RawPoly, generators, parse_class


class RingError(ValueError):
    pass


def _clean(terms):
    return {k: Fraction(v) for k, v in terms.items() if v != 0}


def _binomial_expand(shift: Fraction, k: int):
    """``(xi + shift b)^k`` as ``{(i, k - i): coeff}``."""
    return {(i, k - i): comb(k, i) * shift ** (k - i) for i in range(k + 1)}


class PnClass:
    """A class in the circle-equivariant cohomology of ``P^n``.

    ``terms`` maps ``(k, l)`` (meaning ``x^k b^l``) to rationals.
    """

    __slots__ = ("weights", "terms")

    def __init__(self, weights: Sequence[int], terms: Mapping[tuple[int, int], object] | None = None):
        self.weights = tuple(int(w) for w in weights)
        self.terms = self._reduce(_clean(terms or {}))

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    def _relation_tail(self):
        # prod_i (x - w_i b) = x^{n+1} + sum_{k<=n} r_k x^k b^{n+1-k}
        poly = {0: Fraction(1)}  # coefficient list by x-degree, b-degree implied
        for w in self.weights:
            nxt: dict[int, Fraction] = {}
            for k, c in poly.items():
                nxt[k + 1] = nxt.get(k + 1, 0) + c
                nxt[k] = nxt.get(k, 0) - w * c
            poly = nxt
        top = len(self.weights)
        return {k: c for k, c in poly.items() if k < top and c != 0}

    def _reduce(self, terms):
        top = len(self.weights)
        if all(k < top for k, _ in terms):
            return terms
        tail = self._relation_tail()
        terms = dict(terms)
        while True:
            high = [key for key in terms if key[0] >= top]
            if not high:
                break
            k, l = max(high)
            c = terms.pop((k, l))
            # x^k b^l = x^{k-top} b^l * x^top, and x^top = -sum r_j x^j b^{top-j}
            for j, r in tail.items():
                key = (k - top + j, l + top - j)
                terms[key] = terms.get(key, 0) - c * r
                if terms[key] == 0:
                    del terms[key]
        return terms

    @classmethod
    def x(cls, weights):
        return cls(weights, {(1, 0): 1})

    @classmethod
    def beta(cls, weights):
        return cls(weights, {(0, 1): 1})

    @classmethod
    def constant(cls, weights, c=1):
        return cls(weights, {(0, 0): c})

    @classmethod
    def from_raw(cls, weights, raw: RawPoly) -> "PnClass":
        bad = generators(raw) - {"x", "b"}
        if bad:
            raise RingError(f"generators {sorted(bad)} not available on projective space (use x, b)")
        terms: dict[tuple[int, int], Fraction] = {}
        for mono, c in raw.items():
            exps = dict(mono)
            key = (exps.get("x", 0), exps.get("b", 0))
            terms[key] = terms.get(key, 0) + c
        return cls(weights, terms)

    @classmethod
    def parse(cls, weights, text: str) -> "PnClass":
        return cls.from_raw(weights, parse_class(text))

    @classmethod
    def basis(cls, weights, degree: int) -> list["PnClass"]:
        """Normal-form monomials ``x^k b^l`` of real degree ``degree``."""
        if degree % 2:
            return []
        half = degree // 2
        n = len(weights) - 1
        return [cls(weights, {(k, half - k): 1}) for k in range(min(half, n) + 1)]

    def _check(self, other):
        if not isinstance(other, PnClass):
            return PnClass.constant(self.weights, other)
        if other.weights != self.weights:
            raise RingError("classes live on different spaces")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return PnClass(self.weights, out)

    __radd__ = __add__

    def __neg__(self):
        return PnClass(self.weights, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (k1, l1), c1 in self.terms.items():
            for (k2, l2), c2 in other.terms.items():
                key = (k1 + k2, l1 + l2)
                out[key] = out.get(key, 0) + c1 * c2
        return PnClass(self.weights, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = PnClass.constant(self.weights)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, PnClass) and self.weights == other.weights and self.terms == other.terms

    def __hash__(self):
        return hash((self.weights, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {2 * (k + l) for k, l in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) > 1:
            raise RingError("class is not homogeneous")
        return degs.pop() if degs else 0

    def coordinates(self, degree: int) -> list[Fraction]:
        """Coefficients on :meth:`basis` of the given degree."""
        half = degree // 2
        return [self.terms.get((k, half - k), Fraction(0)) for k in range(min(half, self.n) + 1)]

    def restrict(self, value: int) -> dict[tuple[int, int], Fraction]:
        """Restriction to the component at weight ``value``.

        Returns ``{(i, l): c}`` for ``xi^i b^l`` with ``xi^mult = 0``.
        """
        mult = Counter(self.weights)[value]
        if mult == 0:
            raise RingError(f"no fixed component at weight {value}")
        out: dict[tuple[int, int], Fraction] = {}
        for (k, l), c in self.terms.items():
            for (i, j), b in _binomial_expand(Fraction(value), k).items():
                if i >= mult:
                    continue
                key = (i, j + l)
                out[key] = out.get(key, 0) + c * b
        return _clean(out)

    def __repr__(self):
        return f"PnClass({self.weights}, {self})"

    def __str__(self):
        return _format_terms(
            ((c, [("x", k), ("b", l)]) for (k, l), c in sorted(self.terms.items(), reverse=True)))


class SU2Class:
    """A class in ``Q[a_1..a_n, b] / (a_i^2 = b^2)`` in square-free normal form.

    ``terms`` maps ``(S, k)`` with ``S`` a sorted tuple of indices (1-based)
    to the coefficient of ``a_S b^k``.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[tuple[int, ...], int], object] | None = None):
        self.n = int(n)
        cleaned = {}
        for (S, k), c in (terms or {}).items():
            S = tuple(sorted(S))
            if len(set(S)) != len(S):
                raise RingError("SU2Class terms must be square-free; use normal_form")
            if any(i < 1 or i > self.n for i in S):
                raise RingError(f"generator index out of range 1..{self.n}")
            cleaned[(S, k)] = cleaned.get((S, k), 0) + Fraction(c)
        self.terms = _clean(cleaned)

    @classmethod
    def normal_form(cls, n: int, raw: Mapping[tuple[tuple[int, int], ...], object] | Iterable) -> "SU2Class":
        """Reduce a polynomial given as ``{((i, e_i), ...), e_b): coeff}``.

        Each key is a pair ``(alpha_exponents, beta_exponent)`` where
        ``alpha_exponents`` lists ``(i, e)``; ``a_i^e`` becomes
        ``a_i^(e mod 2) b^(e - e mod 2)``.
        """
        out: dict[tuple[tuple[int, ...], int], Fraction] = {}
        for (alphas, eb), c in dict(raw).items():
            exps: dict[int, int] = {}
            for i, e in alphas:
                exps[i] = exps.get(i, 0) + e
            S = tuple(sorted(i for i, e in exps.items() if e % 2))
            k = eb + sum(e - e % 2 for e in exps.values())
            out[(S, k)] = out.get((S, k), 0) + Fraction(c)
        return cls(n, out)

    @classmethod
    def from_raw(cls, n: int, raw: RawPoly) -> "SU2Class":
        conv = {}
        for mono, c in raw.items():
            alphas, eb = [], 0
            for g, e in mono:
                if g == "b":
                    eb += e
                elif g.startswith("a"):
                    i = int(g[1:])
                    if i > n:
                        raise RingError(f"generator {g} out of range for n={n}")
                    alphas.append((i, e))
                else:
                    raise RingError(f"generator {g!r} not available on (P^1)^n (use a1..a{n}, b)")
            key = (tuple(sorted(alphas)), eb)
            conv[key] = conv.get(key, 0) + c
        return cls.normal_form(n, conv)

    @classmethod
    def parse(cls, n: int, text: str) -> "SU2Class":
        return cls.from_raw(n, parse_class(text))

    @classmethod
    def alpha(cls, n: int, i: int):
        return cls(n, {((i,), 0): 1})

    @classmethod
    def beta(cls, n: int, power: int = 1):
        return cls(n, {((), power): 1})

    @classmethod
    def constant(cls, n: int, c=1):
        return cls(n, {((), 0): c})

    @classmethod
    def omega(cls, n: int) -> "SU2Class":
        """The Kahler class ``a_1 + ... + a_n``."""
        return cls(n, {((i,), 0): 1 for i in range(1, n + 1)})

    def _check(self, other):
        if not isinstance(other, SU2Class):
            return SU2Class.constant(self.n, other)
        if other.n != self.n:
            raise RingError("classes live on different spaces")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return SU2Class(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return SU2Class(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        out: dict[tuple[tuple[int, ...], int], Fraction] = {}
        for (S1, k1), c1 in self.terms.items():
            s1 = set(S1)
            for (S2, k2), c2 in other.terms.items():
                common = s1.intersection(S2)
                S = tuple(sorted(s1.symmetric_difference(S2)))
                key = (S, k1 + k2 + 2 * len(common))
                out[key] = out.get(key, 0) + c1 * c2
        return SU2Class(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = SU2Class.constant(self.n)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, SU2Class) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {2 * len(S) + 2 * k for S, k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) > 1:
            raise RingError("class is not homogeneous")
        return degs.pop() if degs else 0

    @property
    def weyl_invariant(self) -> bool:
        """Invariant under ``b -> -b``: only even powers of ``b`` occur."""
        return all(k % 2 == 0 for _, k in self.terms)

    def restrict(self, signs: Sequence[int]) -> dict[int, Fraction]:
        """Restriction to a torus-fixed point, as ``{power of b: coeff}``."""
        if len(signs) != self.n:
            raise RingError(f"sign vector has length {len(signs)}, expected {self.n}")
        out: dict[int, Fraction] = {}
        for (S, k), c in self.terms.items():
            sign = 1
            for i in S:
                sign *= signs[i - 1]
            out[len(S) + k] = out.get(len(S) + k, 0) + sign * c
        return _clean(out)

    def __repr__(self):
        return f"SU2Class(n={self.n}, {self})"

    def __str__(self):
        def key(item):
            (S, k), _ = item
            return (-(len(S) + k), S, k)
        return _format_terms(
            ((c, [(f"a{i}", 1) for i in S] + [("b", k)]) for (S, k), c in sorted(self.terms.items(), key=key)))


def _format_terms(terms) -> str:
    parts = []
    for c, factors in terms:
        gens = [g if e == 1 else f"{g}^{e}" for g, e in factors if e]
        mag = abs(c)
        if not gens:
            body = str(mag)
        elif mag == 1:
            body = "*".join(gens)
        else:
            body = f"{mag}*" + "*".join(gens)
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def su2_basis(n: int, degree: int, weyl_invariant: bool = True) -> list[SU2Class]:
    """Normal-form monomials ``a_S b^k`` of the given real degree.

    Ordered by ``k`` ascending then ``S`` lexicographically.  With
    ``weyl_invariant`` only even ``k`` are kept.
    """
    from itertools import combinations
    if degree % 2:
        return []
    half = degree // 2
    out = []
    for k in range(half + 1):
        if weyl_invariant and k % 2:
            continue
        size = half - k
        if size > n:
            continue
        for S in combinations(range(1, n + 1), size):
            out.append(SU2Class(n, {(S, k): 1}))
    return out

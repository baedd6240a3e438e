"""Space specification documents.

A specification is a JSON object of one of three shapes::

    {"type": "linear_circle_pn", "weights": [1, 1, -1, 0]}

    {"type": "abstract_circle",
     "ambient_poincare": [[0, 1, 1], [2, 1, 1]],
     "half_dim": 1,
     "components": [
        {"label": "N", "poincare": [[0, 1, 1]], "moment_value": [1, 1],
         "normal_weights": [-2]},
        ...]}

    {"type": "su2_p1n", "n": 4}

Polynomials are lists of ``[degree, numerator, denominator]`` triples and
moment values are ``[numerator, denominator]`` pairs (a bare integer is
also accepted).  A JSON report produced by the command line tool is accepted
too: its ``"input"`` member is used.

Errors raise :class:`SpecError` carrying a field path such as
``$.components[1].normal_weights[0]``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .poincare import PoincarePolynomial
from .space_model import (CircleSpace, FixedComponent, SpaceError, SU2ProductSpace,
                          linear_pn, product_p1_su2)

SPACE_TYPES = ("linear_circle_pn", "abstract_circle", "su2_p1n")


class SpecError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _int(value, path) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(path, f"expected an integer, got {value!r}")
    return value


def _list(value, path) -> list:
    if not isinstance(value, list):
        raise SpecError(path, f"expected a list, got {type(value).__name__}")
    return value


def _field(obj: dict, key: str, path: str):
    if key not in obj:
        raise SpecError(path, f"missing field {key!r}")
    return obj[key]


def _poly(value, path) -> PoincarePolynomial:
    coeffs: dict[int, Fraction] = {}
    for i, triple in enumerate(_list(value, path)):
        p = f"{path}[{i}]"
        triple = _list(triple, p)
        if len(triple) != 3:
            raise SpecError(p, "expected [degree, numerator, denominator]")
        d, num, den = (_int(v, f"{p}[{k}]") for k, v in enumerate(triple))
        if d < 0:
            raise SpecError(f"{p}[0]", "degree must be nonnegative")
        if den == 0:
            raise SpecError(f"{p}[2]", "zero denominator")
        if d in coeffs:
            raise SpecError(f"{p}[0]", f"degree {d} repeated")
        coeffs[d] = Fraction(num, den)
    return PoincarePolynomial(coeffs)


def _rational(value, path) -> Fraction:
    if isinstance(value, list):
        if len(value) != 2:
            raise SpecError(path, "expected [numerator, denominator]")
        num, den = _int(value[0], f"{path}[0]"), _int(value[1], f"{path}[1]")
        if den == 0:
            raise SpecError(f"{path}[1]", "zero denominator")
        return Fraction(num, den)
    return Fraction(_int(value, path))


def rational_pair(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


def parse_space(obj: Any, path: str = "$"):
    """Build a space and its normalized echo from a decoded document."""
    if not isinstance(obj, dict):
        raise SpecError(path, "expected an object")
    if "type" not in obj and isinstance(obj.get("input"), dict):
        return parse_space(obj["input"], f"{path}.input")
    kind = _field(obj, "type", path)
    if kind not in SPACE_TYPES:
        raise SpecError(f"{path}.type", f"unknown type {kind!r}; expected one of {SPACE_TYPES}")
    try:
        if kind == "linear_circle_pn":
            weights = [_int(w, f"{path}.weights[{i}]")
                       for i, w in enumerate(_list(_field(obj, "weights", path), f"{path}.weights"))]
            try:
                space = linear_pn(weights)
            except SpaceError as exc:
                raise SpecError(f"{path}.weights", str(exc)) from None
        elif kind == "su2_p1n":
            space = product_p1_su2(_int(_field(obj, "n", path), f"{path}.n"))
        else:
            space = _abstract(obj, path)
    except SpaceError as exc:
        raise SpecError(path, str(exc)) from None
    return space, normalize(space)


def _abstract(obj: dict, path: str) -> CircleSpace:
    ambient = _poly(_field(obj, "ambient_poincare", path), f"{path}.ambient_poincare")
    half_dim = _int(_field(obj, "half_dim", path), f"{path}.half_dim")
    comps = []
    raw = _list(_field(obj, "components", path), f"{path}.components")
    for i, c in enumerate(raw):
        p = f"{path}.components[{i}]"
        if not isinstance(c, dict):
            raise SpecError(p, "expected an object")
        label = _field(c, "label", p)
        if not isinstance(label, str) or not label:
            raise SpecError(f"{p}.label", "expected a nonempty string")
        weights = [_int(w, f"{p}.normal_weights[{k}]")
                   for k, w in enumerate(_list(_field(c, "normal_weights", p), f"{p}.normal_weights"))]
        try:
            comps.append(FixedComponent(label, _poly(_field(c, "poincare", p), f"{p}.poincare"),
                                        _rational(_field(c, "moment_value", p), f"{p}.moment_value"),
                                        tuple(weights)))
        except SpaceError as exc:
            raise SpecError(p, str(exc)) from None
    return CircleSpace(ambient, tuple(comps), half_dim)


def normalize(space) -> dict:
    if isinstance(space, SU2ProductSpace):
        return {"type": "su2_p1n", "n": space.n}
    if space.linear_weights is not None:
        return {"type": "linear_circle_pn", "weights": list(space.linear_weights)}
    return {
        "type": "abstract_circle",
        "ambient_poincare": space.ambient_poincare.to_triples(),
        "half_dim": space.half_dim,
        "components": [
            {"label": F.label, "poincare": F.poincare.to_triples(),
             "moment_value": rational_pair(F.moment_value),
             "normal_weights": list(F.normal_weights)}
            for F in space.components],
    }


def load_spec(path: str | Path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecError("$", f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError("$", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_space(obj)

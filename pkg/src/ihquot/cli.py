"""Command line front end.

Subcommands: ``series``, ``ih-circle``, ``balance``, ``su2-p1n`` and
``integrate``.  Inputs come from ``--spec FILE`` (repeatable) or inline
flags (``--weights 1,1,-1,0``, ``--n 6``).  ``--json`` switches to machine
output.  Exit status: 0 when every check passes, 1 on computation errors or
failed checks, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import linalg
from .balance import check_cj, cj_for_weights
from .circle_ih import (NonPolynomialResult, closed_form_for, intersection_poincare_circle,
                        is_dual, pairing_rank_series, singularity_data, v_dimension_series,
                        working_truncation)
from .expr import ExprError
from .localization import (CALIBRATION, LocalizationError, NonRegularLevel, abbv_integral,
                           kalkman_reduced_integral, su2_reduced_integral)
from .morse_series import (MorseError, default_truncation, equivariant_series_M,
                           equivariant_series_Z, morse_index)
from .poincare import PoincarePolynomial, TruncationError, divide_by_one_minus_t2
from .rings import PnClass, RingError, SU2Class
from .space_model import CircleSpace, SpaceError, SU2ProductSpace, components_in_Z, weight_counts
from .specfile import SpecError, load_spec, parse_space
from . import su2_p1n as su2


class UsageError(ValueError):
    """Input is well formed but not valid for the requested subcommand."""


COMPUTATION_ERRORS = (NonPolynomialResult, NonRegularLevel, LocalizationError, MorseError,
                      TruncationError, ArithmeticError)
INPUT_ERRORS = (SpecError, ExprError, UsageError, RingError, SpaceError)


def fmt(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def poly_section(p: PoincarePolynomial) -> dict:
    out = {"poincare": p.to_triples(), "text": str(p)}
    if p.truncation is not None:
        out["truncation"] = p.truncation
    return out


def table(columns, rows) -> dict:
    return {"columns": list(columns), "rows": [list(r) for r in rows]}


def matrix_section(mat) -> dict:
    rows = len(mat)
    cols = len(mat[0]) if mat else 0
    r = linalg.rank(mat)
    return {"matrix": [[fmt(v) for v in row] for row in mat], "shape": [rows, cols],
            "rank": r, "full_rank": rows == cols and r == rows}


class Report:
    def __init__(self, command: str, space_echo: dict):
        self.command = command
        self.input = space_echo
        self.parameters: dict[str, Any] = {"calibration": CALIBRATION}
        self.results: dict[str, Any] = {}
        self.checks: list[dict] = []

    def check(self, name: str, ok: bool, detail: str = ""):
        self.checks.append({"name": name, "pass": bool(ok), "detail": detail})

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_dict(self) -> dict:
        return {"command": self.command, "input": self.input, "parameters": self.parameters,
                "results": self.results, "checks": self.checks}

    def render(self) -> str:
        lines = [f"== {self.command} ==", f"input: {json.dumps(self.input)}"]
        for k, v in self.parameters.items():
            lines.append(f"{k}: {v}")
        for name, value in self.results.items():
            lines.append("")
            lines.append(f"[{name}]")
            lines.extend(_render_value(value))
        if self.checks:
            lines.append("")
            lines.append("[checks]")
            for c in self.checks:
                mark = "PASS" if c["pass"] else "FAIL"
                detail = f"  ({c['detail']})" if c["detail"] else ""
                lines.append(f"  {mark}  {c['name']}{detail}")
        return "\n".join(lines)


def _render_value(value) -> list[str]:
    if isinstance(value, dict) and "columns" in value:
        cells = [list(map(str, value["columns"]))] + [[_cell(v) for v in r] for r in value["rows"]]
        widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
        return ["  " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    if isinstance(value, dict) and "poincare" in value:
        tail = f"  + O(t^{value['truncation'] + 1})" if "truncation" in value else ""
        return [f"  {value['text']}{tail}", f"  {json.dumps(value['poincare'])}"]
    if isinstance(value, dict) and "matrix" in value:
        out = [f"  shape {value['shape'][0]}x{value['shape'][1]}, rank {value['rank']}, "
               f"full rank: {'yes' if value['full_rank'] else 'no'}"]
        out += ["  [" + ", ".join(row) + "]" for row in value["matrix"]]
        return out
    if isinstance(value, dict):
        out = []
        for k, v in value.items():
            sub = _render_value(v)
            if len(sub) == 1:
                out.append(f"  {k}: {sub[0].strip()}")
            else:
                out.append(f"  {k}:")
                out.extend("  " + s for s in sub)
        return out
    return [f"  {_cell(value)}"]


def _cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


# subcommands


def _circle(space, command) -> CircleSpace:
    if not isinstance(space, CircleSpace):
        raise UsageError(f"{command} needs a circle space, got an su2_p1n specification")
    return space


def _linear(space, command) -> CircleSpace:
    space = _circle(space, command)
    if space.linear_weights is None:
        raise UsageError(f"{command} with classes needs a linear_circle_pn specification")
    return space


def cmd_series(space, args, report: Report):
    space = _circle(space, "series")
    trunc = args.truncation if args.truncation is not None else default_truncation(space)
    report.parameters["truncation"] = trunc
    rows = []
    unstable = PoincarePolynomial()
    for F in space.components:
        idx = "-" if F.moment_value == 0 else morse_index(F)
        rows.append([F.label, fmt(F.moment_value), " ".join(map(str, F.normal_weights)), idx])
        if F.moment_value != 0:
            unstable = unstable + F.poincare.shift(idx)
    report.results["critical sets"] = table(["label", "moment", "normal weights", "index"], rows)
    series_M = equivariant_series_M(space, trunc)
    series_Z = equivariant_series_Z(space, trunc)
    report.results["P(M)"] = poly_section(space.ambient_poincare)
    report.results["P_S1(M)"] = poly_section(series_M)
    report.results["P_S1(Z)"] = poly_section(series_Z)
    report.check("P_S1(Z) has nonnegative integer coefficients",
                 series_Z.has_nonnegative_integer_coefficients())
    rebuilt = series_Z + divide_by_one_minus_t2(unstable, trunc)
    report.check("P_S1(Z) + unstable strata = P_S1(M)", rebuilt.agrees_up_to(series_M, trunc),
                 f"through degree {trunc}")
    report.check("Euler characteristic of fixed set = Euler characteristic of M",
                 space.fixed_euler_characteristic() == space.euler_characteristic(),
                 fmt(space.euler_characteristic()))


def cmd_ih_circle(space, args, report: Report):
    space = _circle(space, "ih-circle")
    report.parameters["working truncation"] = working_truncation(space)
    rows = []
    for F in components_in_Z(space):
        s = singularity_data(F)
        rows.append([s.component_label, s.d, s.e, s.perversity_n])
    report.results["singularities"] = table(["label", "d", "e", "n"], rows)
    ip = intersection_poincare_circle(space)
    report.results["intersection Poincare polynomial"] = poly_section(ip)
    report.check("palindromic of degree dim M0 with nonnegative integer coefficients",
                 is_dual(ip, space), f"dim M0 = {space.dim_reduced}")
    closed = closed_form_for(space)
    if closed is not None:
        p, q, r = weight_counts(space.linear_weights)
        match = closed == ip
        report.results["closed form"] = {"p,q,r": f"{p},{q},{r}", "matches closed form": match}
        report.check("matches closed form", match, f"(p,q,r)=({p},{q},{r})")
    if args.v_series:
        v = v_dimension_series(_linear(space, "--v-series"))
        report.results["V dimension series"] = poly_section(v)
        report.check("V dimension series = intersection Poincare polynomial", v == ip)
    if args.pairing:
        eps = args.epsilon if args.epsilon is not None else Fraction(1, 2) * _nearest(space)
        report.parameters["epsilon"] = fmt(eps)
        ranks = pairing_rank_series(_linear(space, "--pairing"), eps)
        report.results["pairing ranks"] = poly_section(ranks)
        report.check("pairing ranks = intersection Poincare polynomial", ranks == ip)


def _nearest(space: CircleSpace) -> Fraction:
    return min(abs(F.moment_value) for F in space.components if F.moment_value != 0)


def cmd_balance(space, args, report: Report):
    report.parameters["j"] = args.j
    if isinstance(space, SU2ProductSpace):
        if space.m is None:
            raise UsageError("odd n: the reduction has only finite stabilizers, nothing to check")
        weights = space.stabilizer_weights()
        rows_data = [cj_for_weights(weights, args.j, "balanced point")]
        overall = all(r.holds for r in rows_data)
    else:
        verdict = check_cj(_circle(space, "balance"), args.j)
        rows_data = list(verdict.per_component)
        overall = verdict.overall
    rows = [[r.label, r.p_pos, r.q_neg, r.lhs, r.rhs, r.holds] for r in rows_data]
    report.results["C(j) table"] = table(["label", "p'", "q'", "lhs", "rhs", "holds"], rows)
    name = "almost-balanced" if args.j == 0 else f"C({args.j})"
    report.results["verdict"] = {name: overall}
    if args.j == 0:
        report.check("C(0) agrees with equal positive/negative counts",
                     all(r.holds == (r.p_pos == r.q_neg) for r in rows_data))


def cmd_su2(space, args, report: Report):
    if not isinstance(space, SU2ProductSpace):
        raise UsageError("su2-p1n needs an su2_p1n specification or --n")
    n = space.n
    if n % 2 or n < 4:
        raise UsageError(f"su2-p1n needs even n >= 4 (got {n})")
    m = n // 2
    top = 4 * m - 6
    show_betti = args.betti or not args.pairing
    if show_betti:
        ring = [su2.su2_betti(n, r) for r in range(top + 1)]
        ih = su2.ih_table_su2(n)
        report.results["invariant ring dimensions"] = table(
            ["degree"] + list(range(top + 1)), [["dim"] + ring])
        report.results["IH Betti numbers"] = table(["degree"] + list(range(top + 1)), [["IH"] + ih])
        vdims = [len(su2.membership_basis_su2(n, r)) for r in range(top + 1)]
        report.results["V dimensions in H(M)"] = table(["degree"] + list(range(top + 1)), [["V"] + vdims])
        even = ih[::2]
        report.check("vanishes in odd degrees", all(v == 0 for v in ih[1::2]))
        report.check("palindromic about 2m-3", ih == ih[::-1], f"middle degree {2 * m - 3}")
        report.check("IH^(2m-3) = 0", ih[2 * m - 3] == 0)
        report.check("unimodal across even degrees", su2.is_unimodal(even))
        low = [r for r in range(top + 1) if r < 2 * m]
        report.check("V dimension = IH below degree 2m", all(vdims[r] == ih[r] for r in low),
                     f"degrees {low[0]}..{low[-1]}")
    if args.pairing:
        eps = args.epsilon if args.epsilon is not None else su2.default_epsilon(n)
        report.parameters["epsilon"] = fmt(eps)
        mats = {}
        for r in range(0, 2 * m - 3, 2):
            mat = su2.pairing_matrix_su2(n, r, eps)
            sec = matrix_section(mat)
            mats[f"IH^{r} x IH^{top - r}"] = sec
            report.check(f"pairing IH^{r} x IH^{top - r} nondegenerate", sec["full_rank"])
        report.results["pairing matrices"] = mats


def cmd_integrate(space, args, report: Report):
    if args.cls is None:
        raise UsageError("integrate needs --class")
    report.parameters["class"] = args.cls
    if isinstance(space, SU2ProductSpace):
        eta = SU2Class.parse(space.n, args.cls)
    else:
        space = _linear(space, "integrate")
        eta = PnClass.parse(space.linear_weights, args.cls)
    report.results["normal form"] = str(eta)
    total = abbv_integral(space, eta)
    report.results["integral over M"] = {str(e): fmt(c) for e, c in total.coefficients.items()} or "0"
    report.check("negative powers of b cancel", not total.has_negative_powers())
    if args.epsilon is not None:
        eps = args.epsilon
        report.parameters["epsilon"] = fmt(eps)
        if isinstance(space, SU2ProductSpace):
            value = su2_reduced_integral(space, eta, eps)
        else:
            value = kalkman_reduced_integral(space, eta, eps)
        report.results["reduced integral"] = fmt(value)


COMMANDS = {
    "series": cmd_series,
    "ih-circle": cmd_ih_circle,
    "balance": cmd_balance,
    "su2-p1n": cmd_su2,
    "integrate": cmd_integrate,
}


def _rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _weights_arg(text: str) -> list[int]:
    try:
        return [int(w) for w in text.split(",") if w.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", action="append", default=[], metavar="FILE",
                        help="space specification file (repeatable)")
    common.add_argument("--weights", type=_weights_arg,
                        help="linear circle action on projective space, e.g. 1,1,-1,0 "
                             "(use --weights=-1,1 when the list starts with a minus sign)")
    common.add_argument("--n", type=int, help="number of projective-line factors for su2_p1n")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="ihquot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("series", parents=[common], help="equivariant Morse series")
    p.add_argument("--truncation", type=int)
    p = sub.add_parser("ih-circle", parents=[common], help="IH of circle reductions")
    p.add_argument("--v-series", action="store_true", help="also compute membership dimensions")
    p.add_argument("--pairing", action="store_true", help="also compute pairing ranks")
    p.add_argument("--epsilon", type=_rational_arg)
    p = sub.add_parser("balance", parents=[common], help="conditions C(j)")
    p.add_argument("--j", type=int, default=0)
    p = sub.add_parser("su2-p1n", parents=[common], help="SU(2) on (P^1)^n")
    p.add_argument("--betti", action="store_true")
    p.add_argument("--pairing", action="store_true")
    p.add_argument("--epsilon", type=_rational_arg)
    p = sub.add_parser("integrate", parents=[common], help="fixed-point integration")
    p.add_argument("--class", dest="cls", help='class expression, e.g. "x^2*b" or "a1*a2"')
    p.add_argument("--epsilon", type=_rational_arg)
    return parser


def _inputs(args):
    inline = []
    if args.weights is not None:
        inline.append(("--weights", {"type": "linear_circle_pn", "weights": args.weights}))
    if args.n is not None:
        inline.append(("--n", {"type": "su2_p1n", "n": args.n}))
    if not inline and not args.spec:
        raise UsageError("give --spec FILE, --weights or --n")
    out = []
    for name, obj in inline:
        out.append((name, lambda obj=obj: parse_space(obj, "$")))
    for path in args.spec:
        out.append((path, lambda path=path: load_spec(path)))
    return out


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> tuple[int, list[Report]]:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), []
    try:
        sources = _inputs(args)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2, []
    status = 0
    reports: list[Report] = []
    for name, loader in sources:
        try:
            space, echo = loader()
            report = Report(args.command, echo)
            COMMANDS[args.command](space, args, report)
        except INPUT_ERRORS as exc:
            print(f"error: {name}: {exc}", file=err)
            status = max(status, 2)
            continue
        except COMPUTATION_ERRORS + (ValueError,) as exc:
            print(f"error: {name}: {exc}", file=err)
            status = max(status, 1)
            continue
        reports.append(report)
        if not report.ok:
            status = max(status, 1)
    if args.json:
        docs = [r.to_dict() for r in reports]
        payload = docs[0] if len(docs) == 1 and len(sources) == 1 else docs
        if docs or len(sources) > 1:
            print(json.dumps(payload, indent=2, sort_keys=False), file=out)
    elif reports:
        print("\n\n".join(r.render() for r in reports), file=out)
    return status, reports


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())

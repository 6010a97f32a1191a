"""Command-line front end: ``orientpoly <subcommand> GRAPH [options]``.

Exit status is 0 on success, 1 when ``verify`` finds a failing identity and
2 on any error (bad input, hypothesis violation, enumeration guard).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction

from . import counting_polynomials as cp
from . import orientations as orient_mod
from . import tensions as tens_mod
from .arrangements import characteristic_polynomial, coloring_poset, tension_poset
from .errors import ContractViolation, GraphParseError, GuardExceeded, InterpolationInconsistencyError
from .graph_core import rank_profile, read_graph
from .orientations import Orientation, classify, enumerate_orientations
from .polynomial import RationalPolynomial, format_fraction
from .tensions import BoxCountMode, TensionVector

TABLE_ARGS = range(0, 6)


@contextlib.contextmanager
def _unguarded(active: bool):
    if not active:
        yield
        return
    saved = (orient_mod.ORIENTATION_GUARD, tens_mod.BOX_GUARD, cp.COLORING_GUARD, cp.SUBSET_GUARD)
    orient_mod.ORIENTATION_GUARD = tens_mod.BOX_GUARD = cp.COLORING_GUARD = cp.SUBSET_GUARD = float("inf")
    try:
        yield
    finally:
        orient_mod.ORIENTATION_GUARD, tens_mod.BOX_GUARD, cp.COLORING_GUARD, cp.SUBSET_GUARD = saved


def _num(x: Fraction) -> str:
    return format_fraction(Fraction(x))


def _poly_block(name: str, p: RationalPolynomial) -> list[str]:
    vals = [_num(p(q)) for q in TABLE_ARGS]
    width = max(len(v) for v in vals + [str(q) for q in TABLE_ARGS])
    return [
        f"{name} = {p}",
        "coefficients: [" + ", ".join(format_fraction(c) for c in p.coeffs) + "]",
        "q:     " + " ".join(str(q).rjust(width) for q in TABLE_ARGS),
        "value: " + " ".join(v.rjust(width) for v in vals),
    ]


def _poly_json(p: RationalPolynomial) -> dict:
    return {**p.to_json(), "values": {str(q): _num(p(q)) for q in TABLE_ARGS}}


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.data: dict = {}

    def poly(self, key: str, name: str, p: RationalPolynomial):
        if self.lines:
            self.lines.append("")
        self.lines.extend(_poly_block(name, p))
        self.data[key] = _poly_json(p)

    def render(self) -> str:
        if self.as_json:
            return json.dumps(self.data, indent=2, sort_keys=False)
        return "\n".join(self.lines)


# ---------------------------------------------------------------- subcommands


def cmd_info(g, args, out: Output):
    k, r, nul = rank_profile(g)
    rows = [("vertices", g.n), ("edges", g.m), ("components", k), ("rank", r), ("nullity", nul)]
    out.lines += [f"{a}: {b}" for a, b in rows]
    out.lines.append("loops: " + (" ".join(map(str, g.loops)) if g.loops else "none"))
    out.data.update(dict(rows), loops=list(g.loops))


def cmd_chromatic(g, args, out):
    out.poly("chromatic", "chi(t)", cp.chromatic_polynomial(g, args.method))


def cmd_tension(g, args, out):
    if args.integral:
        p = cp.integral_tension_polynomial(g, closed=args.closed)
        out.poly("integral_closed" if args.closed else "integral", "tau_Z_bar(t)" if args.closed else "tau_Z(t)", p)
    else:
        p = cp.closed_modular_tension_polynomial(g) if args.closed else cp.modular_tension_polynomial(g)
        out.poly("modular_closed" if args.closed else "modular", "tau_bar(t)" if args.closed else "tau(t)", p)


def cmd_tutte(g, args, out):
    T = cp.tutte_polynomial(g, args.method)
    out.lines.append(f"T(x,y) = {T}")
    out.lines.append("T(1,0) = " + _num(T(1, 0)))
    out.data["tutte"] = T.to_json()
    out.data["T_1_0"] = _num(T(1, 0))
    out.poly("tutte_y0", "T(t,0)", T.at_y(0, var="t"))


def cmd_orientations(g, args, out):
    scope = "acyclic" if args.acyclic else "all"
    label = "acyclic orientations" if args.acyclic else "orientations"
    if args.classes:
        cls = classify(g, scope)
        for i, c in enumerate(cls.classes):
            out.lines.append(f"class {i} ({len(c)}): " + " ".join(map(str, c)))
        total = sum(cls.sizes)
        out.lines.append(f"{total} {label} in {len(cls)} classes")
        out.data.update(cls.to_json(), count=total)
    else:
        members = list(enumerate_orientations(g, acyclic_only=args.acyclic))
        out.lines += [str(o) for o in members]
        out.lines.append(f"{len(members)} {label}")
        out.data.update(scope=scope, orientations=[str(o) for o in members], count=len(members))


def cmd_ehrhart(g, args, out):
    eps = Orientation.parse(args.orientation)
    polys = cp.per_orientation_polynomials(g, eps)
    out.data["orientation"] = str(eps)
    names = {
        "chromatic_open": "chi(eps;t)",
        "chromatic_closed": "chi_bar(eps;t)",
        "tension_open": "tau_Z(eps;t)",
        "tension_closed": "tau_Z_bar(eps;t)",
    }
    for key, p in polys._asdict().items():
        out.poly(key, names[key], p)


def cmd_arrangement(g, args, out):
    poset = tension_poset(g) if args.tension else coloring_poset(g)
    mu = poset.mobius
    for f in poset:
        out.lines.append(f"rank {f.rank}  mu {mu[f]:>3}  {f}")
    out.data["poset"] = poset.to_json()
    out.poly("characteristic", "char(t)", characteristic_polynomial(poset))


def cmd_count(g, args, out):
    q = args.modulus
    if args.box:
        if not args.orientation:
            raise ContractViolation("--box needs --orientation")
        eps = Orientation.parse(args.orientation)
        value = tens_mod.count_box_tensions(g, eps, q, BoxCountMode(args.box), force=args.force)
        key = args.box
    elif args.integral:
        value, key = tens_mod.count_integral_nowhere_zero(g, q, force=args.force), "integral_nowhere_zero"
    elif args.colorings:
        value, key = cp.count_proper_colorings(g, q), "proper_colorings"
    else:
        value, key = tens_mod.count_modular_nowhere_zero(g, q, force=args.force), "modular_nowhere_zero"
    out.lines.append(f"{key}(q={q}) = {value}")
    out.data.update(kind=key, modulus=q, count=value)


def cmd_lift(g, args, out):
    q = args.modulus
    eps = Orientation.parse(args.orientation) if args.orientation else Orientation.reference(g)
    ft = TensionVector(tuple(int(v) for v in args.values.replace(",", " ").split()), q)
    f = tens_mod.lift_modular_tension(g, eps, ft)
    out.lines.append(f"residues: {ft}")
    out.lines.append(f"lift:     {f}")
    out.data.update(orientation=str(eps), residues=ft.to_json(), lift=f.to_json())
    if all(ft.values):
        fiber = sorted(tens_mod.modq_fiber(g, eps, f, q))
        out.lines.append(f"fiber ({len(fiber)}):")
        out.lines += [f"  {h}" for h in fiber]
        out.data["fiber"] = [h.to_json() for h in fiber]


def cmd_verify(g, args, out):
    report = cp.verify_identities(g)
    out.lines.extend(str(c) for c in report)
    n_fail = len(report.failures())
    out.lines.append(f"{len(report.checks) - n_fail}/{len(report.checks)} identities hold")
    out.data.update(report.to_json())
    return 0 if report.all_passed else 1


COMMANDS = {
    "info": cmd_info,
    "chromatic": cmd_chromatic,
    "tension": cmd_tension,
    "tutte": cmd_tutte,
    "orientations": cmd_orientations,
    "ehrhart": cmd_ehrhart,
    "arrangement": cmd_arrangement,
    "count": cmd_count,
    "lift": cmd_lift,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("graph", help="edge-list file (one 'u v' pair per line)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--force", action="store_true", help="lift the enumeration guards")

    p = argparse.ArgumentParser(prog="orientpoly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("info", parents=[common], help="vertex/edge counts and rank profile")
    s = sub.add_parser("chromatic", parents=[common], help="chromatic polynomial")
    s.add_argument("--method", default="interpolation", choices=["interpolation", "deletion_contraction"])

    s = sub.add_parser("tension", parents=[common], help="modular or integral tension polynomial")
    kind = s.add_mutually_exclusive_group()
    kind.add_argument("--modular", action="store_true", help="tensions with values in Z_q (default)")
    kind.add_argument("--integral", action="store_true", help="integral tensions with |f| < q")
    s.add_argument("--closed", action="store_true", help="the closed pair-count companion")

    s = sub.add_parser("tutte", parents=[common], help="Tutte polynomial")
    s.add_argument("--method", default="deletion_contraction", choices=["deletion_contraction", "subset_expansion"])

    s = sub.add_parser("orientations", parents=[common], help="list orientations")
    s.add_argument("--acyclic", action="store_true")
    s.add_argument("--classes", action="store_true", help="group into cut-equivalence classes")

    s = sub.add_parser("ehrhart", parents=[common], help="per-orientation polynomials")
    s.add_argument("--orientation", required=True, help="sign string such as '+-+'")

    s = sub.add_parser("arrangement", parents=[common], help="intersection poset and characteristic polynomial")
    kind = s.add_mutually_exclusive_group()
    kind.add_argument("--coloring", action="store_true", help="colouring arrangement (default)")
    kind.add_argument("--tension", action="store_true", help="tension arrangement")

    s = sub.add_parser("count", parents=[common], help="raw counts at one argument")
    s.add_argument("--modulus", "-q", type=int, required=True)
    kind = s.add_mutually_exclusive_group()
    kind.add_argument("--modular", action="store_true", help="nowhere-zero Z_q tensions (default)")
    kind.add_argument("--integral", action="store_true", help="nowhere-zero integral q-tensions")
    kind.add_argument("--colorings", action="store_true", help="proper q-colourings")
    kind.add_argument("--box", choices=[m.value for m in BoxCountMode], help="box count for --orientation")
    s.add_argument("--orientation")

    s = sub.add_parser("lift", parents=[common], help="lift a Z_q tension to an integral q-tension")
    s.add_argument("--modulus", "-q", type=int, required=True)
    s.add_argument("--values", required=True, help="residues by edge id, e.g. '3 4 2'")
    s.add_argument("--orientation")

    sub.add_parser("verify", parents=[common], help="check every identity")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.json)
    try:
        g = read_graph(args.graph)
        with _unguarded(args.force):
            status = COMMANDS[args.command](g, args, out) or 0
    except (ContractViolation, GraphParseError, GuardExceeded, InterpolationInconsistencyError, OSError) as exc:
        if isinstance(exc, GuardExceeded):
            print(f"error: {exc} (rerun with --force to override)", file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out.render())
    return status


if __name__ == "__main__":
    sys.exit(main())

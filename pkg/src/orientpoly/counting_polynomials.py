"""Counting polynomials by exact interpolation, and the identities tying them together.

Every polynomial here is recovered from raw lattice-point counts at the
smallest admissible arguments ``1 .. degree + 1`` plus a few extra probes;
the extra probes make the interpolation over-determined so a counting bug
surfaces as :class:`~orientpoly.errors.InterpolationInconsistencyError`.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, partial
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import ContractViolation, GuardExceeded
from .graph_core import MultiGraph, is_bridge, minor, rank_profile, subset_rank
from .orientations import Orientation, check_orientation, classify, enumerate_orientations, is_acyclic
from .polynomial import BivariatePolynomial, RationalPolynomial, interpolate
from .tensions import (
    BoxCountMode,
    count_box_tensions,
    count_integral_nowhere_zero,
    count_modular_nowhere_zero,
)

#: probes beyond the minimum needed to pin down the polynomial
EXTRA_PROBES = 3
#: refuse vertex-colouring boxes with more points than this
COLORING_GUARD = 10**7
#: refuse subset expansion beyond this many edges
SUBSET_GUARD = 20

WORKERS_ENV = "ORIENTPOLY_WORKERS"

T = RationalPolynomial.variable("t")


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def probe(count: Callable[[int], int], args: Sequence[int]) -> list[tuple[int, int]]:
    """Evaluate ``count`` at every argument, fanning out when workers are configured.

    Results come back in argument order, so output does not depend on the
    worker count.
    """
    args = list(args)
    workers = worker_count()
    if workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(args))) as pool:
            values = list(pool.map(count, args))
    else:
        values = [count(a) for a in args]
    return list(zip(args, values))


def _fit(count, degree: int, start: int = 1) -> RationalPolynomial:
    args = range(start, start + degree + 1 + EXTRA_PROBES)
    return interpolate(probe(count, args), degree)


# ---------------------------------------------------------------- colourings


def _coloring_grid(n: int, q: int) -> np.ndarray:
    if q ** n > COLORING_GUARD:
        raise GuardExceeded(f"{q}^{n} vertex colourings exceed the guard of {COLORING_GUARD}")
    return _grid(n, q)


@lru_cache(maxsize=32)
def _grid(n: int, q: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    axes = np.meshgrid(*([np.arange(1, q + 1)] * n), indexing="ij")
    out = np.stack([a.ravel() for a in axes], axis=1)
    out.flags.writeable = False
    return out


def count_proper_colorings(g: MultiGraph, q: int) -> int:
    """Colourings ``V -> {1..q}`` with distinct colours across every edge."""
    if g.loops:
        return 0
    F = _coloring_grid(g.n, q)
    ok = np.ones(len(F), dtype=bool)
    for u, v in g.edges:
        ok &= F[:, u] != F[:, v]
    return int(ok.sum())


def count_orientation_colorings(g: MultiGraph, eps: Orientation, q: int, strict: bool) -> int:
    """Colourings ``V -> {1..q}`` decreasing along every arrow (weakly if not ``strict``)."""
    F = _coloring_grid(g.n, q)
    ok = np.ones(len(F), dtype=bool)
    for t, h in eps.arcs(g):
        ok &= (F[:, t] > F[:, h]) if strict else (F[:, t] >= F[:, h])
    return int(ok.sum())


def count_integral_colorings(g: MultiGraph, q: int) -> int:
    """Proper colourings with integer colours of absolute value below ``q``."""
    if g.loops:
        return 0
    F = _coloring_grid(g.n, 2 * q - 1) - q
    ok = np.ones(len(F), dtype=bool)
    for u, v in g.edges:
        ok &= F[:, u] != F[:, v]
    return int(ok.sum())


def count_chromatic_pairs(g: MultiGraph, q: int) -> int:
    """Pairs (acyclic orientation, weakly compatible colouring ``V -> {1..q}``).

    Counted colouring by colouring: arrows across colour classes are forced
    downhill and cannot close a circuit, so the compatible acyclic
    orientations are products of acyclic orientations inside each class.
    """
    g.require_loopless("count_chromatic_pairs")
    table = _induced_acyclic_counts(g)
    F = _coloring_grid(g.n, q)
    weights = (1 << np.arange(g.n, dtype=np.int64))
    total = np.ones(len(F), dtype=object)
    for c in range(1, q + 1):
        masks = (F == c).astype(np.int64) @ weights
        total *= table[masks]
    return int(total.sum())


@lru_cache(maxsize=64)
def _induced_acyclic_counts(g: MultiGraph) -> np.ndarray:
    """Acyclic orientation counts of every induced subgraph, indexed by vertex bitmask."""
    table = np.empty(1 << g.n, dtype=object)
    for mask in range(1 << g.n):
        inside = [(u, v) for u, v in g.edges if mask >> u & 1 and mask >> v & 1]
        h = MultiGraph(g.n, tuple(inside))
        table[mask] = sum(1 for _ in enumerate_orientations(h, acyclic_only=True))
    return table


# ---------------------------------------------------------------- polynomials


def _chromatic_dc(g: MultiGraph) -> RationalPolynomial:
    memo: dict = {}

    def rec(h: MultiGraph) -> RationalPolynomial:
        key = h.key()
        if key in memo:
            return memo[key]
        if h.loops:
            out = RationalPolynomial([])
        elif not h.edges:
            out = T ** h.n
        else:
            out = rec(minor(h, 0, "delete")) - rec(minor(h, 0, "contract"))
        memo[key] = out
        return out

    return rec(g)


def chromatic_polynomial(g: MultiGraph, method: str = "interpolation") -> RationalPolynomial:
    """Chromatic polynomial via colouring counts or the deletion-contraction recursion."""
    if method == "interpolation":
        g.require_loopless("chromatic_polynomial (interpolation)")
        return _fit(partial(count_proper_colorings, g), g.n)
    if method in ("deletion_contraction", "deletion-contraction"):
        return _chromatic_dc(g)
    raise ContractViolation(f"unknown method {method!r}")


def modular_tension_polynomial(g: MultiGraph) -> RationalPolynomial:
    g.require_loopless("modular_tension_polynomial")
    return _fit(partial(count_modular_nowhere_zero, g), rank_profile(g).rank)


def _closed_integral_count(g: MultiGraph, acyclic: Sequence[Orientation], q: int) -> int:
    return sum(count_box_tensions(g, eps, q, BoxCountMode.NONNEG_CLOSED) for eps in acyclic)


def integral_tension_polynomial(g: MultiGraph, closed: bool = False) -> RationalPolynomial:
    """Integral tension polynomial, or its closed pair-count companion when ``closed``."""
    g.require_loopless("integral_tension_polynomial")
    r = rank_profile(g).rank
    if not closed:
        return _fit(partial(count_integral_nowhere_zero, g), r)
    acyclic = tuple(enumerate_orientations(g, acyclic_only=True))
    return _fit(partial(_closed_integral_count, g, acyclic), r)


def closed_modular_tension_polynomial(g: MultiGraph, classification=None) -> RationalPolynomial:
    """Pairs (class of acyclic orientations, nonnegative tension bounded by ``q``)."""
    g.require_loopless("closed_modular_tension_polynomial")
    if classification is None:
        classification = classify(g, "acyclic")
    reps = tuple(classification.representatives())
    return _fit(partial(_closed_integral_count, g, reps), rank_profile(g).rank)


def closed_chromatic_polynomial(g: MultiGraph) -> RationalPolynomial:
    g.require_loopless("closed_chromatic_polynomial")
    return _fit(partial(count_chromatic_pairs, g), g.n)


class OrientationPolynomials(NamedTuple):
    chromatic_open: RationalPolynomial
    chromatic_closed: RationalPolynomial
    tension_open: RationalPolynomial
    tension_closed: RationalPolynomial


def per_orientation_polynomials(g: MultiGraph, eps: Orientation) -> OrientationPolynomials:
    """Ehrhart-type polynomials of the colouring and tension polytopes of ``(g, eps)``."""
    g.require_loopless("per_orientation_polynomials")
    check_orientation(g, eps)
    if not is_acyclic(g, eps):
        raise ContractViolation(f"orientation {eps} is not acyclic")
    r = rank_profile(g).rank
    return OrientationPolynomials(
        _fit(partial(count_orientation_colorings, g, eps, strict=True), g.n),
        _fit(partial(count_orientation_colorings, g, eps, strict=False), g.n),
        _fit(partial(count_box_tensions, g, eps, mode=BoxCountMode.POSITIVE_OPEN), r),
        _fit(partial(count_box_tensions, g, eps, mode=BoxCountMode.NONNEG_CLOSED), r),
    )


# ---------------------------------------------------------------- Tutte

_X = BivariatePolynomial([[0], [1]])
_Y = BivariatePolynomial([[0, 1]])
_ONE = BivariatePolynomial([[1]])


def _tutte_subsets(g: MultiGraph) -> BivariatePolynomial:
    if g.m > SUBSET_GUARD:
        raise GuardExceeded(f"2^{g.m} edge subsets exceed the guard of 2^{SUBSET_GUARD}")
    r_full = rank_profile(g).rank
    terms: dict = {}
    for mask in range(1 << g.m):
        A = [e for e in range(g.m) if mask >> e & 1]
        rA = subset_rank(g, A)
        key = (r_full - rA, len(A) - rA)
        terms[key] = terms.get(key, 0) + 1
    # expand sum of (x-1)^i (y-1)^j
    out = BivariatePolynomial()
    xm1 = _X + BivariatePolynomial([[-1]])
    ym1 = _Y + BivariatePolynomial([[-1]])
    for (i, j), c in sorted(terms.items()):
        term = _ONE
        for _ in range(i):
            term = term * xm1
        for _ in range(j):
            term = term * ym1
        out = out + term * c
    return out


def _tutte_dc(g: MultiGraph) -> BivariatePolynomial:
    memo: dict = {}

    def rec(h: MultiGraph) -> BivariatePolynomial:
        key = h.key()
        if key in memo:
            return memo[key]
        if not h.edges:
            out = _ONE
        else:
            e = 0
            if h.is_loop(e):
                out = _Y * rec(minor(h, e, "delete"))
            elif is_bridge(h, e):
                out = _X * rec(minor(h, e, "contract"))
            else:
                out = rec(minor(h, e, "delete")) + rec(minor(h, e, "contract"))
        memo[key] = out
        return out

    return rec(g)


def tutte_polynomial(g: MultiGraph, method: str = "deletion_contraction") -> BivariatePolynomial:
    if method in ("deletion_contraction", "deletion-contraction"):
        return _tutte_dc(g)
    if method in ("subset_expansion", "subset-expansion"):
        return _tutte_subsets(g)
    raise ContractViolation(f"unknown method {method!r}")


# ---------------------------------------------------------------- identities


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def __str__(self):
        wit = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  [{wit}]" if wit else "")


@dataclass(frozen=True)
class IdentityReport:
    checks: tuple[IdentityCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> IdentityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __iter__(self):
        return iter(self.checks)

    def __str__(self):
        return "\n".join(map(str, self.checks))

    def to_json(self) -> dict:
        return {
            "all_passed": self.all_passed,
            "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness} for c in self.checks],
        }


def _sum(polys) -> RationalPolynomial:
    out = RationalPolynomial([])
    for p in polys:
        out = out + p
    return out


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def verify_identities(g: MultiGraph) -> IdentityReport:
    """Check every decomposition, reciprocity and counting identity on ``g``.

    Each side is computed by its own counting route and compared as an exact
    polynomial; nothing is sampled.
    """
    g.require_loopless("verify_identities")
    k, r, _ = rank_profile(g)
    n = g.n
    sign_v = (-1) ** n
    sign_r = (-1) ** r
    acyclic = list(enumerate_orientations(g, acyclic_only=True))
    classes = classify(g, "acyclic")
    reps = classes.representatives()
    per = {eps: per_orientation_polynomials(g, eps) for eps in acyclic}

    chi = chromatic_polynomial(g)
    chi_dc = chromatic_polynomial(g, "deletion_contraction")
    chi_bar = closed_chromatic_polynomial(g)
    tau = modular_tension_polynomial(g)
    tau_bar = closed_modular_tension_polynomial(g, classes)
    tau_z = integral_tension_polynomial(g)
    tau_z_bar = integral_tension_polynomial(g, closed=True)
    tutte = tutte_polynomial(g, "deletion_contraction")
    tutte_sub = tutte_polynomial(g, "subset_expansion")
    tutte_t0 = tutte.at_y(0, var="t")

    checks = []

    def add(name, ok, **wit):
        checks.append(IdentityCheck(name, bool(ok), wit))

    add("chromatic_methods_agree", chi == chi_dc, chi=str(chi))
    add("chromatic_open_decomposition", chi == _sum(p.chromatic_open for p in per.values()))
    add("chromatic_closed_decomposition", chi_bar == _sum(p.chromatic_closed for p in per.values()))
    add(
        "chromatic_orientation_reciprocity",
        all(p.chromatic_open.negate_variable() == sign_v * p.chromatic_closed for p in per.values()),
        orientations=len(per),
    )
    add("chromatic_reciprocity", chi.negate_variable() == sign_v * chi_bar)
    add(
        "chromatic_closed_at_one",
        all(p.chromatic_closed(1) == 1 for p in per.values()),
    )
    add("integral_tension_open_decomposition", tau_z == _sum(p.tension_open for p in per.values()), tau_Z=str(tau_z))
    add("integral_tension_closed_decomposition", tau_z_bar == _sum(p.tension_closed for p in per.values()))
    add(
        "integral_tension_orientation_reciprocity",
        all(p.tension_open.negate_variable() == sign_r * p.tension_closed for p in per.values()),
    )
    add("integral_tension_reciprocity", tau_z.negate_variable() == sign_r * tau_z_bar)
    add(
        "integral_tension_closed_at_zero",
        all(p.tension_closed(0) == 1 and p.tension_open(0) == sign_r for p in per.values()),
    )
    add("modular_tension_open_decomposition", tau == _sum(per[e].tension_open for e in reps), tau=str(tau))
    add("modular_tension_closed_decomposition", tau_bar == _sum(per[e].tension_closed for e in reps))
    add("modular_tension_reciprocity", tau.negate_variable() == sign_r * tau_bar)
    add("chromatic_tension_relation", chi == T ** k * tau)
    add(
        "tutte_tension_relation",
        tutte_t0 == tau_bar.shift(-1) and tutte_t0 == sign_r * tau.compose_linear(-1, 1),
        T_t0=str(tutte_t0),
    )
    add("tutte_methods_agree", tutte == tutte_sub)
    add(
        "acyclic_orientation_count",
        abs(chi(-1)) == len(acyclic) and abs(tau_z(0)) == len(acyclic),
        acyclic=len(acyclic),
        chi_at_minus_1=_num(chi(-1)),
        tau_Z_at_0=_num(tau_z(0)),
    )
    add(
        "cut_equivalence_class_count",
        sign_r * tau(0) == len(classes) == tutte(1, 0) == tau_bar(0),
        classes=len(classes),
        T_1_0=_num(tutte(1, 0)),
    )
    add(
        "integral_coloring_relation",
        all(count_integral_colorings(g, q) == chi(2 * q - 1) for q in (1, 2, 3)),
    )
    add(
        "degrees",
        chi.degree == n and chi.leading == 1 and tau.degree == r and tau_z.degree == r,
        deg_chi=chi.degree,
        deg_tau=tau.degree,
    )
    return IdentityReport(tuple(checks))

"""Intersection posets of the colouring and tension arrangements.

Flats are stored intrinsically: a colouring flat is a partition of the
vertices into connected blocks (colourings constant on blocks), a tension
flat is a closed edge set (tensions vanishing on it).  The ambient group is
included as the top flat.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ContractViolation
from .graph_core import MultiGraph, closure, component_labels, rank_profile, subset_rank
from .polynomial import RationalPolynomial


@dataclass(frozen=True)
class Flat:
    kind: str  # "coloring" or "tension"
    data: tuple  # sorted blocks, or sorted edge ids
    rank: int

    def __str__(self):
        if self.kind == "coloring":
            return "|".join(",".join(map(str, b)) for b in self.data)
        return "{" + ",".join(map(str, self.data)) + "}"


def _partition_from_labels(labels) -> tuple:
    blocks: dict = {}
    for v, lab in enumerate(labels):
        blocks.setdefault(lab, []).append(v)
    return tuple(sorted(tuple(b) for b in blocks.values()))


def _coloring_flat(blocks) -> Flat:
    return Flat("coloring", tuple(blocks), len(blocks))


class IntersectionPoset:
    """Flats ordered by inclusion of the subgroups they cut out."""

    def __init__(self, kind: str, flats, leq, top: Flat):
        self.kind = kind
        self.flats = tuple(sorted(flats, key=lambda f: (-f.rank, f.data)))
        self._leq = leq
        self.top = top
        if top not in self.flats:
            raise ContractViolation("poset is missing its top flat")

    def __len__(self):
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def leq(self, a: Flat, b: Flat) -> bool:
        return self._leq(a, b)

    @cached_property
    def mobius(self) -> dict:
        """``mu(X, top)`` for every flat, computed from the top down."""
        mu = {}
        for X in self.flats:  # rank-descending, so every Y above X is done
            if X == self.top:
                mu[X] = 1
            else:
                mu[X] = -sum(mu[Y] for Y in mu if Y != X and self._leq(X, Y))
        return mu

    @cached_property
    def covers(self) -> list[tuple[Flat, Flat]]:
        """Pairs ``(X, Y)`` with ``X < Y`` and nothing strictly between."""
        out = []
        for X in self.flats:
            above = [Y for Y in self.flats if Y != X and self._leq(X, Y)]
            for Y in above:
                if not any(Z != Y and self._leq(Z, Y) for Z in above):
                    out.append((X, Y))
        return out

    def to_json(self) -> dict:
        index = {f: i for i, f in enumerate(self.flats)}
        return {
            "kind": self.kind,
            "flats": [
                {"id": index[f], "flat": str(f), "rank": f.rank, "mobius": self.mobius[f]}
                for f in self.flats
            ],
            "covers": [[index[a], index[b]] for a, b in self.covers],
        }


def _close_under_meets(atoms, top, meet):
    flats = {top, *atoms}
    frontier = set(flats)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(flats):
                c = meet(a, b)
                if c not in flats and c not in new:
                    new.add(c)
        flats |= new
        frontier = new
    return flats


def coloring_poset(g: MultiGraph) -> IntersectionPoset:
    g.require_loopless("coloring_poset")
    top = _coloring_flat(tuple((v,) for v in range(g.n)))

    def meet(a: Flat, b: Flat) -> Flat:
        pairs = [(blk[0], w) for f in (a, b) for blk in f.data for w in blk[1:]]
        return _coloring_flat(_partition_from_labels(component_labels(g.n, pairs)))

    atoms = {_coloring_flat(_partition_from_labels(component_labels(g.n, [e]))) for e in g.edges}
    flats = _close_under_meets(atoms, top, meet)

    def leq(a: Flat, b: Flat) -> bool:
        # a's subgroup sits inside b's iff every block of b lies in a block of a
        where = {v: i for i, blk in enumerate(a.data) for v in blk}
        return all(len({where[v] for v in blk}) == 1 for blk in b.data)

    return IntersectionPoset("coloring", flats, leq, top)


def tension_poset(g: MultiGraph) -> IntersectionPoset:
    g.require_loopless("tension_poset")
    r = rank_profile(g).rank

    def flat(X) -> Flat:
        X = closure(g, X)
        return Flat("tension", tuple(sorted(X)), r - subset_rank(g, X))

    top = flat(())
    atoms = {flat((e,)) for e in range(g.m)}
    flats = _close_under_meets(atoms, top, lambda a, b: flat(a.data + b.data))

    def leq(a: Flat, b: Flat) -> bool:
        return set(b.data) <= set(a.data)

    return IntersectionPoset("tension", flats, leq, top)


def characteristic_polynomial(poset: IntersectionPoset) -> RationalPolynomial:
    coeffs = [0] * (max(f.rank for f in poset) + 1)
    for f, mu in poset.mobius.items():
        coeffs[f.rank] += mu
    return RationalPolynomial(coeffs)


def count_complement(g: MultiGraph, q: int, kind: str) -> int:
    """Points of ``Z_q^V`` (colouring) or of the ``Z_q`` tension group off every hyperplane.

    Tensions are produced as coboundaries of all ``q^|V|`` vertex potentials
    and deduplicated, so nothing depends on a spanning forest.
    """
    g.require_loopless("count_complement")
    if q < 1:
        raise ContractViolation("q must be a positive integer")
    if kind not in ("coloring", "tension"):
        raise ContractViolation(f"unknown arrangement kind {kind!r}")
    if g.m == 0:
        return q ** g.n if kind == "coloring" else 1
    F = np.array(list(itertools.product(range(q), repeat=g.n)), dtype=np.int64).reshape(-1, g.n)
    tails = np.array([u for u, _ in g.edges], dtype=np.int64)
    heads = np.array([v for _, v in g.edges], dtype=np.int64)
    D = (F[:, heads] - F[:, tails]) % q
    if kind == "coloring":
        return int(np.count_nonzero(np.all(D != 0, axis=1)))
    distinct = np.unique(D, axis=0)
    return int(np.count_nonzero(np.all(distinct != 0, axis=1)))

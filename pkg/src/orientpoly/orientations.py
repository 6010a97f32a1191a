"""Orientations as sign vectors, couplings, involutions and cut-equivalence.

An orientation assigns ``+1`` (agree with the reference arrow) or ``-1``
(reverse it) to every edge.  Loops have a single orientation and always
carry ``+1``.
"""

from __future__ import annotations

import itertools
from collections import deque
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .errors import ContractViolation, GuardExceeded
from .graph_core import MultiGraph, _forest

#: refuse orientation enumeration beyond this many non-loop edges unless forced
ORIENTATION_GUARD = 20


@dataclass(frozen=True, order=True)
class Orientation:
    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise ContractViolation("orientation signs must be +1 or -1")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def reference(cls, g: MultiGraph) -> Orientation:
        return cls((1,) * g.m)

    @classmethod
    def parse(cls, text: str) -> Orientation:
        """Read a ``+``/``-`` string (the Unicode minus sign is accepted too)."""
        table = {"+": 1, "-": -1, "−": -1}
        try:
            return cls(tuple(table[ch] for ch in text.strip()))
        except KeyError as exc:
            raise ContractViolation(f"bad orientation character {exc.args[0]!r}") from None

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def __len__(self):
        return len(self.signs)

    def __getitem__(self, e):
        return self.signs[e]

    def __iter__(self):
        return iter(self.signs)

    def reversed(self, g: MultiGraph | None = None) -> Orientation:
        """Reverse every non-loop edge."""
        loops = set(g.loops) if g is not None else set()
        return Orientation(tuple(s if e in loops else -s for e, s in enumerate(self.signs)))

    def flipped(self, edges: Iterable[int]) -> Orientation:
        edges = set(edges)
        return Orientation(tuple(-s if e in edges else s for e, s in enumerate(self.signs)))

    def arcs(self, g: MultiGraph) -> list[tuple[int, int]]:
        """``(tail, head)`` of every edge under this orientation."""
        return [(u, v) if s > 0 else (v, u) for (u, v), s in zip(g.edges, self.signs)]


def check_orientation(g: MultiGraph, eps: Orientation) -> None:
    if len(eps) != g.m:
        raise ContractViolation(f"orientation has {len(eps)} signs for {g.m} edges")
    for e in g.loops:
        if eps[e] != 1:
            raise ContractViolation(f"loop edge {e} must carry sign +1")


def _guard(g: MultiGraph, force: bool) -> None:
    free = g.m - len(g.loops)
    if free > ORIENTATION_GUARD and not force:
        raise GuardExceeded(
            f"enumerating 2^{free} orientations exceeds the guard of 2^{ORIENTATION_GUARD}; pass force=True"
        )


def enumerate_orientations(g: MultiGraph, acyclic_only: bool = False, force: bool = False) -> Iterator[Orientation]:
    """All orientations in lexicographic sign order (``+`` before ``-``)."""
    if acyclic_only:
        g.require_loopless("acyclic orientation enumeration")
    _guard(g, force)
    loops = set(g.loops)
    free = [e for e in range(g.m) if e not in loops]
    base = [1] * g.m
    for choice in itertools.product((1, -1), repeat=len(free)):
        for e, s in zip(free, choice):
            base[e] = s
        eps = Orientation(tuple(base))
        if not acyclic_only or is_acyclic(g, eps):
            yield eps


def is_acyclic(g: MultiGraph, eps: Orientation) -> bool:
    """Kahn's algorithm on the digraph ``(g, eps)``; a loop is a directed circuit."""
    if g.loops:
        return False
    indeg = [0] * g.n
    out = [[] for _ in range(g.n)]
    for t, h in eps.arcs(g):
        out[t].append(h)
        indeg[h] += 1
    queue = deque(v for v in range(g.n) if indeg[v] == 0)
    done = 0
    while queue:
        v = queue.popleft()
        done += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return done == g.n


def coupling(eps1: Orientation, eps2: Orientation, support: Iterable[int] | None = None) -> tuple[int, ...]:
    """``+1`` where the orientations agree on ``support``, ``-1`` where they differ, else ``0``."""
    if len(eps1) != len(eps2):
        raise ContractViolation("orientations live on different edge sets")
    m = len(eps1)
    sup = range(m) if support is None else set(support)
    if support is not None and not sup <= set(range(m)):
        raise ContractViolation("support is not a subset of the edge set")
    return tuple((eps1[x] * eps2[x] if x in sup else 0) for x in range(m))


def apply_P(rho: Orientation, eps: Orientation, f: Sequence[int]) -> tuple[int, ...]:
    """Pointwise product with the coupling of ``rho`` and ``eps``."""
    if len(f) != len(rho):
        raise ContractViolation("edge function has the wrong length")
    return tuple(r * e * v for r, e, v in zip(rho, eps, f))


def apply_Q(rho: Orientation, eps: Orientation, f: Sequence[int], q: int) -> tuple[int, ...]:
    """Keep ``f`` where ``rho`` and ``eps`` agree, replace by ``q - f`` where they differ."""
    if len(f) != len(rho):
        raise ContractViolation("edge function has the wrong length")
    if q < 1:
        raise ContractViolation("q must be a positive integer")
    if any(not 0 <= v <= q for v in f):
        raise ContractViolation(f"values must lie in [0, {q}]")
    return tuple(v if r == e else q - v for r, e, v in zip(rho, eps, f))


def difference_set(eps: Orientation, rho: Orientation) -> frozenset[int]:
    return frozenset(x for x in range(len(eps)) if eps[x] != rho[x])


def is_oriented_cut(g: MultiGraph, eps: Orientation, U: Iterable[int]) -> bool:
    """Signed indicator of ``U`` is orthogonal to every fundamental circuit.

    With ``s(x) = eps(x)`` on ``U`` and ``0`` elsewhere, the circuit sum of
    ``U`` along a circuit ``C`` relative to ``eps`` is ``<s, C>`` for the
    reference-signed circuit vector ``C``; fundamental circuits span the
    integer cycle space, so checking them suffices.
    """
    U = frozenset(U)
    if not U:
        raise ContractViolation("oriented-cut test needs a nonempty edge set")
    if not U <= set(range(g.m)):
        raise ContractViolation("edge set contains unknown edge ids")
    g.require_loopless("is_oriented_cut")
    check_orientation(g, eps)
    fd = _forest(g)
    for circ in fd.circuits.values():
        if sum(eps[x] * s for x, s in circ.items() if x in U) != 0:
            return False
    return True


def cut_equivalent(g: MultiGraph, eps: Orientation, rho: Orientation) -> bool:
    g.require_loopless("cut_equivalent")
    U = difference_set(eps, rho)
    return not U or is_oriented_cut(g, eps, U)


@dataclass(frozen=True)
class OrientationClassification:
    classes: tuple[tuple[Orientation, ...], ...]
    scope: str

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def __len__(self):
        return len(self.classes)

    def representatives(self) -> list[Orientation]:
        return [c[0] for c in self.classes]

    def class_of(self, eps: Orientation) -> tuple[Orientation, ...]:
        for c in self.classes:
            if eps in c:
                return c
        raise KeyError(str(eps))

    def to_json(self) -> dict:
        return {"scope": self.scope, "classes": [[str(e) for e in c] for c in self.classes]}


def _pairwise_equivalence(g: MultiGraph, members: list[Orientation]) -> np.ndarray:
    """Boolean matrix of cut-equivalence over ``members`` (vectorised circuit sums)."""
    fd = _forest(g)
    C = fd.circuit_matrix()
    S = np.array([o.signs for o in members], dtype=np.int64).reshape(len(members), g.m)
    out = np.zeros((len(members), len(members)), dtype=bool)
    for i in range(len(members)):
        signed = S[i] * (S != S[i])
        out[i] = ~np.any(signed @ C.T, axis=1) if C.size else True
    return out


def classify(g: MultiGraph, scope: str = "acyclic", force: bool = False) -> OrientationClassification:
    """Partition ``scope`` (``"all"`` or ``"acyclic"``) into cut-equivalence classes.

    Every pair is tested and merged with a disjoint-set forest.  Classes are
    ordered by their lexicographically least member, which is listed first.
    """
    g.require_loopless("classify")
    if scope not in ("all", "acyclic"):
        raise ContractViolation(f"unknown scope {scope!r}")
    members = list(enumerate_orientations(g, acyclic_only=(scope == "acyclic"), force=force))
    eq = _pairwise_equivalence(g, members)
    ds = DisjointSet(range(len(members)))
    for i, j in zip(*np.nonzero(np.triu(eq, 1))):
        ds.merge(int(i), int(j))
    groups = sorted((sorted(s) for s in ds.subsets()), key=lambda s: s[0])
    return OrientationClassification(tuple(tuple(members[i] for i in grp) for grp in groups), scope)


def equivalence_class(g: MultiGraph, eps: Orientation, force: bool = False) -> list[Orientation]:
    """All orientations cut-equivalent to ``eps``, in enumeration order."""
    g.require_loopless("equivalence_class")
    check_orientation(g, eps)
    _guard(g, force)
    return list(_equivalence_class(g, eps))


@lru_cache(maxsize=4096)
def _equivalence_class(g: MultiGraph, eps: Orientation) -> tuple[Orientation, ...]:
    # graphs and orientations are immutable, so classes can be memoised
    return tuple(rho for rho in enumerate_orientations(g, force=True) if cut_equivalent(g, eps, rho))


def induced_orientation(eps: Orientation, f: Sequence[int]) -> Orientation:
    """``eps`` where ``f > 0`` and its reverse where ``f <= 0``."""
    return Orientation(tuple(e if v > 0 else -e for e, v in zip(eps, f)))

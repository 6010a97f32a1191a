"""Multigraphs, rank data, spanning forests and minors.

Edges are stored in input order and the listed endpoint order ``(u, v)``
is the reference orientation ``u -> v``.  Every sign vector elsewhere in
the package is relative to that reference.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .errors import ContractViolation, GraphParseError, LooplessHypothesisError


@dataclass(frozen=True)
class MultiGraph:
    """Finite graph on vertices ``0..n-1`` allowing loops and parallel edges."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ContractViolation("vertex count must be nonnegative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ContractViolation(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> MultiGraph:
        edges = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    @cached_property
    def loops(self) -> tuple[int, ...]:
        return tuple(e for e, (u, v) in enumerate(self.edges) if u == v)

    @property
    def has_loops(self) -> bool:
        return bool(self.loops)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident with each vertex, in edge-id order (loops once)."""
        inc = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            if v != u:
                inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    def require_loopless(self, operation: str) -> None:
        if self.loops:
            raise LooplessHypothesisError(operation, self.loops)

    def key(self) -> tuple:
        """Canonical memo key: vertex count plus sorted undirected edge multiset."""
        return (self.n, tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges)))

    def to_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)


def load_graph(text: str) -> MultiGraph:
    """Parse an edge-list document.

    One edge per line as two whitespace-separated nonnegative integers;
    ``#`` starts a comment and blank lines are skipped.  Labels are
    relabelled densely in order of first appearance.
    """
    labels: dict[int, int] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(lineno, f"expected two vertex labels, got {len(parts)} fields")
        ends = []
        for tok in parts:
            try:
                label = int(tok)
            except ValueError:
                raise GraphParseError(lineno, f"vertex label {tok!r} is not an integer") from None
            if label < 0:
                raise GraphParseError(lineno, f"negative vertex label {label}")
            ends.append(labels.setdefault(label, len(labels)))
        edges.append(tuple(ends))
    return MultiGraph(len(labels), tuple(edges))


def read_graph(path) -> MultiGraph:
    with open(path, encoding="utf-8") as fh:
        return load_graph(fh.read())


class RankProfile(NamedTuple):
    components: int
    rank: int
    nullity: int


def component_labels(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Label vertices by the lowest vertex id of their component."""
    ds = DisjointSet(range(n))
    for u, v in edges:
        ds.merge(u, v)
    return [min(ds.subset(v)) for v in range(n)]


def count_components(n: int, edges: Iterable[tuple[int, int]]) -> int:
    ds = DisjointSet(range(n))
    for u, v in edges:
        ds.merge(u, v)
    return ds.n_subsets


def rank_profile(g: MultiGraph) -> RankProfile:
    k = count_components(g.n, g.edges)
    r = g.n - k
    return RankProfile(k, r, g.m - r)


def subset_rank(g: MultiGraph, X: Iterable[int]) -> int:
    """Rank of the spanning subgraph ``(V, X)``."""
    return g.n - count_components(g.n, (g.edges[e] for e in X))


def closure(g: MultiGraph, X: Iterable[int]) -> frozenset[int]:
    """Cycle-matroid closure: ``X`` plus every edge whose ends are already joined by ``X``."""
    X = frozenset(X)
    labels = component_labels(g.n, (g.edges[e] for e in X))
    return X | frozenset(e for e, (u, v) in enumerate(g.edges) if labels[u] == labels[v])


@dataclass(frozen=True)
class ForestData:
    """BFS spanning forest with signed fundamental circuits and bonds.

    ``circuits[y]`` is the signed fundamental circuit of the non-forest edge
    ``y`` (direction agreeing with ``y``) and ``bonds[e]`` the signed
    fundamental bond of the forest edge ``e`` (direction agreeing with
    ``e``).  Both map edge id to ``+1``/``-1`` and omit zeros.
    """

    forest: tuple[int, ...]
    non_forest: tuple[int, ...]
    circuits: dict
    bonds: dict
    roots: tuple[int, ...]
    parent_edge: tuple[int | None, ...]
    depth: tuple[int, ...]
    m: int

    def circuit_matrix(self) -> np.ndarray:
        """Rows are fundamental circuit vectors, in ``non_forest`` order."""
        M = np.zeros((len(self.non_forest), self.m), dtype=np.int64)
        for i, y in enumerate(self.non_forest):
            for x, s in self.circuits[y].items():
                M[i, x] = s
        return M

    def bond_matrix(self) -> np.ndarray:
        """Rows are fundamental bond vectors, in ``forest`` order."""
        M = np.zeros((len(self.forest), self.m), dtype=np.int64)
        for i, e in enumerate(self.forest):
            for x, s in self.bonds[e].items():
                M[i, x] = s
        return M


def spanning_forest(g: MultiGraph) -> ForestData:
    """Deterministic BFS forest (lowest unvisited root first, ties by edge id)."""
    seen = [False] * g.n
    parent_edge: list[int | None] = [None] * g.n
    parent: list[int | None] = [None] * g.n
    depth = [0] * g.n
    forest = []
    roots = []
    for root in range(g.n):
        if seen[root]:
            continue
        roots.append(root)
        seen[root] = True
        queue = deque([root])
        while queue:
            w = queue.popleft()
            for e in g.incidence[w]:
                u, v = g.edges[e]
                other = v if u == w else u
                if not seen[other]:
                    seen[other] = True
                    parent[other] = w
                    parent_edge[other] = e
                    depth[other] = depth[w] + 1
                    forest.append(e)
                    queue.append(other)
    forest_set = set(forest)
    non_forest = tuple(e for e in range(g.m) if e not in forest_set)

    def path_to_ancestor(a, b):
        # signed edges walking a -> b along tree edges; +1 when the walk follows the reference
        up_a, up_b = [], []
        while a != b:
            if depth[a] >= depth[b]:
                e = parent_edge[a]
                up_a.append((e, +1 if g.edges[e] == (a, parent[a]) else -1))
                a = parent[a]
            else:
                e = parent_edge[b]
                # walked in reverse later: from parent[b] down to b
                up_b.append((e, +1 if g.edges[e] == (parent[b], b) else -1))
                b = parent[b]
        return up_a + up_b[::-1]

    circuits = {}
    for y in non_forest:
        u, v = g.edges[y]
        circ = {y: 1}
        if u != v:
            # traverse y as u -> v, then return v -> u through the forest
            for e, s in path_to_ancestor(v, u):
                circ[e] = s
        circuits[y] = circ
    bonds = {e: {e: 1} for e in forest}
    for y, circ in circuits.items():
        for e, s in circ.items():
            if e != y:
                bonds[e][y] = -s
    return ForestData(
        forest=tuple(sorted(forest)),
        non_forest=non_forest,
        circuits=circuits,
        bonds=bonds,
        roots=tuple(roots),
        parent_edge=tuple(parent_edge),
        depth=tuple(depth),
        m=g.m,
    )


def is_cut(g: MultiGraph, U: Iterable[int]) -> bool:
    """True iff ``U`` meets every circuit in an even number of edges."""
    U = frozenset(U)
    if not U:
        raise ContractViolation("is_cut needs a nonempty edge set")
    if not U <= set(range(g.m)):
        raise ContractViolation("edge set contains unknown edge ids")
    fd = _forest(g)
    return all(len(U.intersection(c)) % 2 == 0 for c in fd.circuits.values())


def minor(g: MultiGraph, e: int, mode: str, return_map: bool = False):
    """Delete or contract edge ``e``.

    Contraction merges the higher endpoint into the lower one and renumbers
    the remaining vertices densely in their old order; edges parallel to
    ``e`` become loops.  With ``return_map`` the old-to-new vertex map is
    returned alongside the minor.
    """
    if not 0 <= e < g.m:
        raise ContractViolation(f"no edge {e}")
    rest = g.edges[:e] + g.edges[e + 1:]
    if mode == "delete":
        h = MultiGraph(g.n, rest)
        vmap = tuple(range(g.n))
    elif mode == "contract":
        u, v = g.edges[e]
        if u == v:
            raise ContractViolation(f"edge {e} is a loop and cannot be contracted")
        lo, hi = min(u, v), max(u, v)
        vmap = tuple(lo if w == hi else (w - 1 if w > hi else w) for w in range(g.n))
        h = MultiGraph(g.n - 1, tuple((vmap[a], vmap[b]) for a, b in rest))
    else:
        raise ContractViolation(f"unknown minor mode {mode!r}")
    return (h, vmap) if return_map else h


def is_bridge(g: MultiGraph, e: int) -> bool:
    u, v = g.edges[e]
    if u == v:
        return False
    labels = component_labels(g.n, g.edges[:e] + g.edges[e + 1:])
    return labels[u] != labels[v]


def _forest(g: MultiGraph) -> ForestData:
    # graphs are immutable, so the forest can be cached on the instance
    try:
        return g.__dict__["_forest_data"]
    except KeyError:
        fd = spanning_forest(g)
        g.__dict__["_forest_data"] = fd
        return fd

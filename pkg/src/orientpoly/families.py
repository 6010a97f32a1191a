"""Named small graphs and an exhaustive corpus of small multigraphs."""

from __future__ import annotations

import itertools

from .graph_core import MultiGraph, count_components


def path(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> MultiGraph:
    return MultiGraph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def cycle(n: int) -> MultiGraph:
    if n < 1:
        raise ValueError("cycle needs at least one vertex")
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> MultiGraph:
    return MultiGraph(n, tuple(itertools.combinations(range(n), 2)))


def double_triangle() -> MultiGraph:
    """Two triangles sharing the edge 1-2 (edge 1), as parsed from ``0 1/1 3/3 0/1 2/2 3``."""
    return MultiGraph(4, ((0, 1), (1, 2), (2, 0), (1, 3), (3, 2)))


def disjoint_union(*graphs: MultiGraph) -> MultiGraph:
    edges, offset = [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return MultiGraph(offset, tuple(edges))


def two_components() -> MultiGraph:
    """A triangle next to a doubled edge."""
    return disjoint_union(complete(3), MultiGraph(2, ((0, 1), (0, 1))))


def _canonical(n: int, pairs) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in pairs))
        if best is None or key < best:
            best = key
    return best


def small_connected_multigraphs(max_vertices: int = 4, max_edges: int = 6, min_vertices: int = 2):
    """Connected loopless multigraphs up to isomorphism, smallest first.

    Brute force over edge multisets; isomorphism classes are collapsed by
    minimising the sorted edge list over all vertex permutations.
    """
    out = []
    for n in range(min_vertices, max_vertices + 1):
        slots = list(itertools.combinations(range(n), 2))
        seen = set()
        for m in range(n - 1, max_edges + 1):
            for pairs in itertools.combinations_with_replacement(slots, m):
                if count_components(n, pairs) != 1:
                    continue
                key = _canonical(n, pairs)
                if key in seen:
                    continue
                seen.add(key)
                out.append(MultiGraph(n, key))
    return out


def corpus() -> list[tuple[str, MultiGraph]]:
    """Named test corpus: every small connected multigraph plus standard families."""
    out = [(f"small{i:02d}", g) for i, g in enumerate(small_connected_multigraphs())]
    out += [
        ("K1", MultiGraph(1, ())),
        ("path5", path(5)),
        ("star4", star(4)),
        ("spider", MultiGraph(6, ((0, 1), (1, 2), (0, 3), (3, 4), (0, 5)))),
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("K4", complete(4)),
        ("double_triangle", double_triangle()),
        ("two_components", two_components()),
    ]
    return out

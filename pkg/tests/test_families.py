import itertools

from orientpoly import rank_profile
from orientpoly.families import corpus, small_connected_multigraphs, two_components


def _isomorphic(a, b):
    if a.n != b.n or a.m != b.m:
        return False
    target = sorted(tuple(sorted(e)) for e in b.edges)
    return any(
        sorted(tuple(sorted((p[u], p[v]))) for u, v in a.edges) == target
        for p in itertools.permutations(range(a.n))
    )


def test_small_corpus_is_complete_and_irredundant():
    gs = small_connected_multigraphs(3, 4)
    # two vertices: 1..4 parallel edges; three vertices: path or triangle with multiplicities
    assert sum(g.n == 2 for g in gs) == 4
    assert all(rank_profile(g).components == 1 and not g.loops for g in gs)
    for a, b in itertools.combinations(gs, 2):
        assert not _isomorphic(a, b)
    # m=2: path; m=3: triangle, path with a doubled edge;
    # m=4: path with multiplicities (3,1) or (2,2), triangle with one doubled edge
    three = [g for g in gs if g.n == 3]
    assert len(three) == 1 + 2 + 3


def test_named_corpus():
    names = dict(corpus())
    assert {"C3", "C4", "C5", "K4", "two_components", "double_triangle"} <= set(names)
    assert rank_profile(two_components()).components == 2

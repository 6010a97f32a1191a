import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from orientpoly import (
    BoxCountMode,
    ContractViolation,
    GuardExceeded,
    LooplessHypothesisError,
    MultiGraph,
    Orientation,
    TensionVector,
    classify,
    count_box_tensions,
    count_integral_nowhere_zero,
    count_modular_nowhere_zero,
    count_proper_colorings,
    enumerate_orientations,
    equivalence_class,
    induced_orientation,
    is_tension,
    lift_modular_tension,
    modq_fiber,
    rank_profile,
    spanning_forest,
    tension_from_forest,
    tension_group_size,
)
from orientpoly.families import double_triangle, path, small_connected_multigraphs, star
from orientpoly.tensions import box_chunks
from strategies import graph_and_orientation

K2 = MultiGraph(2, ((0, 1),))
TRI = MultiGraph(3, ((0, 1), (1, 2), (0, 2)))
ACYC = Orientation((1, 1, 1))
CYC = Orientation((1, 1, -1))
SMALL = small_connected_multigraphs(4, 5)


class TestTensionVector:
    def test_modulus_reduces(self):
        assert TensionVector((7, -1, 5), 5).values == (2, 4, 0)

    def test_serialisation(self):
        v = TensionVector((3, 4, 2), 5)
        assert str(v) == "3 4 2 mod 5"
        assert TensionVector.parse(str(v)) == v
        assert TensionVector.parse("3 -1 2") == TensionVector((3, -1, 2))
        assert v.to_json() == {"values": [3, 4, 2], "modulus": 5}


def test_is_tension_examples():
    assert is_tension(TRI, ACYC, (0, 0, 0))
    assert is_tension(TRI, ACYC, (1, 1, 2))
    assert not is_tension(TRI, ACYC, (1, 1, 1))
    assert is_tension(TRI, ACYC, TensionVector((1, 1, 4), 2))
    with pytest.raises(ContractViolation):
        is_tension(TRI, ACYC, (1, 1))


@given(graph_and_orientation(max_vertices=4, max_edges=5), st.data())
def test_is_tension_agrees_with_all_circuits(go, data):
    g, eps = go
    f = data.draw(st.lists(st.integers(-2, 2), min_size=g.m, max_size=g.m))
    assert is_tension(g, eps, f) == oracles.is_tension(g, eps, f)
    assert is_tension(g, eps, f, 3) == oracles.is_tension(g, eps, f, 3)


class TestFromForest:
    def test_zero(self):
        assert tension_from_forest(TRI, ACYC, {0: 0, 2: 0}).values == (0, 0, 0)

    def test_triangle(self):
        # BFS forest of the triangle is {e0, e2}
        f = tension_from_forest(TRI, ACYC, {0: 1, 2: 2})
        assert f.values == (1, 1, 2)
        assert is_tension(TRI, ACYC, f)

    def test_tree(self):
        assert tension_from_forest(K2, Orientation((1,)), {0: 7}).values == (7,)

    def test_wrong_keys(self):
        with pytest.raises(ContractViolation):
            tension_from_forest(TRI, ACYC, {0: 1, 1: 1})

    @given(graph_and_orientation(max_vertices=5, max_edges=6, loops=True), st.data())
    def test_restriction_and_tension(self, go, data):
        g, eps = go
        fd = spanning_forest(g)
        vals = {e: data.draw(st.integers(-5, 5)) for e in fd.forest}
        f = tension_from_forest(g, eps, vals)
        assert all(f[e] == v for e, v in vals.items())
        assert oracles.is_tension(g, eps, f.values)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_forest_bijection(q):
    for g in SMALL:
        for eps in list(enumerate_orientations(g))[:4]:
            fd = spanning_forest(g)
            made = {
                TensionVector(tuple(tension_from_forest(g, eps, dict(zip(fd.forest, pt))).values), q)
                for pt in itertools.product(range(q), repeat=len(fd.forest))
            }
            truth = {TensionVector(f, q) for f in oracles.tensions_in_box(g, eps, range(q), q)}
            assert made == truth
            assert len(made) == q ** len(fd.forest)


def test_tension_group_size():
    assert tension_group_size(TRI, 3) == 9
    assert tension_group_size(TRI, 3, {0}) == 3
    assert tension_group_size(double_triangle(), 1) == 1
    for X in [(), (0,), (0, 1), (0, 1, 2)]:
        brute = sum(1 for f in oracles.tensions_in_box(TRI, ACYC, range(3), 3) if all(f[e] == 0 for e in X))
        assert tension_group_size(TRI, 3, X) == brute


def test_box_chunks_order():
    pts = np.concatenate(list(box_chunks([0, 1, 2], 2, chunk=4)))
    assert [tuple(p) for p in pts] == list(itertools.product([0, 1, 2], repeat=2))


class TestModularCount:
    def test_k2(self):
        assert count_modular_nowhere_zero(K2, 4) == 3

    def test_triangle(self):
        assert count_modular_nowhere_zero(TRI, 3) == 2

    def test_double_triangle(self):
        assert count_modular_nowhere_zero(double_triangle(), 3) == 2
        assert count_modular_nowhere_zero(double_triangle(), 4) == 12

    def test_loops(self):
        with pytest.raises(LooplessHypothesisError, match="loopless"):
            count_modular_nowhere_zero(MultiGraph(1, ((0, 0),)), 3)

    def test_orientation_independent(self):
        for g in SMALL:
            for q in (2, 3):
                counts = {count_modular_nowhere_zero(g, q, eps) for eps in enumerate_orientations(g)}
                assert len(counts) == 1

    @pytest.mark.parametrize("q", [1, 2, 3, 4, 5])
    def test_chromatic_relation(self, q):
        for g in SMALL + [MultiGraph(4, ((0, 1), (2, 3)))]:
            k = rank_profile(g).components
            assert count_proper_colorings(g, q) == q ** k * count_modular_nowhere_zero(g, q)
            assert oracles.proper_colorings(g, q) == count_proper_colorings(g, q)


class TestIntegralCount:
    def test_q1(self):
        assert count_integral_nowhere_zero(double_triangle(), 1) == 0

    def test_triangle(self):
        assert count_integral_nowhere_zero(TRI, 4) == 18

    def test_double_triangle_small_q(self):
        # a +-1 tension cannot vanish around a triangle, so q=2 gives nothing
        g = double_triangle()
        assert [count_integral_nowhere_zero(g, q) for q in (2, 3, 4)] == [0, 10, 58]
        assert count_integral_nowhere_zero(g, 3) == oracles.count_integral_nowhere_zero(g, 3)

    @pytest.mark.parametrize("q", [1, 2, 3, 4, 5])
    def test_sum_over_acyclic_orientations(self, q):
        for g in SMALL[::3]:
            total = sum(count_box_tensions(g, eps, q, "positive_open") for eps in enumerate_orientations(g, acyclic_only=True))
            assert total == count_integral_nowhere_zero(g, q)

    @pytest.mark.parametrize("q", [1, 2, 3, 4, 5])
    def test_modular_sum_over_classes(self, q):
        for g in SMALL[::3]:
            reps = classify(g).representatives()
            assert sum(count_box_tensions(g, e, q, BoxCountMode.POSITIVE_OPEN) for e in reps) == count_modular_nowhere_zero(g, q)


class TestBoxCounts:
    def test_triangle(self):
        assert count_box_tensions(TRI, ACYC, 4, BoxCountMode.POSITIVE_OPEN) == 3
        assert count_box_tensions(TRI, CYC, 5, BoxCountMode.POSITIVE_OPEN) == 0
        assert count_box_tensions(TRI, ACYC, 1, BoxCountMode.NONNEG_CLOSED) == 3
        assert count_box_tensions(TRI, ACYC, 0, "nonneg_closed") == 1

    def test_guard(self):
        g = path(30)
        with pytest.raises(GuardExceeded):
            count_box_tensions(g, Orientation.reference(g), 3, "nonneg_closed")

    def test_nowhere_zero_mode_delegates(self):
        assert count_box_tensions(TRI, ACYC, 4, "nowhere_zero_open") == 18

    @given(graph_and_orientation(max_vertices=4, max_edges=4), st.integers(0, 3))
    def test_against_brute_force(self, go, q):
        g, eps = go
        closed = oracles.tensions_in_box(g, eps, range(0, q + 1))
        assert count_box_tensions(g, eps, q, "nonneg_closed") == len(closed)
        if q >= 1:
            opened = oracles.tensions_in_box(g, eps, range(1, q))
            assert count_box_tensions(g, eps, q, "positive_open") == len(opened)


class TestLift:
    def test_zero(self):
        assert lift_modular_tension(TRI, ACYC, TensionVector((0, 0, 0), 5)).values == (0, 0, 0)

    def test_triangle(self):
        f = lift_modular_tension(TRI, ACYC, TensionVector((3, 4, 2), 5))
        assert f.values in {(3, -1, 2), (-2, 4, 2), (-2, -1, -3)}
        assert f.modulus is None

    def test_tree(self):
        f = lift_modular_tension(K2, Orientation((1,)), TensionVector((2,), 3))
        assert f.values in {(2,), (-1,)}

    def test_rejects_non_tension(self):
        with pytest.raises(ContractViolation):
            lift_modular_tension(TRI, ACYC, TensionVector((1, 1, 1), 5))
        with pytest.raises(ContractViolation):
            lift_modular_tension(TRI, ACYC, TensionVector((1, 1, 2)))

    @given(graph_and_orientation(max_vertices=5, max_edges=6), st.sampled_from([2, 3, 5]), st.data())
    def test_postconditions(self, go, q, data):
        g, eps = go
        fd = spanning_forest(g)
        vals = {e: data.draw(st.integers(0, q - 1)) for e in fd.forest}
        ft = TensionVector(tension_from_forest(g, eps, vals).values, q)
        f = lift_modular_tension(g, eps, ft)
        assert all((a - b) % q == 0 for a, b in zip(f, ft))
        assert all(abs(v) < q for v in f)
        assert oracles.is_tension(g, eps, f.values)
        if all(ft.values):
            assert all(f.values)


class TestFiber:
    def test_k2(self):
        fib = modq_fiber(K2, Orientation((1,)), (2,), 3)
        assert {v.values for v in fib} == {(2,), (-1,)}

    def test_triangle(self):
        fib = modq_fiber(TRI, ACYC, (3, -1, 2), 5)
        assert {v.values for v in fib} == {(3, -1, 2), (-2, 4, 2), (-2, -1, -3)}

    @pytest.mark.parametrize("tree", [path(3), star(3), path(4)], ids=["P3", "S3", "P4"])
    def test_tree_fiber_is_all_sign_patterns(self, tree):
        eps = Orientation.reference(tree)
        f = tuple(1 + (e % 2) for e in range(tree.m))
        fib = modq_fiber(tree, eps, f, 3)
        assert len(fib) == 2 ** tree.m
        assert len(fib) == count_box_tensions(tree, induced_orientation(eps, f), 1, "nonneg_closed")
        assert {v.values for v in fib} == oracles.modq_fiber(tree, eps, f, 3)

    def test_rejects_bad_input(self):
        with pytest.raises(ContractViolation):
            modq_fiber(TRI, ACYC, (0, 1, 1), 5)
        with pytest.raises(ContractViolation):
            modq_fiber(TRI, ACYC, (5, 1, 1), 5)
        with pytest.raises(ContractViolation):
            modq_fiber(TRI, ACYC, (1, 1, 1), 5)

    @pytest.mark.parametrize("q", [2, 3])
    def test_matches_brute_force(self, q):
        for g in SMALL[::2]:
            eps = Orientation.reference(g)
            nz = oracles.tensions_in_box(g, eps, [v for v in range(-(q - 1), q) if v])
            for f in nz[:6]:
                fib = {v.values for v in modq_fiber(g, eps, f, q)}
                assert fib == oracles.modq_fiber(g, eps, f, q)
                rho = induced_orientation(eps, f)
                assert len(fib) == len(equivalence_class(g, rho))
                assert len(fib) == count_box_tensions(g, rho, 1, "nonneg_closed")


def test_class_blocks_are_closed_under_congruence():
    # grouping nowhere-zero q-tensions by the class of their induced orientation
    # gives blocks that are unions of whole mod-q fibers
    q = 3
    for g in SMALL[::2]:
        eps = Orientation.reference(g)
        cls = classify(g, "all")
        nz = oracles.tensions_in_box(g, eps, [v for v in range(-(q - 1), q) if v])
        block_of = {f: cls.class_of(induced_orientation(eps, f))[0] for f in nz}
        for f in nz:
            for h in oracles.modq_fiber(g, eps, f, q):
                assert block_of[h] == block_of[f]
        for rep in classify(g, "acyclic").representatives():
            block = [f for f in nz if block_of[f] == rep]
            images = {tuple(v % q for v in f) for f in block}
            assert len(images) == count_box_tensions(g, rep, q, "positive_open")

import math
from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from extrafactorial import (
    DEFAULT_ENUMERATION_CAP,
    EdgePairKind,
    HamiltonianCycle,
    brute_force_sum_through,
    canonicalize,
    count_all,
    count_through_edge,
    count_through_pair,
    cycle_length,
    edge_pair_kind,
    enumerate_all,
    enumerate_through_edge,
    enumerate_through_pair,
    siva_insert,
)
from extrafactorial.errors import (
    EnumerationCapExceeded,
    NotAPermutation,
    OrderMismatch,
    OrderTooSmall,
    SameEdge,
    TooShort,
    VertexAlreadyPresent,
    VertexOutOfRange,
)
from oracles import (
    cycle_edge_set,
    make_zero_graph,
    oracle_cycles,
    oracle_through,
)

# reference cycles through edge (0, 1) of the 5-vertex sample, written as the
# raw vertex orders they are usually quoted in (letters A,B,C,X,Y = 0..4),
# with their known lengths
REFERENCE_THROUGH_01 = [
    ((4, 2, 0, 1, 3), 55.6),
    ((4, 2, 1, 0, 3), 92.0),
    ((4, 3, 2, 1, 0), 59.5),
    ((4, 2, 3, 1, 0), 52.1),
    ((4, 2, 3, 0, 1), 82.0),
    ((4, 3, 2, 0, 1), 53.0),
]


class TestCanonicalize:
    def test_rotate_to_minimum(self):
        assert canonicalize([1, 0, 2]).vertices == (0, 1, 2)

    def test_reflection_equivalence(self):
        assert canonicalize([0, 2, 1, 3]) == canonicalize([0, 3, 1, 2])

    def test_idempotent(self):
        c = canonicalize([3, 1, 4, 0, 2])
        assert canonicalize(c.vertices) == c

    def test_not_a_permutation(self):
        with pytest.raises(NotAPermutation):
            canonicalize([0, 1, 1, 2])
        with pytest.raises(NotAPermutation):
            canonicalize([0, 2, 3])

    def test_too_short(self):
        with pytest.raises(TooShort):
            canonicalize([0, 1])

    def test_rejects_non_canonical_direct_construction(self):
        with pytest.raises(ValueError):
            HamiltonianCycle((1, 0, 2))
        with pytest.raises(ValueError):
            HamiltonianCycle((0, 3, 1, 2))

    @given(st.permutations(list(range(6))))
    @settings(max_examples=100)
    def test_rotation_reflection_invariant(self, perm):
        verts = tuple(perm)
        base = canonicalize(verts)
        rotated = verts[2:] + verts[:2]
        reflected = tuple(reversed(verts))
        assert canonicalize(rotated) == base
        assert canonicalize(reflected) == base

    def test_rendering(self):
        assert str(canonicalize([0, 2, 1, 3])) == "0-2-1-3-0"

    def test_generation(self):
        assert canonicalize([0, 1, 2]).generation == 0
        assert canonicalize(range(7)).generation == 4


class TestVertexInsertion:
    def test_triangle_children(self):
        children = siva_insert(canonicalize([0, 1, 2]), 3)
        expected = {
            canonicalize([0, 3, 2, 1]),
            canonicalize([0, 2, 3, 1]),
            canonicalize([0, 3, 1, 2]),
        }
        assert set(children) == expected
        # a triangle's children are all three order-4 cycles
        assert set(children) == set(
            canonicalize(p) for p in [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)]
        )

    def test_eight_cycle_child(self):
        parent = canonicalize(range(8))
        children = siva_insert(parent, 8)
        assert len(children) == 8
        # inserting between 0 and 1 is one of the children
        assert canonicalize((0, 8, 1, 2, 3, 4, 5, 6, 7)) in children

    def test_children_are_distinct_and_one_longer(self):
        for n in range(3, 7):
            for parent in enumerate_all(n):
                children = siva_insert(parent, n)
                assert len(set(children)) == n
                assert all(c.order == n + 1 for c in children)
                assert all(c.generation == parent.generation + 1 for c in children)
                assert parent not in children

    def test_vertex_already_present(self):
        with pytest.raises(VertexAlreadyPresent):
            siva_insert(canonicalize([0, 1, 2]), 1)

    def test_negative_vertex(self):
        with pytest.raises(VertexOutOfRange):
            siva_insert(canonicalize([0, 1, 2]), -1)


class TestEnumerateAll:
    @pytest.mark.parametrize(
        "n,expected", [(3, 1), (4, 3), (5, 12), (6, 60), (7, 360), (8, 2520)]
    )
    def test_counts(self, n, expected):
        assert sum(1 for _ in enumerate_all(n)) == expected

    def test_triangle(self):
        assert [c.vertices for c in enumerate_all(3)] == [(0, 1, 2)]

    @pytest.mark.parametrize("n", range(3, 8))
    def test_matches_permutation_oracle(self, n):
        ours = [c.vertices for c in enumerate_all(n)]
        assert len(set(ours)) == len(ours)
        assert set(ours) == set(oracle_cycles(n))

    def test_deterministic(self):
        assert list(enumerate_all(6)) == list(enumerate_all(6))

    def test_order_too_small(self):
        with pytest.raises(OrderTooSmall):
            enumerate_all(2)

    def test_cap(self):
        with pytest.raises(EnumerationCapExceeded):
            enumerate_all(DEFAULT_ENUMERATION_CAP + 1)
        with pytest.raises(EnumerationCapExceeded):
            enumerate_all(6, max_order=5)
        assert sum(1 for _ in enumerate_all(6, max_order=6)) == 60


class TestEnumerateThroughEdge:
    def test_reference_set(self, graph5):
        got = {c.vertices: cycle_length(graph5, c) for c in enumerate_through_edge(5, (0, 1))}
        expected = {canonicalize(raw).vertices: l for raw, l in REFERENCE_THROUGH_01}
        assert set(got) == set(expected)
        for verts, length in expected.items():
            assert got[verts] == pytest.approx(length, rel=1e-9)

    def test_minimum_order(self):
        cycles = list(enumerate_through_edge(3, (0, 2)))
        assert len(cycles) == 1

    @pytest.mark.parametrize("n", range(3, 8))
    def test_counts_membership_and_filter_equality(self, n):
        expected = math.factorial(n - 2)
        for e in combinations(range(n), 2):
            cycles = list(enumerate_through_edge(n, e))
            assert len(cycles) == expected
            assert len(set(cycles)) == expected
            assert all(c.contains_edge(*e) for c in cycles)
            assert {c.vertices for c in cycles} == set(oracle_through(n, e))

    def test_edge_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            enumerate_through_edge(4, (0, 4))

    def test_deterministic(self):
        a = list(enumerate_through_edge(6, (1, 4)))
        assert a == list(enumerate_through_edge(6, (1, 4)))


class TestEnumerateThroughPair:
    def test_adjacent_sample(self):
        kind, stream = enumerate_through_pair(5, (0, 4), (3, 4))
        cycles = list(stream)
        assert kind is EdgePairKind.ADJACENT
        assert len(cycles) == 2  # (n-3)!
        for c in cycles:
            assert c.contains_edge(0, 4) and c.contains_edge(3, 4)

    def test_non_adjacent_order4(self):
        kind, stream = enumerate_through_pair(4, (0, 1), (2, 3))
        cycles = list(stream)
        assert kind is EdgePairKind.NON_ADJACENT
        assert {c.vertices for c in cycles} == {(0, 1, 2, 3), (0, 1, 3, 2)}

    def test_non_adjacent_order6(self):
        _, stream = enumerate_through_pair(6, (0, 1), (2, 3))
        assert sum(1 for _ in stream) == 12  # 2 (n-3)!

    @pytest.mark.parametrize("n", range(4, 7))
    def test_equals_double_filter(self, n):
        edges = list(combinations(range(n), 2))
        for e1, e2 in combinations(edges, 2):
            self._check_pair_against_filter(n, e1, e2)

    @pytest.mark.parametrize("n", [7, 8])
    def test_equals_double_filter_sampled(self, n):
        import random

        rng = random.Random(n)
        edges = list(combinations(range(n), 2))
        pairs = list(combinations(edges, 2))
        for e1, e2 in rng.sample(pairs, 12):
            self._check_pair_against_filter(n, e1, e2)

    @staticmethod
    def _check_pair_against_filter(n, e1, e2):
        kind, stream = enumerate_through_pair(n, e1, e2)
        cycles = list(stream)
        expected_count = count_through_pair(n, kind)
        assert len(cycles) == expected_count
        assert len(set(cycles)) == expected_count
        filtered = {
            c
            for c in oracle_cycles(n)
            if {tuple(sorted(e1)), tuple(sorted(e2))} <= cycle_edge_set(c)
        }
        assert {c.vertices for c in cycles} == filtered

    def test_adjacent_pair_minimum_order(self):
        kind, stream = enumerate_through_pair(3, (0, 1), (1, 2))
        assert kind is EdgePairKind.ADJACENT
        assert [c.vertices for c in stream] == [(0, 1, 2)]

    def test_same_edge(self):
        with pytest.raises(SameEdge):
            enumerate_through_pair(5, (0, 1), (1, 0))

    def test_kind_classification(self):
        assert edge_pair_kind((0, 1), (1, 2)) is EdgePairKind.ADJACENT
        assert edge_pair_kind((0, 1), (2, 3)) is EdgePairKind.NON_ADJACENT

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            enumerate_through_pair(4, (0, 1), (2, 4))


class TestCycleLength:
    def test_sample5(self, graph5):
        for raw, expected in REFERENCE_THROUGH_01:
            assert cycle_length(graph5, canonicalize(raw)) == pytest.approx(
                expected, rel=1e-9
            )

    def test_sample4(self, graph4):
        assert cycle_length(graph4, canonicalize([0, 2, 1, 3])) == 24.0
        assert sorted(
            cycle_length(graph4, c) for c in enumerate_all(4)
        ) == [24.0, 25.0, 27.0]

    def test_zero_graph(self):
        g = make_zero_graph(6)
        assert all(cycle_length(g, c) == 0.0 for c in enumerate_all(6))

    def test_order_mismatch(self, graph4):
        with pytest.raises(OrderMismatch):
            cycle_length(graph4, canonicalize([0, 1, 2]))


class TestCounts:
    def test_known_values(self):
        assert count_all(6) == 60
        assert count_through_edge(4) == 2
        assert count_all(14) == 3_113_510_400

    @pytest.mark.parametrize("n", range(3, 20))
    def test_closed_forms(self, n):
        assert count_all(n) == math.factorial(n - 1) // 2
        assert count_through_edge(n) == math.factorial(n - 2)
        assert count_through_pair(n, EdgePairKind.ADJACENT) == math.factorial(n - 3)
        if n >= 4:
            assert count_through_pair(n, EdgePairKind.NON_ADJACENT) == 2 * math.factorial(n - 3)

    def test_counts_are_exact_ints(self):
        assert isinstance(count_all(50), int)
        assert count_all(50) == math.factorial(49) // 2

    def test_errors(self):
        with pytest.raises(OrderTooSmall):
            count_all(2)
        with pytest.raises(OrderTooSmall):
            count_through_pair(3, EdgePairKind.NON_ADJACENT)


class TestEdgeIncidence:
    @pytest.mark.parametrize("n", range(4, 7))
    def test_each_cycle_in_exactly_n_streams(self, n):
        tally = Counter()
        for e in combinations(range(n), 2):
            for c in enumerate_through_edge(n, e):
                tally[c.vertices] += 1
        assert len(tally) == count_all(n)
        assert all(v == n for v in tally.values())


class TestBruteForceSum:
    def test_sample5(self, graph5):
        assert brute_force_sum_through(graph5, (0, 1)) == pytest.approx(
            394.2, rel=1e-9
        )

    def test_sample4(self, graph4):
        assert brute_force_sum_through(graph4, (0, 1)) == pytest.approx(52.0, rel=1e-9)

    def test_zero_graph(self):
        assert brute_force_sum_through(make_zero_graph(5), (1, 3)) == 0.0

    def test_cap(self, graph5):
        with pytest.raises(EnumerationCapExceeded):
            brute_force_sum_through(graph5, (0, 1), max_order=4)

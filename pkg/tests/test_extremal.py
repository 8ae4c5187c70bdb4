import itertools
from math import comb

import numpy as np
import pytest

from pcties.core import (
    iter_triads,
    matrix_to_graph,
    triad_census,
    validate_matrix,
)
from pcties.errors import BudgetExceeded, NotATournament, ValidationError
from pcties.extremal import (
    _branch_and_bound,
    _cover_masks,
    _rebalance,
    build_cover_instance,
    gen_max_dt_graph,
    gen_max_tournament,
    min_triad_cover,
    rebalance_to_max,
)
from pcties.indices import (
    count_inconsistent,
    count_inconsistent_tournament_fast,
    dt_edge_count,
    max_inconsistent_no_ties,
    max_inconsistent_with_ties,
)

from conftest import MAX_T6, MAX_T7, random_tournament


def _expected_degree_multiset(n):
    if n % 2:
        r = (n - 1) // 2
        return sorted([r] * n)
    r = n // 2
    return sorted([r - 1] * r + [r] * r)


class TestMaxTournament:
    def test_reproduces_reference_matrices(self):
        assert gen_max_tournament(6).relation_matrix.tolist() == MAX_T6
        assert gen_max_tournament(7).relation_matrix.tolist() == MAX_T7

    def test_n3_cycle(self):
        g = gen_max_tournament(3)
        assert count_inconsistent_tournament_fast(g) == 1

    def test_tiny(self):
        assert gen_max_tournament(1).directed == frozenset()
        assert gen_max_tournament(2).is_tournament

    def test_degree_condition_and_count(self):
        for n in range(3, 201):
            g = gen_max_tournament(n)
            assert g.is_tournament
            assert sorted(g.in_degrees().tolist()) == _expected_degree_multiset(n)
            assert count_inconsistent_tournament_fast(g) == max_inconsistent_no_ties(n)


class TestRebalance:
    def test_transitive_five(self):
        rows = [[0] * 5 for _ in range(5)]
        for i in range(5):
            for j in range(i + 1, 5):
                rows[i][j], rows[j][i] = 1, -1
        g = matrix_to_graph(validate_matrix(rows))
        r = rebalance_to_max(g)
        assert sorted(r.in_degrees().tolist()) == [2, 2, 2, 2, 2]
        assert count_inconsistent_tournament_fast(r) == 5

    def test_already_maximal_is_fixpoint(self):
        g = gen_max_tournament(6)
        assert rebalance_to_max(g) == g
        assert _rebalance(g)[1] == []  # zero flips

    def test_rejects_ties(self):
        g = matrix_to_graph(validate_matrix([[0, 0], [0, 0]]))
        with pytest.raises(NotATournament):
            rebalance_to_max(g)

    def test_random_tournaments_reach_max(self):
        rng = np.random.default_rng(47)
        for _ in range(500):
            n = int(rng.integers(3, 16))
            g = random_tournament(n, rng)
            r = rebalance_to_max(g)
            assert sorted(r.in_degrees().tolist()) == _expected_degree_multiset(n)
            assert count_inconsistent_tournament_fast(r) == max_inconsistent_no_ties(n)

    def test_monotone_and_bounded_flips(self):
        rng = np.random.default_rng(53)
        for _ in range(120):
            n = int(rng.integers(3, 13))
            g = random_tournament(n, rng)
            rel = g.relation_matrix.copy()
            count = count_inconsistent_tournament_fast(g)
            _, flips = _rebalance(g)
            assert len(flips) <= comb(n, 2) * n
            from pcties.core import GtGraph

            for a, b in flips:
                rel[a, b], rel[b, a] = -1, 1
                new_count = count_inconsistent_tournament_fast(GtGraph._from_rel(rel))
                assert new_count >= count
                count = new_count
            assert count == max_inconsistent_no_ties(n)


class TestMaxDtGraph:
    def test_structure(self):
        dt = gen_max_dt_graph(6)
        assert dt.part1 == (0, 1, 2) and dt.part2 == (3, 4, 5)
        assert dt.graph.directed_edge_count == 6
        assert count_inconsistent(dt.graph) == 20
        # cross pairs are all ties
        for i in dt.part1:
            for j in dt.part2:
                assert dt.graph.relation(i, j) == 0

    def test_n7_count(self):
        dt = gen_max_dt_graph(7)
        assert count_inconsistent(dt.graph) == max_inconsistent_with_ties(7) == 33

    def test_n4_matches_four_it1(self):
        dt = gen_max_dt_graph(4)
        census = triad_census(dt.graph)
        assert census.as_dict()["IT1"] == 4
        assert census.inconsistent_total == 4

    def test_small_sizes(self):
        assert gen_max_dt_graph(2).graph.undirected == frozenset({(0, 1)})
        with pytest.raises(ValidationError):
            gen_max_dt_graph(1)

    def test_census_range(self):
        for n in range(3, 61):
            dt = gen_max_dt_graph(n)
            census = triad_census(dt.graph)
            assert census.t0 == 0, n
            assert census.inconsistent_total == max_inconsistent_with_ties(n), n
            assert dt.graph.directed_edge_count == dt_edge_count(n)

    def test_cross_part_triads_inconsistent(self):
        for n in (5, 8, 11):
            dt = gen_max_dt_graph(n)
            part1 = set(dt.part1)
            for (i, j, k), cls in iter_triads(dt.graph):
                inside = {i, j, k} <= part1 or not ({i, j, k} & part1)
                if not inside:
                    assert cls.is_inconsistent


class TestCoverInstance:
    def test_n5_shape(self):
        inst = build_cover_instance(5)
        assert len(inst.universe) == 10
        assert len(inst.sets) == 10
        assert all(len(ts) == 3 for ts in inst.sets.values())

    def test_n3_shape(self):
        inst = build_cover_instance(3)
        assert len(inst.universe) == 1
        assert len(inst.sets) == 3
        assert all(len(ts) == 1 for ts in inst.sets.values())

    def test_general_shape(self):
        for n in (4, 6, 9):
            inst = build_cover_instance(n)
            assert len(inst.universe) == comb(n, 3)
            assert len(inst.sets) == comb(n, 2)
            assert all(len(ts) == n - 2 for ts in inst.sets.values())
            # each triad appears in exactly 3 candidate sets
            appearances = {}
            for ts in inst.sets.values():
                for t in ts:
                    appearances[t] = appearances.get(t, 0) + 1
            assert set(appearances.values()) == {3}


def _is_cover(n, edges):
    edge_set = set(edges)
    return all(
        any((min(a, b), max(a, b)) in edge_set for a, b in itertools.combinations(t, 2))
        for t in itertools.combinations(range(n), 3)
    )


class TestMinCover:
    def test_exact_sizes(self):
        for n in range(3, 8):
            edges, size = min_triad_cover(n, mode="exact")
            assert size == dt_edge_count(n), n
            assert len(edges) == size
            assert _is_cover(n, edges)

    def test_exhaustive_confirmation_small(self):
        # No subset of size dt_edge_count(n) - 1 covers everything
        for n in (4, 5, 6):
            pairs, masks, full = _cover_masks(n)
            target = dt_edge_count(n) - 1
            found = False
            for subset in itertools.combinations(range(len(pairs)), target):
                covered = 0
                for p in subset:
                    covered |= masks[p]
                if covered == full:
                    found = True
                    break
            assert not found, f"a cover of size {target} exists for n={n}"

    def test_exhaustive_confirmation_n7(self):
        # independent of the solver: none of the C(21,8) subsets of size
        # X(7)-1 covers all 35 triads (coverage is monotone, so no smaller
        # subset does either)
        pairs, masks, full = _cover_masks(7)
        for subset in itertools.combinations(masks, dt_edge_count(7) - 1):
            covered = 0
            for mask in subset:
                covered |= mask
            if covered == full:
                pytest.fail("a cover of size X(7)-1 exists")

    def test_n5_witness_is_triangle_plus_edge(self):
        edges, size = min_triad_cover(5, mode="exact")
        assert size == 4
        from collections import Counter

        degree = Counter(v for e in edges for v in e)
        tri_vertices = {v for v, d in degree.items() if d == 2}
        single = [e for e in edges if not (set(e) & tri_vertices)]
        triangle = [e for e in edges if set(e) <= tri_vertices]
        assert len(tri_vertices) == 3 and len(triangle) == 3 and len(single) == 1

    def test_greedy_feasible(self):
        for n in range(3, 21):
            edges, size = min_triad_cover(n, mode="greedy")
            assert _is_cover(n, edges)
            assert size >= dt_edge_count(n)

    def test_exact_budget(self):
        with pytest.raises(BudgetExceeded):
            min_triad_cover(9, mode="exact")
        edges, size = min_triad_cover(3, mode="exact")
        assert size == 1

    def test_bad_mode(self):
        with pytest.raises(ValidationError):
            min_triad_cover(5, mode="fast")

    def test_branch_and_bound_improves_bad_incumbent(self):
        # hand the search a deliberately fat incumbent; it must recover the minimum
        n = 5
        pairs, masks, full = _cover_masks(n)
        fat = list(range(8))
        covered = 0
        for p in fat:
            covered |= masks[p]
        assert covered == full
        best = _branch_and_bound(n, pairs, masks, full, fat)
        assert len(best) == dt_edge_count(n)

"""
Integration tests: min-cut counts recovered through sign queries on the
sample graph files and small generated instances
"""
from fractions import Fraction
from itertools import combinations

import pytest

from src.graphs.families import clique_minus_edge, cycle_graph
from src.graphs.io import read_graph
from src.reduction.mincut import CutCount, count_min_cuts_brute
from src.reduction.sign_reduction import SignReduction, count_min_cuts_via_sign

F = Fraction
Q_VALUES = [F(3, 2), F(5, 2), F(1, 2), F(-1)]


def first_nonadjacent_pair(g):
    adjacent = {frozenset(edge) for edge in g.edges}
    for s, t in combinations(range(g.vertex_count), 2):
        if frozenset((s, t)) not in adjacent:
            return s, t
    return None


class TestSampleFiles:
    """Test reduction runs on the bundled graphs"""

    @pytest.mark.parametrize("name", ["c4", "path_sut"])
    @pytest.mark.parametrize("q", [F(3, 2), F(1, 2), F(-2), F(-1)])
    def test_matches_enumeration(self, data_dir, name, q):
        parsed = read_graph(data_dir / f"{name}.txt")
        s, t = parsed.terminals["s"], parsed.terminals["t"]
        expected = count_min_cuts_brute(parsed.graph, s, t)
        assert count_min_cuts_via_sign(parsed.graph, s, t, q) == expected

    def test_cycle_at_minus_one(self):
        assert count_min_cuts_via_sign(cycle_graph(4), 0, 2, F(-1)) == CutCount(2, 4)


class TestGeneratedInstances:
    """Test reduction runs against enumeration on generated connected graphs"""

    def test_clique_minus_edge(self):
        graph, s, t = clique_minus_edge(4)
        count = count_min_cuts_brute(graph, s, t)
        assert (count.k, count.C) == (2, 2)
        assert SignReduction().run(graph, s, t, F(3, 2)).count == count

    @pytest.mark.slow
    @pytest.mark.parametrize("q", Q_VALUES)
    def test_every_small_connected_graph(self, atlas, q):
        """One run per isomorphism class of connected simple graphs with at most 6 edges"""
        checked = 0
        for g in atlas(7, 6):
            if not g.is_connected():
                continue
            pair = first_nonadjacent_pair(g)
            if pair is None:
                continue
            s, t = pair
            assert count_min_cuts_via_sign(g, s, t, q) == count_min_cuts_brute(g, s, t), g
            checked += 1
        assert checked > 40

    @pytest.mark.slow
    @pytest.mark.parametrize("q", Q_VALUES)
    def test_random_multigraphs(self, gen, q):
        checked = 0
        while checked < 25:
            g = gen.multigraph(max_vertices=6, max_edges=9, loops=False, connected=True, min_vertices=3)
            if any({u, v} == {0, 1} for u, v in g.edges):
                continue
            expected = count_min_cuts_brute(g, 0, 1)
            assert count_min_cuts_via_sign(g, 0, 1, q) == expected, g
            checked += 1

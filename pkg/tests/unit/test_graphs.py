"""
Unit tests for the multigraph model, file format and graph families
"""
from fractions import Fraction

import networkx as nx
import pytest

from src.errors import GraphFormatError
from src.graphs.families import (clique_minus_edge, complete_graph, cycle_graph, diamond_graph, path_graph,
                                 petersen_graph, petersen_minus_edge)
from src.graphs.io import format_graph_text, parse_graph_text, read_graph
from src.graphs.multigraph import Multigraph, UnionFind, complete_weights, find_bridges, uniform_weights


class TestMultigraph:
    """Test minors, labels and structural predicates"""

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValueError, match="endpoint outside"):
            Multigraph(2, ((0, 2),))

    def test_labels_follow_edges_through_minors(self):
        g = Multigraph(3, ((0, 1), (1, 2), (0, 2)))
        deleted = g.delete(1)
        assert deleted.labels == (0, 2)
        assert deleted.endpoints(2) == (0, 2)

        contracted = g.contract(0)
        assert contracted.vertex_count == 2
        assert contracted.labels == (1, 2)
        # 1 merged into 0, 2 shifts down to 1: both remaining edges join 0 and 1
        assert contracted.edges == ((0, 1), (0, 1))

    def test_contracting_a_loop_deletes_it(self):
        g = Multigraph(2, ((0, 0), (0, 1)))
        assert g.contract(0) == g.delete(0)

    def test_add_edge_gets_fresh_label(self):
        g = Multigraph(3, ((0, 1), (1, 2)), (5, 9))
        extended, label = g.add_edge(0, 2)
        assert label == 10
        assert extended.endpoints(10) == (0, 2)

    def test_kappa_counts_isolated_vertices(self):
        g = Multigraph(5, ((0, 1), (2, 2)))
        assert g.kappa() == 4
        assert g.kappa([]) == 5
        assert not g.is_connected()

    def test_loops_and_bridges(self):
        # triangle 0-1-2 with a pendant edge to 3 and a loop at 3
        g = Multigraph(4, ((0, 1), (1, 2), (2, 0), (2, 3), (3, 3)))
        assert g.loops() == frozenset({4})
        assert g.bridges() == frozenset({3})
        assert not g.is_bridgeless()

    def test_parallel_edges_are_not_bridges(self):
        assert find_bridges(2, [(0, 1), (0, 1)]) == set()
        assert find_bridges(2, [(0, 1)]) == {0}

    def test_bridges_match_networkx(self, gen):
        for _ in range(100):
            g = gen.multigraph(max_vertices=7, max_edges=9, loops=False)
            simple = nx.Graph(g.to_networkx())
            if simple.number_of_edges() != g.edge_count:
                continue
            expected = {frozenset(e) for e in nx.bridges(simple)}
            assert {frozenset(g.endpoints(label)) for label in g.bridges()} == expected

    def test_bipartite_and_eulerian(self):
        assert cycle_graph(4).is_bipartite()
        assert not cycle_graph(5).is_bipartite()
        assert not Multigraph(1, ((0, 0),)).is_bipartite()
        assert cycle_graph(5).is_eulerian()
        assert not path_graph(2).is_eulerian()

    def test_union_find(self):
        forest = UnionFind(4)
        assert forest.union(0, 1)
        assert not forest.union(1, 0)
        forest.union(2, 3)
        assert forest.components == 2
        assert forest.find(0) == forest.find(1) != forest.find(2)


class TestWeights:
    """Test uniform and partial weight functions"""

    def test_uniform(self, k3):
        assert uniform_weights(k3, "-1/2") == {0: Fraction(-1, 2), 1: Fraction(-1, 2), 2: Fraction(-1, 2)}

    def test_complete_fills_gaps(self, k3):
        weights = complete_weights(k3, {0: Fraction(3), 1: None}, Fraction(-1))
        assert weights == {0: Fraction(3), 1: Fraction(-1), 2: Fraction(-1)}

    def test_complete_without_gamma(self, k3):
        with pytest.raises(ValueError, match="no uniform gamma"):
            complete_weights(k3, {0: Fraction(1)}, None)

    def test_weights_in_order_must_be_total(self, k3):
        with pytest.raises(ValueError, match="missing edge"):
            k3.weights_in_order({0: Fraction(1)})


class TestGraphText:
    """Test the graph file format"""

    def test_parse_weights_and_terminals(self):
        parsed = parse_graph_text(
            "# a comment\nvertices 3\nedge 0 1 -1/2\nedge 1 2   # no weight\nterminal s 0\nterminal t 2\n")
        assert parsed.graph == Multigraph(3, ((0, 1), (1, 2)))
        assert parsed.weights == {0: Fraction(-1, 2), 1: None}
        assert parsed.terminals == {"s": 0, "t": 2}
        assert not parsed.is_weighted

    def test_isolated_vertices_are_kept(self):
        assert parse_graph_text("vertices 4\nedge 0 1\n").graph.vertex_count == 4

    @pytest.mark.parametrize("text, message", [
        ("edge 0 1\n", "before 'vertices'"),
        ("vertices 2\nedge 0 5\n", "out of range"),
        ("vertices 2\nvertices 3\n", "duplicate"),
        ("vertices 2\nedge 0 1 1.5\n", "malformed rational"),
        ("vertices 2\nfoo\n", "unrecognised"),
        ("", "missing 'vertices'"),
        ("vertices 2\nterminal s 7\n", "terminal s out of range"),
    ])
    def test_malformed(self, text, message):
        with pytest.raises(GraphFormatError, match=message):
            parse_graph_text(text)

    def test_format_round_trip(self):
        graph = Multigraph(3, ((0, 1), (1, 1), (1, 2)))
        weights = {0: Fraction(2, 3), 2: Fraction(-5)}
        text = format_graph_text(graph, weights, {"s": 0, "t": 2})
        parsed = parse_graph_text(text)
        assert parsed.graph == graph
        assert parsed.weights == {0: Fraction(2, 3), 1: None, 2: Fraction(-5)}
        assert parsed.terminals == {"s": 0, "t": 2}

    def test_missing_file(self, tmp_path):
        with pytest.raises(GraphFormatError, match="cannot read"):
            read_graph(tmp_path / "absent.txt")

    def test_sample_files(self, data_dir):
        petersen = read_graph(data_dir / "petersen.txt").graph
        assert (petersen.vertex_count, petersen.edge_count) == (10, 15)
        assert all(d == 3 for d in petersen.degrees())
        c4 = read_graph(data_dir / "c4.txt")
        assert c4.terminals == {"s": 0, "t": 2}


class TestFamilies:
    """Test the named graph families"""

    def test_sizes(self):
        assert complete_graph(5).edge_count == 10
        assert cycle_graph(1).loops() == frozenset({0})
        assert cycle_graph(2).edges == ((0, 1), (0, 1))
        assert path_graph(3).vertex_count == 4
        petersen = petersen_graph()
        assert (petersen.vertex_count, petersen.edge_count) == (10, 15)

    def test_clique_minus_edge(self):
        g, s, t = clique_minus_edge(5)
        assert (s, t) == (0, 1)
        assert g.edge_count == 9
        assert (0, 1) not in g.edges

    def test_petersen_minus_edge(self):
        g, s, t = petersen_minus_edge()
        assert g.edge_count == 14
        degrees = g.degrees()
        assert degrees[s] == degrees[t] == 2

    def test_diamond(self):
        g, s, t = diamond_graph()
        assert g.edge_count == 4
        assert (s, t) == (0, 1)

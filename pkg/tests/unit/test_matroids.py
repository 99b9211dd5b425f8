"""
Unit tests for binary matroids and the matroid random-cluster polynomial
"""
from fractions import Fraction

import numpy as np
import pytest

from src.errors import CapExceededError, GraphFormatError
from src.graphs.families import complete_graph, cycle_graph, path_graph
from src.graphs.multigraph import Multigraph
from src.matroids.binary import (BinaryMatroid, cycle_matroid, format_matroid_text, gf2_nullspace_basis, gf2_rank,
                                 parse_matroid_text, read_matroid)
from src.matroids.tutte import dual_weights, z_tilde, z_tilde_brute
from src.tutte.evaluator import z_brute


@pytest.fixture
def random_matroid(gen):
    """Factory: random 0/1 matrix with up to 6 columns"""
    def make(max_rows: int = 4, max_cols: int = 6) -> BinaryMatroid:
        rows = gen.rng.randint(1, max_rows)
        cols = gen.rng.randint(1, max_cols)
        return BinaryMatroid(np.array([[gen.rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]))
    return make


class TestGF2:
    """Test GF(2) linear algebra helpers"""

    def test_rank(self):
        assert gf2_rank(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 2
        assert gf2_rank(np.eye(3, dtype=np.uint8)) == 3
        assert gf2_rank(np.zeros((2, 2), dtype=np.uint8)) == 0

    def test_nullspace_is_orthogonal(self, gen):
        for _ in range(30):
            matrix = np.array([[gen.rng.randint(0, 1) for _ in range(6)] for _ in range(3)], dtype=np.uint8)
            basis = gf2_nullspace_basis(matrix)
            assert basis.shape[0] == 6 - gf2_rank(matrix)
            assert not ((matrix.astype(int) @ basis.T.astype(int)) % 2).any()


class TestBinaryMatroid:
    """Test minors, duality and structure"""

    def test_cycle_matroid_rank(self):
        assert cycle_matroid(complete_graph(4)).rank() == 3
        assert cycle_matroid(cycle_graph(5)).rank() == 4

    def test_loops_and_coloops(self):
        g = Multigraph(3, ((0, 1), (1, 1), (1, 2), (1, 2)))
        m = cycle_matroid(g)
        assert m.loops() == frozenset({1})
        assert m.coloops() == frozenset({0})
        assert m.parallel_pairs() == [(2, 3)]

    def test_series_pairs(self):
        m = cycle_matroid(cycle_graph(3))
        assert len(m.series_pairs()) == 3

    def test_contract_matches_graph_contraction(self):
        g = complete_graph(4)
        for label in g.labels:
            assert cycle_matroid(g).contract(label).same_rank_function(cycle_matroid(g.contract(label)))
            assert cycle_matroid(g).delete(label).same_rank_function(cycle_matroid(g.delete(label)))

    def test_double_dual(self, random_matroid):
        for _ in range(30):
            m = random_matroid()
            assert m.dual().dual().same_rank_function(m)
            assert m.dual().rank() == m.size - m.rank()

    def test_bicycle_dimension(self):
        # C4's cycle and cut spaces share the all-ones vector
        assert cycle_matroid(cycle_graph(4)).bicycle_dimension() == 1
        assert cycle_matroid(cycle_graph(3)).bicycle_dimension() == 0

    def test_element_identities(self):
        with pytest.raises(ValueError, match="distinct element"):
            BinaryMatroid(np.eye(2, dtype=np.uint8), ("a", "a"))
        with pytest.raises(ValueError, match="unknown matroid element"):
            BinaryMatroid(np.eye(2, dtype=np.uint8)).column(5)


class TestMatroidText:
    """Test the matroid file format"""

    def test_round_trip(self, tmp_path):
        m = BinaryMatroid(np.array([[1, 0, 1], [0, 1, 1]]))
        path = tmp_path / "m.txt"
        path.write_text(format_matroid_text(m))
        assert read_matroid(path).same_rank_function(m)

    @pytest.mark.parametrize("text", ["", "matrix 2\n01\n", "matrix 2 2\n01\n", "matrix 1 2\n0a\n"])
    def test_malformed(self, text):
        with pytest.raises(GraphFormatError):
            parse_matroid_text(text)


class TestZTilde:
    """Test the matroid polynomial and its identities"""

    def test_matches_enumeration(self, gen, random_matroid):
        for _ in range(40):
            m = random_matroid()
            q = gen.rational()
            if q == 0:
                continue
            w = {e: gen.rational() for e in m.elements}
            assert z_tilde(m, q, w) == z_tilde_brute(m, q, w)

    def test_graph_identity(self, gen):
        """q^|V| Z~(M(G)) = Z(G)"""
        for _ in range(40):
            g = gen.multigraph(max_vertices=5, max_edges=6)
            q = gen.rational()
            if q == 0:
                continue
            w = gen.weights(g)
            assert q ** g.vertex_count * z_tilde(cycle_matroid(g), q, w) == z_brute(g, q, w)

    def test_duality(self, gen, random_matroid):
        for _ in range(40):
            m = random_matroid()
            q = gen.rational()
            if q == 0:
                continue
            w = {e: gen.rational() for e in m.elements}
            if any(value == 0 for value in w.values()):
                continue
            product = Fraction(1)
            for value in w.values():
                product *= value
            expected = product * z_tilde(m.dual(), q, dual_weights(w, q)) / q ** m.rank()
            assert z_tilde(m, q, w) == expected

    def test_loop_and_coloop_factors(self):
        q, w = Fraction(3), {0: Fraction(-2), 1: Fraction(5)}
        bridge_and_loop = cycle_matroid(Multigraph(2, ((0, 1), (1, 1))))
        assert z_tilde(bridge_and_loop, q, w) == (1 + Fraction(-2) / q) * (1 + 5)

    def test_rejects_q_zero_and_large_sets(self):
        m = cycle_matroid(path_graph(3))
        with pytest.raises(ValueError):
            z_tilde(m, 0, {e: Fraction(1) for e in m.elements})
        with pytest.raises(CapExceededError):
            z_tilde_brute(m, 2, {e: Fraction(1) for e in m.elements}, cap=2)

    def test_dual_weights_need_nonzero(self):
        with pytest.raises(ValueError):
            dual_weights({0: Fraction(0)}, Fraction(2))

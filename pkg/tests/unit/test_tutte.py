"""
Unit tests for the exact Z evaluators and their specializations
"""
from fractions import Fraction
from unittest.mock import patch

import pytest

from src.errors import CapExceededError
from src.graphs.families import complete_graph, cycle_graph, path_graph
from src.graphs.multigraph import Multigraph, uniform_weights
from src.tutte.evaluator import tutte_value, z_brute, z_multivariate, z_two_terminal, z_two_terminal_brute
from src.tutte.specializations import (chromatic_poly, count_colourings_brute, count_nzflows_brute, flow_poly,
                                       flow_value, potts_brute)


class TestKnownValues:
    """Test hand-computed values of Z and T"""

    def test_triangle_at_q2_gamma_minus2(self, k3):
        """8 - 24 + 24 - 16 over subsets of size 0..3"""
        assert z_multivariate(k3, 2, uniform_weights(k3, -2)) == -8
        assert z_brute(k3, 2, uniform_weights(k3, -2)) == -8

    def test_k4_has_no_3_colouring(self):
        k4 = complete_graph(4)
        assert z_multivariate(k4, 3, uniform_weights(k4, -1)) == 0

    def test_empty_graph(self):
        assert z_multivariate(Multigraph(0), Fraction(5, 3), {}) == 1
        assert z_brute(Multigraph(0), 0, {}) == 1

    def test_isolated_vertices_multiply_by_q(self, k3):
        padded = Multigraph(5, k3.edges)
        w = uniform_weights(k3, Fraction(1, 2))
        assert z_multivariate(padded, 3, w) == 9 * z_multivariate(k3, 3, w)

    def test_q_zero_and_q_one(self, k3):
        w = {0: Fraction(2), 1: Fraction(-1, 3), 2: Fraction(5)}
        assert z_multivariate(k3, 0, w) == 0
        assert z_multivariate(k3, 1, w) == 3 * Fraction(2, 3) * 6
        assert z_brute(k3, 1, w) == 12

    def test_loop_factor(self):
        loop = Multigraph(1, ((0, 0),))
        assert z_multivariate(loop, Fraction(7, 2), {0: Fraction(-3)}) == Fraction(7, 2) * (1 - 3)

    def test_tutte_triangle(self, k3):
        # T(K3; x, y) = x^2 + x + y
        assert tutte_value(k3, 2, 3) == 9
        assert tutte_value(k3, Fraction(-1, 2), Fraction(1, 3)) == Fraction(1, 4) - Fraction(1, 2) + Fraction(1, 3)

    def test_tutte_cycle(self):
        # T(C4; x, y) = x^3 + x^2 + x + y
        assert tutte_value(cycle_graph(4), -2, 5) == -8 + 4 - 2 + 5

    def test_tutte_counts_subsets_at_2_2(self):
        assert tutte_value(complete_graph(4), 2, 2) == 2 ** 6

    def test_tutte_rejects_x_or_y_one(self, k3):
        with pytest.raises(ValueError):
            tutte_value(k3, 1, 2)


class TestEvaluatorAgreement:
    """Test z_multivariate against subset enumeration"""

    def test_random_multigraphs(self, gen):
        for _ in range(150):
            g = gen.multigraph(max_vertices=5, max_edges=9)
            q = gen.rational()
            w = gen.weights(g)
            assert z_multivariate(g, q, w) == z_brute(g, q, w)

    def test_relabelled_edges(self, gen):
        g = Multigraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)), (10, 3, 7, 42, 5))
        w = gen.weights(g)
        assert z_multivariate(g, Fraction(5, 2), w) == z_brute(g, Fraction(5, 2), w)

    def test_brute_cap(self):
        g = path_graph(6)
        with pytest.raises(CapExceededError):
            z_brute(g, 2, uniform_weights(g, 1), cap=5)

    def test_brute_cap_from_config(self):
        g = path_graph(6)
        with patch("src.tutte.evaluator.get_config") as mock_config:
            mock_config.return_value.evaluation.brute_force_cap = 3
            with pytest.raises(CapExceededError, match="brute-force cap exceeded"):
                z_brute(g, 2, uniform_weights(g, 1))


class TestTwoTerminal:
    """Test the Z_st / Z_s|t split"""

    def test_split_matches_enumeration(self, gen):
        for _ in range(60):
            g = gen.multigraph(min_vertices=2, max_vertices=5, max_edges=7)
            q = gen.rational()
            w = gen.weights(g)
            expected = z_two_terminal_brute(g, 0, 1, q, w)
            assert z_two_terminal(g, 0, 1, q, w) == expected
            assert expected.total == z_brute(g, q, w)

    def test_single_edge(self):
        g = Multigraph(2, ((0, 1),))
        split = z_two_terminal(g, 0, 1, 3, {0: Fraction(-2)})
        assert split.z_st == 3 * -2
        assert split.z_s_bar_t == 9

    def test_q_one_falls_back(self, k3):
        w = uniform_weights(k3, Fraction(1, 2))
        assert z_two_terminal(k3, 0, 1, 1, w) == z_two_terminal_brute(k3, 0, 1, 1, w)

    def test_terminals_validated(self, k3):
        with pytest.raises(ValueError, match="distinct"):
            z_two_terminal(k3, 1, 1, 2, uniform_weights(k3, 1))
        with pytest.raises(ValueError, match="not a vertex"):
            z_two_terminal(k3, 0, 3, 2, uniform_weights(k3, 1))


class TestSpecializations:
    """Test chromatic, flow and Potts specializations against oracles"""

    def test_chromatic_triangle(self, k3):
        assert chromatic_poly(k3).coefficients == (0, 2, -3, 1)

    def test_chromatic_k4(self):
        assert chromatic_poly(complete_graph(4)).coefficient_strings() == ["0", "-6", "11", "-6", "1"]

    def test_flow_cycle_and_k4(self):
        assert flow_poly(cycle_graph(5)).coefficients == (-1, 1)
        # (q-1)(q-2)(q-3)
        assert flow_poly(complete_graph(4)).coefficients == (-6, 11, -6, 1)

    def test_flow_of_bridge_is_zero(self):
        assert flow_poly(path_graph(2)).is_zero()

    def test_flow_value_rejects_zero(self, k3):
        with pytest.raises(ValueError):
            flow_value(k3, 0)

    def test_oracles_match_polynomials(self, atlas):
        for g in atlas(4, 6):
            chromatic = chromatic_poly(g)
            flows = flow_poly(g)
            for q in (1, 2, 3, 4):
                assert chromatic(q) == count_colourings_brute(g, q)
                assert flows(q) == count_nzflows_brute(g, q)

    def test_potts_equals_z(self, gen):
        for _ in range(40):
            g = gen.multigraph(max_vertices=4, max_edges=6)
            w = gen.weights(g)
            for q in (1, 2, 3):
                assert potts_brute(g, q, w) == z_brute(g, q, w)

    def test_potts_uniform_weight(self, k3):
        assert potts_brute(k3, 2, Fraction(-1)) == 0

    def test_oracle_arguments(self, k3):
        with pytest.raises(ValueError, match="positive integer"):
            count_colourings_brute(k3, 0)
        with pytest.raises(CapExceededError):
            count_colourings_brute(k3, 10, cap=100)
        assert count_colourings_brute(Multigraph(1, ((0, 0),)), 3) == 0

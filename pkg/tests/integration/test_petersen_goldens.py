"""
Integration tests: known Petersen graph values across the evaluator,
specializations, sign dispatcher and gadget families
"""
from fractions import Fraction

import pytest

from src.gadgets.families import petersen_flow_weight
from src.graphs.families import petersen_graph, petersen_minus_edge
from src.graphs.multigraph import uniform_weights
from src.regions.point import PlanePoint
from src.signs.dispatch import SignDispatcher, SignValue
from src.tutte.evaluator import tutte_value, z_multivariate
from src.tutte.specializations import flow_poly, flow_value

F = Fraction
PETERSEN_FLOWS = (240, -620, 624, -325, 95, -15, 1)
PETERSEN_MINUS_EDGE_FLOWS = (-66, 157, -138, 58, -12, 1)


@pytest.fixture(scope="module")
def petersen():
    return petersen_graph()


class TestPetersen:
    """Test flow polynomials and derived signs of the Petersen graph"""

    def test_flow_polynomial(self, petersen):
        assert flow_poly(petersen).coefficients == PETERSEN_FLOWS

    def test_flow_polynomial_after_deleting_any_edge(self, petersen):
        for label in petersen.labels:
            assert flow_poly(petersen.delete(label)).coefficients == PETERSEN_MINUS_EDGE_FLOWS

    def test_no_four_flow_but_240_five_flows(self, petersen):
        assert flow_value(petersen, 4) == 0
        assert flow_value(petersen, 5) == 240

    def test_subset_count(self, petersen):
        assert tutte_value(petersen, 2, 2) == 2 ** 15

    def test_flow_values_at_five_halves(self, petersen):
        graph, _, _ = petersen_minus_edge()
        assert flow_value(petersen, F(5, 2)) == F(135, 64)
        assert flow_value(graph, F(5, 2)) == F(-27, 32)
        assert petersen_flow_weight(F(5, 2)) == F(-25, 16)

    def test_z_on_the_x_zero_line(self, petersen):
        """Z(G; q, -q) = (-1)^|E| q^|V| F(G; q): negative for both graphs at q = 5/2"""
        q = F(5, 2)
        assert z_multivariate(petersen, q, uniform_weights(petersen, -q)) == -q ** 10 * F(135, 64)
        graph, _, _ = petersen_minus_edge()
        assert z_multivariate(graph, q, uniform_weights(graph, -q)) == q ** 10 * F(-27, 32)

    def test_dispatcher_signs(self, petersen):
        dispatcher = SignDispatcher()
        # q = 4 on the x = 0 line: no nowhere-zero 4-flow
        assert dispatcher.dispatch(petersen, PlanePoint(0, -3)).sign == SignValue.ZERO
        # q = 3 on the y = 0 line: 3-colourable
        assert dispatcher.dispatch(petersen, PlanePoint(-2, 0)).sign == SignValue.POSITIVE
        # cubic, so not Eulerian: no nowhere-zero 2-flow
        assert dispatcher.dispatch(petersen, PlanePoint(0, -1)).sign == SignValue.ZERO

"""
Unit tests for the NP deciders, the sign-certified matroid recursions and
the sign dispatcher
"""
from fractions import Fraction
from unittest.mock import MagicMock

import pytest

from src.arith.rational import format_rational
from src.errors import HypothesisError, InstanceTooLargeError, TutteSignError
from src.graphs.families import complete_graph, cycle_graph, path_graph, petersen_graph
from src.graphs.multigraph import Multigraph, uniform_weights
from src.matroids.binary import cycle_matroid
from src.matroids.tutte import z_tilde
from src.regions.classifier import Region
from src.regions.point import PlanePoint
from src.signs.deciders import decide_colourable, decide_nz_flow
from src.signs.dispatch import SignDispatcher, SignReport, SignValue, sign_dispatch
from src.signs.matroid_values import value_matroid_js, value_matroid_qneg, within_sqrt_band
from src.tutte.evaluator import z_brute
from src.tutte.specializations import count_colourings_brute, count_nzflows_brute

F = Fraction


def exact_sign(g: Multigraph, p: PlanePoint) -> SignValue:
    return SignValue.of(z_brute(g, p.q, uniform_weights(g, p.gamma)))


@pytest.fixture
def dispatcher():
    """Dispatcher with a fixed node cap and default method"""
    config = MagicMock()
    config.sign.decider_node_cap = 1_000_000
    config.sign.default_method = "auto"
    config.sign.matroid_edge_limit = 20
    return SignDispatcher(config)


class TestDeciders:
    """Test the backtracking deciders against brute-force counts"""

    def test_known_instances(self):
        assert not decide_colourable(complete_graph(4), 3)
        assert decide_colourable(complete_graph(4), 4)
        assert decide_colourable(petersen_graph(), 3)
        assert decide_nz_flow(cycle_graph(5), 2)
        assert not decide_nz_flow(path_graph(1), 3)
        assert not decide_nz_flow(petersen_graph(), 4)
        assert decide_nz_flow(petersen_graph(), 5)
        assert decide_nz_flow(complete_graph(4), 4)
        assert not decide_nz_flow(complete_graph(4), 3)

    def test_loops(self):
        loop = Multigraph(1, ((0, 0),))
        assert not decide_colourable(loop, 3)
        assert decide_nz_flow(loop, 3)

    def test_against_brute_force(self, gen):
        for _ in range(120):
            g = gen.multigraph(max_vertices=5, max_edges=6)
            for q in (1, 2, 3, 4, 5):
                assert decide_colourable(g, q) == (count_colourings_brute(g, q) > 0)
                assert decide_nz_flow(g, q) == (count_nzflows_brute(g, q) > 0)

    def test_node_cap(self):
        with pytest.raises(InstanceTooLargeError, match="NP point, instance too large"):
            decide_colourable(petersen_graph(), 3, node_cap=1)
        with pytest.raises(InstanceTooLargeError):
            decide_nz_flow(petersen_graph(), 4, node_cap=5)

    def test_rejects_non_positive_q(self, k3):
        with pytest.raises(ValueError):
            decide_colourable(k3, 0)


class TestMatroidValues:
    """Test the sign-certified matroid recursions"""

    def test_qneg_positive_and_exact(self, gen):
        for _ in range(60):
            g = gen.multigraph(max_vertices=5, max_edges=7, loops=False)
            m = cycle_matroid(g)
            q = -gen.open_interval(F(0), F(4))
            w = {e: -gen.open_interval(F(0), F(2)) for e in m.elements}
            value = value_matroid_qneg(m, q, w)
            assert value == z_tilde(m, q, w)
            assert value > 0

    def test_qneg_hypotheses(self):
        m = cycle_matroid(Multigraph(1, ((0, 0),)))
        with pytest.raises(HypothesisError, match="loopless"):
            value_matroid_qneg(m, -1, {0: F(-1)})
        k3 = cycle_matroid(complete_graph(3))
        with pytest.raises(HypothesisError, match=r"\[-2, 0\]"):
            value_matroid_qneg(k3, -1, {0: F(-3), 1: F(-1), 2: F(-1)})
        with pytest.raises(HypothesisError, match="q < 0"):
            value_matroid_qneg(k3, 1, {0: F(-1), 1: F(-1), 2: F(-1)})

    def test_js_sign_and_exact(self, gen):
        for _ in range(60):
            g = gen.multigraph(max_vertices=5, max_edges=7)
            m = cycle_matroid(g)
            q = gen.open_interval(F(0), F(1))
            coloops = m.coloops()
            half_band = (1 - q) / 2
            w = {}
            for e in m.elements:
                if m.is_loop(e):
                    w[e] = gen.open_interval(F(-1), F(2))
                elif e in coloops:
                    w[e] = -q - gen.open_interval(F(0), F(2))
                else:
                    w[e] = -1 + gen.open_interval(-half_band, half_band)
            value = value_matroid_js(m, q, w)
            assert value == z_tilde(m, q, w)
            assert SignValue.of(value) == (SignValue.NEGATIVE if m.rank() % 2 else SignValue.POSITIVE)

    def test_js_hypotheses(self):
        k3 = cycle_matroid(complete_graph(3))
        with pytest.raises(HypothesisError, match="0 < q < 1"):
            value_matroid_js(k3, 2, {0: F(-1), 1: F(-1), 2: F(-1)})
        with pytest.raises(HypothesisError, match="sqrt"):
            value_matroid_js(k3, F(1, 2), {0: F(0), 1: F(-1), 2: F(-1)})
        bridge = cycle_matroid(path_graph(1))
        with pytest.raises(HypothesisError, match="coloop"):
            value_matroid_js(bridge, F(1, 2), {0: F(-1, 4)})

    def test_band(self):
        assert within_sqrt_band(F(-1), F(1, 2))
        assert not within_sqrt_band(F(0), F(1, 2))


class TestSignDispatcher:
    """Test dispatch rules against exact evaluation"""

    def _check(self, dispatcher, gen, point_factory, rounds: int = 100, expected_method: str = None):
        for _ in range(rounds):
            g = gen.multigraph(max_vertices=5, max_edges=7)
            p = point_factory()
            report = dispatcher.dispatch(g, p, "fp")
            assert report.sign == exact_sign(g, p), (str(p), g)
            if expected_method is not None:
                assert report.method == expected_method

    def test_region_a(self, dispatcher, gen):
        self._check(dispatcher, gen, lambda: gen.point_in(lambda p: p.x >= 0 and p.y >= 0))

    def test_region_a_boundary_zeros(self, dispatcher):
        bridge = path_graph(1)
        assert dispatcher.dispatch(bridge, PlanePoint(0, 2)).sign == SignValue.ZERO
        loop = Multigraph(1, ((0, 0),))
        assert dispatcher.dispatch(loop, PlanePoint(2, 0)).sign == SignValue.ZERO

    def test_q_one_hyperbola(self, dispatcher, gen):
        def point():
            x = gen.rational()
            while x == 1:
                x = gen.rational()
            return PlanePoint(x, 1 + 1 / (x - 1))
        self._check(dispatcher, gen, point)

    def test_region_e_integer_q(self, dispatcher, gen):
        def point():
            q = gen.rng.choice([2, 3, 4])
            y = gen.open_interval(F(0), F(1))
            return PlanePoint(1 + q / (y - 1), y)
        self._check(dispatcher, gen, point, expected_method="potts-positive")

    def test_region_f_integer_q(self, dispatcher, gen):
        def point():
            q = gen.rng.choice([2, 3, 4])
            x = gen.open_interval(F(0), F(1))
            return PlanePoint(x, 1 + q / (x - 1))
        self._check(dispatcher, gen, point, expected_method="flow-expansion-sign")

    @pytest.mark.parametrize("x, y", [(-1, 0), (-2, 0), (-3, 0), (0, -1), (0, -2), (0, -5), (0, -6)])
    def test_special_points(self, dispatcher, gen, x, y):
        self._check(dispatcher, gen, lambda: PlanePoint(x, y))

    def test_bicycle_point(self, dispatcher, gen):
        self._check(dispatcher, gen, lambda: PlanePoint(-1, -1), expected_method="bicycle-space")

    def test_region_k(self, dispatcher, gen):
        self._check(dispatcher, gen, lambda: gen.point_in(lambda p: p.x > 1 and -1 <= p.y < 0),
                    expected_method="negative-q-loopless")

    def test_region_j(self, dispatcher, gen):
        self._check(dispatcher, gen, lambda: gen.point_in(lambda p: -1 <= p.x < 0 and p.y > 1),
                    expected_method="dual-negative-q")

    def test_region_l(self, dispatcher, gen):
        self._check(dispatcher, gen, lambda: gen.point_in(lambda p: 0 < p.x < 1 and -p.x < p.y < 0, F(-1), F(1)),
                    expected_method="alternating-rank-sign")

    def test_region_m(self, dispatcher, gen):
        self._check(dispatcher, gen, lambda: gen.point_in(lambda p: 0 < p.y < 1 and -p.y < p.x < 0, F(-1), F(1)),
                    expected_method="dual-alternating-rank-sign")

    @pytest.mark.parametrize("x, y, region", [
        (F(2), F(-1, 2), Region.K),
        (F(-1, 2), F(3), Region.J),
        (F(1, 2), F(-1, 4), Region.L),
        (F(-1, 4), F(1, 2), Region.M),
    ])
    def test_matroid_rules_carry_the_exact_value(self, dispatcher, gen, x, y, region):
        p = PlanePoint(x, y)
        for _ in range(30):
            g = gen.multigraph(max_vertices=5, max_edges=7)
            report = dispatcher.dispatch(g, p, "fp")
            value = z_brute(g, p.q, uniform_weights(g, p.gamma))
            assert report.region == region
            assert report.certificate.startswith(f"Z = {format_rational(value)}, ")

    def test_matroid_rules_above_the_edge_limit(self, dispatcher, k3):
        dispatcher.config.sign.matroid_edge_limit = 2
        report = dispatcher.dispatch(k3, PlanePoint(F(1, 2), F(-1, 4)), "fp")
        assert report.sign == SignValue.POSITIVE
        assert report.certificate == "loops=0, rank=2"

    def test_region_m_strips_bridges(self, dispatcher):
        # dual loops are the two bridges, each a factor x = -1/4
        p = PlanePoint(F(-1, 4), F(1, 2))
        report = dispatcher.dispatch(path_graph(2), p)
        assert report.certificate.endswith("bridges=2, rank=0")
        assert report.sign == exact_sign(path_graph(2), p)

    def test_q_zero(self, dispatcher, k3):
        report = dispatcher.dispatch(k3, PlanePoint(1, 5))
        assert report.sign == SignValue.ZERO
        assert report.method == "q-zero"

    def test_empty_graph(self, dispatcher):
        assert dispatcher.dispatch(Multigraph(0), PlanePoint(-1, F(-1, 2))).sign == SignValue.POSITIVE

    def test_hard_point_falls_back(self, dispatcher, k3):
        p = PlanePoint(F(-1, 2), F(-1, 2))
        report = dispatcher.dispatch(k3, p)
        assert report.method == "exact-fallback"
        assert report.region == Region.G
        assert report.sign == exact_sign(k3, p)
        with pytest.raises(TutteSignError, match="no polynomial-time sign rule"):
            dispatcher.dispatch(k3, p, "fp")

    def test_exact_method(self, dispatcher, k3):
        report = dispatcher.dispatch(k3, PlanePoint(2, 3), "exact")
        assert report == SignReport(SignValue.POSITIVE, "exact-fallback", "Z = 72", Region.A)

    def test_unknown_method(self, dispatcher, k3):
        with pytest.raises(ValueError, match="unknown sign method"):
            dispatcher.dispatch(k3, PlanePoint(2, 3), "guess")

    def test_np_point_too_large(self, k3):
        config = MagicMock()
        config.sign.decider_node_cap = 1
        config.sign.default_method = "auto"
        with pytest.raises(InstanceTooLargeError):
            SignDispatcher(config).dispatch(petersen_graph(), PlanePoint(-2, 0))

    def test_module_wrapper(self, k3):
        assert sign_dispatch(k3, PlanePoint(-1, 0)).sign == SignValue.ZERO
        assert sign_dispatch(cycle_graph(4), PlanePoint(-1, 0)).sign == SignValue.POSITIVE

    def test_sign_value(self):
        assert SignValue.of(F(-3, 7)) == SignValue.NEGATIVE
        assert SignValue.ZERO.label == "Zero"

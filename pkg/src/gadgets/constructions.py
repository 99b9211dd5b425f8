"""
Named point-to-point constructions.

Each construction checks its hypotheses exactly, builds composition trees or
fixed-shape gadgets from a single edge of weight gamma = y - 1, certifies the
implemented weight against the two-terminal evaluator, and asserts the
promised location of the resulting point(s).
"""
import logging
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .diamond import diamond_iterate
from .families import gamma_n_gadget, petersen_gadget
from .gadget import (Gadget, certify_expression, certify_gadget, expr_to_gadget, implemented_weight,
                     parallel_gadget, replace_every_edge)
from .search import approach_weight
from .shifts import Leaf, Parallel, Series, ShiftExpr, leaf_count, stretch_expr, thicken_expr
from ..arith.rational import format_rational, is_integer
from ..graphs.families import clique_minus_edge, petersen_minus_edge
from ..regions.classifier import OPEN_SEGMENT_START, SHARP_THRESHOLD, Region, classify
from ..regions.point import PlanePoint
from ..errors import GadgetError, HypothesisError
from config.settings import get_config

logger = logging.getLogger(__name__)

Built = List[Tuple[PlanePoint, Gadget]]

# Short ids accepted in place of the construction names
ALIASES: Dict[str, str] = {
    "lem:xlefttoyup": "two-stretch-lift",
    "lem:shiftB1": "region-b-far",
    "lem:shiftB2": "region-b-y-minus-one",
    "lem:shiftB3": "region-b-y-between",
    "lem:shiftB4": "region-b-x-between",
    "lem:triangle1": "below-line-y",
    "lem:triangle2": "below-line-x",
    "lem:3227g2": "diamond-escape",
    "lem:3227g1": "unit-square-negative-y",
    "lem:stretchCD": "even-stretch-cd",
    "lem:Fq12": "region-e-q-1-2",
    "lem:F": "clique-minus-edge",
    "lem2:F": "clique-minus-edge-into-bg",
    "lem:Eq01": "region-f-q-0-1",
    "lem:Eq12": "region-f-q-1-2",
    "lem:Eq2": "petersen-flow",
}


def _require(condition: bool, text: str, p: PlanePoint) -> None:
    if not condition:
        raise HypothesisError(f"hypothesis violated at {p}: {text}")


def _ensure(condition: bool, text: str, p: PlanePoint) -> None:
    if not condition:
        raise GadgetError(f"postcondition failed at {p}: {text}")


class ConstructionEngine:
    """Builds and certifies the gadgets for every named construction"""

    def __init__(self, config=None):
        self.config = config or get_config()
        self._builders: Dict[str, Callable[[PlanePoint], Built]] = {
            "two-stretch-lift": self.two_stretch_lift,
            "region-b-far": self.region_b_far,
            "region-b-y-minus-one": self.region_b_y_minus_one,
            "region-b-y-between": self.region_b_y_between,
            "region-b-x-between": self.region_b_x_between,
            "below-line-y": self.below_line_y,
            "below-line-x": self.below_line_x,
            "diamond-escape": self.diamond_escape,
            "unit-square-negative-y": self.unit_square_negative_y,
            "even-stretch-cd": self.even_stretch_cd,
            "region-e-q-1-2": self.region_e_q_1_2,
            "clique-minus-edge": self.clique_minus_edge,
            "clique-minus-edge-into-bg": self.clique_minus_edge_into_bg,
            "region-f-q-0-1": self.region_f_q_0_1,
            "region-f-q-1-2": self.region_f_q_1_2,
            "petersen-flow": self.petersen_flow,
            "vertical-boundary-thicken": self.vertical_boundary_thicken,
            "horizontal-boundary-stretch": self.horizontal_boundary_stretch,
            "be-boundary-stretch": self.be_boundary_stretch,
            "bf-boundary-thicken": self.bf_boundary_thicken,
            "e-segment-thicken": self.e_segment_thicken,
            "f-segment-stretch": self.f_segment_stretch,
        }

    @property
    def names(self) -> List[str]:
        return list(self._builders)

    def construct(self, p: PlanePoint, name: str) -> Built:
        """
        Run one named construction.

        Args:
            p: Starting point
            name: Construction identifier (see `names`) or one of its ALIASES

        Returns:
            List of (point, gadget) pairs, each point re-derived from its gadget
        """
        name = ALIASES.get(name, name)
        if name not in self._builders:
            raise ValueError(f"unknown construction {name!r}; expected one of {', '.join(self.names)}")
        _require(p.q != 0, "q != 0", p)
        _require(p.y != 1, "y != 1 (an edge of weight 0 implements nothing)", p)
        built = self._builders[name](p)
        logger.info(f"construct {name} at {p}: " + ", ".join(str(point) for point, _ in built))
        return built

    # helpers

    def _exponent(self, predicate: Callable[[int], bool], what: str, start: int = 1, step: int = 1) -> int:
        cap = self.config.gadget.exponent_cap
        k = start
        while k <= cap:
            if predicate(k):
                return k
            k += step
        raise GadgetError(f"no {what} up to the exponent cap {cap}")

    def _realize(self, expr: ShiftExpr, q: Fraction) -> Tuple[PlanePoint, Gadget]:
        weight = certify_expression(expr, q, edge_limit=self.config.gadget.certify_edge_limit)
        return PlanePoint.from_q_gamma(q, weight), expr_to_gadget(expr, self.config.gadget.gadget_edge_cap)

    def _composite(self, base, s: int, t: int, edge_expr: ShiftExpr, q: Fraction) -> Tuple[PlanePoint, Gadget]:
        """Every edge of base replaced by the gadget of edge_expr"""
        edge_weight = certify_expression(edge_expr, q, edge_limit=self.config.gadget.certify_edge_limit)
        weight = implemented_weight(Gadget.uniform(base, s, t, edge_weight), q).weight
        size = base.edge_count * leaf_count(edge_expr)
        if size > self.config.gadget.gadget_edge_cap:
            raise GadgetError(f"gadget would have {size} edges, above the cap")
        gadget = replace_every_edge(base, s, t, expr_to_gadget(edge_expr))
        if gadget.edge_count <= self.config.gadget.certify_edge_limit:
            certify_gadget(gadget, q, weight)
        return PlanePoint.from_q_gamma(q, weight), gadget

    # region B shifts

    def two_stretch_lift(self, p: PlanePoint) -> Built:
        _require(p.q > 0, "q > 0", p)
        _require(p.x < -1, "x < -1", p)
        leaf = Leaf(p.gamma)
        point, gadget = self._realize(Series(leaf, leaf), p.q)
        _ensure(point.y > 1, "y' > 1", p)
        return [(point, gadget)]

    def region_b_far(self, p: PlanePoint) -> Built:
        x, y, q = p.x, p.y, p.q
        _require(x < -1, "x < -1", p)
        _require(y < -1, "y < -1", p)
        leaf = Leaf(y - 1)
        j = self._exponent(lambda k: abs(x) ** k + 1 > q, "odd j with |x|^j + 1 > q", 1, 2)
        lifted = stretch_expr(leaf, j)
        y_lift = 1 - q / (abs(x) ** j + 1)
        k = self._exponent(lambda k: y_lift ** k * abs(y) < 1, "k with y'^k |y| < 1")
        first = self._realize(Parallel(leaf, thicken_expr(lifted, k)), q)
        _ensure(-1 < first[0].y < 0, "-1 < y1 < 0", p)
        return [first, self._realize(leaf, q)]

    def region_b_y_minus_one(self, p: PlanePoint) -> Built:
        x, q = p.x, p.q
        _require(x < -1, "x < -1", p)
        _require(p.y == -1, "y = -1", p)
        leaf = Leaf(p.gamma)
        j = self._exponent(lambda k: q < abs(x) ** k + 1, "odd j with q / (|x|^j + 1) < 1", 1, 2)
        first = self._realize(Parallel(stretch_expr(leaf, j), leaf), q)
        second = self._realize(Series(leaf, leaf), q)
        _ensure(-1 < first[0].y < 0, "-1 < y1 < 0", p)
        _ensure(second[0].y > 1, "y2 > 1", p)
        return [first, second]

    def region_b_y_between(self, p: PlanePoint) -> Built:
        _require(p.x < -1, "x < -1", p)
        _require(-1 < p.y < 0, "-1 < y < 0", p)
        leaf = Leaf(p.gamma)
        second = self._realize(Series(leaf, leaf), p.q)
        _ensure(second[0].y > 1, "y2 > 1", p)
        return [self._realize(leaf, p.q), second]

    def region_b_x_between(self, p: PlanePoint) -> Built:
        x, y, q = p.x, p.y, p.q
        _require(-1 <= x < 0, "-1 <= x < 0", p)
        _require(y < -1, "y < -1", p)
        leaf = Leaf(y - 1)
        thick = Parallel(leaf, leaf)
        x_thick = q / (y ** 2 - 1) + 1
        j = self._exponent(lambda k: abs(x) * x_thick ** k + 1 > q, "j with |x| xa^j + 1 > q")
        shifted = Series(leaf, stretch_expr(thick, j))
        y_shifted = 1 - q / (abs(x) * x_thick ** j + 1)
        k = self._exponent(lambda k: abs(y) * y_shifted ** k < 1, "k with |y| yb^k < 1")
        first = self._realize(Parallel(leaf, thicken_expr(shifted, k)), q)
        _ensure(-1 < first[0].y < 0, "-1 < y1 < 0", p)
        return [first, self._realize(leaf, q)]

    # inside the unit square

    def below_line_y(self, p: PlanePoint) -> Built:
        _require(p.x > -1, "x > -1", p)
        _require(p.y < -1 - 2 * p.x, "y < -1 - 2x", p)
        leaf = Leaf(p.gamma)
        stretched = Series(leaf, leaf)
        point, gadget = self._realize(Parallel(stretched, stretched), p.q)
        _ensure(point.y > 1, "y' > 1", p)
        return [(point, gadget)]

    def below_line_x(self, p: PlanePoint) -> Built:
        _require(p.q > 0, "q > 0", p)
        _require(p.y > -1, "y > -1", p)
        _require(p.x < -1 - 2 * p.y, "x < -1 - 2y", p)
        leaf = Leaf(p.gamma)
        thick = Parallel(leaf, leaf)
        point, gadget = self._realize(Series(thick, thick), p.q)
        _ensure(point.y > 1, "y' > 1", p)
        return [(point, gadget)]

    def diamond_escape(self, p: PlanePoint) -> Built:
        trace = diamond_iterate(p)
        point, gadget = self._realize(trace.expression, p.q)
        _ensure(point.y > 1 and point == trace.point, "y' > 1", p)
        return [(point, gadget)]

    def _lift_above_one(self, p: PlanePoint) -> ShiftExpr:
        if p.q > SHARP_THRESHOLD:
            return diamond_iterate(p).expression
        if p.y < -1 - 2 * p.x:
            leaf = Leaf(p.gamma)
            stretched = Series(leaf, leaf)
            return Parallel(stretched, stretched)
        # x < -1 - 2y cannot hold with y >= 0 inside the square
        raise HypothesisError(f"hypothesis violated at {p}: q > 32/27 or y < -1 - 2x")

    def unit_square_negative_y(self, p: PlanePoint) -> Built:
        x, y, q = p.x, p.y, p.q
        _require(max(abs(x), abs(y)) < 1, "max(|x|, |y|) < 1", p)
        _require(q > 1, "q > 1", p)
        _require(q > SHARP_THRESHOLD or y < -1 - 2 * x or x < -1 - 2 * y,
                 "q > 32/27 or y < -1 - 2x or x < -1 - 2y", p)
        leaf = Leaf(y - 1)
        if -1 < y < 0:
            return [self._realize(leaf, q)]
        if y == 0:
            built = self._realize(stretch_expr(leaf, 3), q)
            _ensure(-1 < built[0].y < 0, "-1 < y1 < 0", p)
            return [built]

        # 0 < y < 1, hence -1 < x < 0
        lifted = self._lift_above_one(p)
        lifted_point = PlanePoint.from_q_gamma(q, certify_expression(lifted, q))
        j = self._exponent(lambda k: x ** k < 1 - q / 4, "even j with x^j < 1 - q/4", 2, 2)
        target = (1 - q / 4) / x ** j
        tolerance = q / (8 * x ** j)
        found = approach_weight([lifted_point], target, tolerance, coordinate="x", base_exprs=[lifted])
        if not found.found:
            raise GadgetError(
                f"approach search found no x in [{format_rational(target - tolerance)}, "
                f"{format_rational(target)}] (closest {found.closest})")
        below = Series(found.expression, stretch_expr(leaf, j))
        y_below = certify_expression(below, q) + 1
        _ensure(y_below < -1, "intermediate y* < -1", p)
        steps = self._exponent(lambda k: abs(y_below) * y ** k < 1, "l with |y*| y^l < 1")
        built = self._realize(Parallel(below, thicken_expr(leaf, steps)), q)
        _ensure(-1 < built[0].y < 0, "-1 < y1 < 0", p)
        return [built]

    # regions C, D, E, F

    def even_stretch_cd(self, p: PlanePoint) -> Built:
        x, y, q = p.x, p.y, p.q
        _require((y > 1 and x < -1) or (x > 1 and y < -1), "(x < -1, y > 1) or (x > 1, y < -1)", p)
        j = self._exponent(lambda k: x ** k - 1 > abs(q), "even j with x^j - 1 > |q|", 2, 2)
        built = self._realize(stretch_expr(Leaf(p.gamma), j), q)
        _ensure(0 < built[0].y < 1, "0 < y1 < 1", p)
        return [built]

    def region_e_q_1_2(self, p: PlanePoint) -> Built:
        x, y, q = p.x, p.y, p.q
        _require(x < -1, "x < -1", p)
        _require(0 < y < 1, "0 < y < 1", p)
        _require(1 < q < 2, "1 < q < 2", p)
        leaf = Leaf(y - 1)
        j = self._exponent(lambda k: y ** k < 1 - q / 2, "j with y^j < 1 - q/2")
        thick = thicken_expr(leaf, j)
        x_thick = q / (y ** j - 1) + 1
        k = self._exponent(lambda k: x * x_thick ** k < 1 - q / 2, "odd k with x x'^k < 1 - q/2", 1, 2)
        built = self._realize(Series(leaf, stretch_expr(thick, k)), q)
        _ensure(-1 < built[0].y < 0, "-1 < y1 < 0", p)
        return [built]

    def clique_minus_edge(self, p: PlanePoint) -> Built:
        x, y, q = p.x, p.y, p.q
        _require(x < -1, "x < -1", p)
        _require(0 < y < 1, "0 < y < 1", p)
        _require(q > 2 and not is_integer(q), "non-integer q > 2", p)
        n = int(q) + 2
        graph, s, t = clique_minus_edge(n)
        leaf = Leaf(p.gamma)

        def below_minus_one(k: int) -> bool:
            try:
                return implemented_weight(gamma_n_gadget(n, q, y ** k), q).weight < -1
            except GadgetError:
                return False

        k = self._exponent(below_minus_one, "thickening with implemented y' < 0")
        built = self._composite(graph, s, t, thicken_expr(leaf, k), q)
        _ensure(built[0].y < 0, "y' < 0", p)
        return [built]

    def clique_minus_edge_into_bg(self, p: PlanePoint) -> Built:
        point, gadget = self.clique_minus_edge(p)[0]
        if classify(point).region in (Region.B, Region.G):
            return [(point, gadget)]
        _ensure(point.y <= -1, "y' <= -1 outside regions B and G", p)
        q = p.q
        j = self._exponent(lambda k: abs(point.y) * p.y ** k < 1, "j with |y'| y^j < 1")
        bundle = thicken_expr(Leaf(p.gamma), j)
        weight = certify_expression(Parallel(Leaf(point.gamma), bundle), q)
        combined = parallel_gadget(gadget, expr_to_gadget(bundle))
        if combined.edge_count <= self.config.gadget.certify_edge_limit:
            certify_gadget(combined, q, weight)
        result = PlanePoint.from_q_gamma(q, weight)
        _ensure(classify(result).region in (Region.B, Region.G), "point in region B or G", p)
        return [(result, combined)]

    def region_f_q_0_1(self, p: PlanePoint) -> Built:
        x, q = p.x, p.q
        _require(0 < x < 1, "0 < x < 1", p)
        _require(p.y < -1, "y < -1", p)
        _require(0 < q < 1, "0 < q < 1", p)
        j = self._exponent(lambda k: x ** k < 1 - q, "j with x^j < 1 - q")
        built = self._realize(stretch_expr(Leaf(p.gamma), j), q)
        _ensure(0 < built[0].y < 1, "0 < y1 < 1", p)
        return [built]

    def region_f_q_1_2(self, p: PlanePoint) -> Built:
        x, q = p.x, p.q
        _require(0 < x < 1, "0 < x < 1", p)
        _require(p.y < -1, "y < -1", p)
        _require(1 < q < 2, "1 < q < 2", p)
        j = self._exponent(lambda k: x ** k < 1 - q / 2, "j with x^j < 1 - q/2")
        built = self._realize(stretch_expr(Leaf(p.gamma), j), q)
        _ensure(-1 < built[0].y < 0, "-1 < y1 < 0", p)
        return [built]

    def petersen_flow(self, p: PlanePoint) -> Built:
        x, q = p.x, p.q
        _require(0 < x < 1, "0 < x < 1", p)
        _require(p.y < -1, "y < -1", p)
        _require(2 < q < 4 and not is_integer(q), "non-integer 2 < q < 4", p)
        graph, s, t = petersen_minus_edge()

        def inside(k: int) -> bool:
            delta = q * x ** k / (1 - x ** k)
            return -q < petersen_gadget(q, delta)[1] < 0

        k = self._exponent(inside, "stretch with implemented weight in (-q, 0)")
        built = self._composite(graph, s, t, stretch_expr(Leaf(p.gamma), k), q)
        _ensure(built[0].x < 0, "x' < 0", p)
        return [built]

    # boundaries and open segments

    def vertical_boundary_thicken(self, p: PlanePoint) -> Built:
        _require(p.x == -1, "x = -1", p)
        _require(-1 < p.y < 0, "-1 < y < 0", p)
        built = self._realize(thicken_expr(Leaf(p.gamma), 3), p.q)
        _ensure(built[0].x < -1 and -1 < built[0].y < 0, "x' < -1, -1 < y' < 0", p)
        return [built]

    def horizontal_boundary_stretch(self, p: PlanePoint) -> Built:
        _require(p.y == -1, "y = -1", p)
        _require(-1 < p.x < 0, "-1 < x < 0", p)
        built = self._realize(stretch_expr(Leaf(p.gamma), 3), p.q)
        _ensure(built[0].y < -1 and -1 < built[0].x < 0, "y' < -1, -1 < x' < 0", p)
        return [built]

    def be_boundary_stretch(self, p: PlanePoint) -> Built:
        _require(p.x < -1, "x < -1", p)
        _require(p.y == 0, "y = 0", p)
        _require(not is_integer(p.q), "non-integer q", p)
        built = self._realize(stretch_expr(Leaf(p.gamma), 3), p.q)
        _ensure(built[0].x < -1 and 0 < built[0].y < 1, "x' < -1, 0 < y' < 1", p)
        return [built]

    def bf_boundary_thicken(self, p: PlanePoint) -> Built:
        _require(p.x == 0, "x = 0", p)
        _require(p.y < -1, "y < -1", p)
        _require(not is_integer(p.q) and p.q < 4, "non-integer q < 4", p)
        built = self._realize(thicken_expr(Leaf(p.gamma), 3), p.q)
        _ensure(0 < built[0].x < 1 and built[0].y < -1, "0 < x' < 1, y' < -1", p)
        return [built]

    def e_segment_thicken(self, p: PlanePoint) -> Built:
        _require(p.x == -1, "x = -1", p)
        _require(0 < p.y < OPEN_SEGMENT_START, "0 < y < 11/27", p)
        built = self._realize(thicken_expr(Leaf(p.gamma), 2), p.q)
        _ensure(classify(built[0]).region == Region.G, "point in region G", p)
        return [built]

    def f_segment_stretch(self, p: PlanePoint) -> Built:
        _require(p.y == -1, "y = -1", p)
        _require(0 < p.x < OPEN_SEGMENT_START, "0 < x < 11/27", p)
        built = self._realize(stretch_expr(Leaf(p.gamma), 2), p.q)
        _ensure(classify(built[0]).region == Region.G, "point in region G", p)
        return [built]


def construct(p: PlanePoint, name: str, config=None) -> Built:
    """Run the named construction with the global (or given) configuration"""
    return ConstructionEngine(config).construct(p, name)


def construction_names() -> List[str]:
    return ConstructionEngine().names

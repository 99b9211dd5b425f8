"""
The diamond shift and its iteration out of the open unit square.

The diamond is two 2-stretches in parallel:

    (x, y) -> ((x + x^2 + x^3 + y) / (1 + 2x + y), (x + y)^2 / (1 + x)^2)

Iterating it from a point with max(|x|,|y|) < 1 and q > 32/27 drives y
upward until it exceeds 1. Two situations need a different composite: a
point on y = -1 - 2x, where the diamond weight would be 0, and a point with
x = -1, where the 2-stretch is singular.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from .gadget import Gadget, certify_expression, certify_gadget, expr_to_gadget
from .shifts import Leaf, Parallel, Series, ShiftExpr, leaf_count
from ..regions.classifier import SHARP_THRESHOLD
from ..regions.point import PlanePoint
from ..errors import GadgetError, HypothesisError
from config.settings import get_config

logger = logging.getLogger(__name__)


def _check_defined(p: PlanePoint) -> None:
    if p.x == -1:
        raise GadgetError(f"diamond undefined at {p}: x = -1")
    if p.y == -1 - 2 * p.x:
        raise GadgetError(f"diamond undefined at {p}: y = -1 - 2x")


def diamond_expr(expr: ShiftExpr) -> ShiftExpr:
    half = Series(expr, expr)
    return Parallel(half, half)


def diamond_gadget(weight) -> Gadget:
    """The literal 4-edge diamond with every edge of the given weight"""
    return expr_to_gadget(diamond_expr(Leaf(weight)))


def diamond(p: PlanePoint, certify: bool = True) -> PlanePoint:
    """
    Closed-form diamond image of p.

    Args:
        p: Point with x != -1 and y != -1 - 2x
        certify: Also check the literal 4-edge gadget

    Returns:
        Image point
    """
    _check_defined(p)
    x, y = p.x, p.y
    image = PlanePoint((x + x ** 2 + x ** 3 + y) / (1 + 2 * x + y), (x + y) ** 2 / (1 + x) ** 2)
    if certify:
        certify_gadget(diamond_gadget(p.gamma), p.q, image.gamma)
    return image


@dataclass
class DiamondTrace:
    """Final point, the composition tree that implements it, and every visited point"""
    point: PlanePoint
    expression: ShiftExpr
    points: List[PlanePoint] = field(default_factory=list)
    exceptional_line: int = 0  # steps taken from a point on y = -1 - 2x
    exceptional_vertical: int = 0  # steps taken from a point with x = -1

    @property
    def steps(self) -> int:
        return len(self.points) - 1


def _line_step(expr: ShiftExpr) -> ShiftExpr:
    # (x, -1-2x) -> S1 = (x^2, -1), S2 = S1 in series with itself, then S1 || S2
    first = Series(expr, expr)
    return Parallel(first, Series(first, first))


def _vertical_step(expr: ShiftExpr) -> ShiftExpr:
    # (-1, y) -> thicken to (-q/(4-q), .), stretch with the original, then thicken
    stretched = Series(expr, Parallel(expr, expr))
    return Parallel(stretched, stretched)


_STEP_BUILDERS = {"line": _line_step, "vertical": _vertical_step, "diamond": diamond_expr}


def diamond_iterate(p: PlanePoint, iteration_cap: Optional[int] = None,
                    certify_edge_limit: Optional[int] = None) -> DiamondTrace:
    """
    Iterate the diamond (with its two exceptional composites) until y > 1.

    Each step is certified on its local gadget; the accumulated gadget is
    certified too while it has at most certify_edge_limit edges.

    Args:
        p: Point with max(|x|, |y|) < 1 and q > 32/27
        iteration_cap: Maximum number of steps (defaults to the configured cap)
        certify_edge_limit: Largest accumulated gadget checked literally

    Returns:
        DiamondTrace ending at a point with y > 1
    """
    config = get_config().gadget
    cap = iteration_cap if iteration_cap is not None else config.diamond_iteration_cap
    limit = certify_edge_limit if certify_edge_limit is not None else config.certify_edge_limit
    if not max(abs(p.x), abs(p.y)) < 1:
        raise HypothesisError(f"max(|x|,|y|) < 1 required, got {p}")
    q = p.q
    if not q > SHARP_THRESHOLD:
        raise HypothesisError(f"q > 32/27 required, got q = {q}")

    expr: ShiftExpr = Leaf(p.gamma)
    point, weight = p, p.gamma
    trace = DiamondTrace(point, expr, [p])
    while point.y <= 1:
        if trace.steps >= cap:
            raise GadgetError(
                f"diamond iteration cap {cap} reached; trace: "
                + ", ".join(str(visited) for visited in trace.points[-5:]))
        if point.x == -1:
            kind = "vertical"
            trace.exceptional_vertical += 1
        elif point.y == -1 - 2 * point.x:
            kind = "line"
            trace.exceptional_line += 1
            if trace.exceptional_line > 2:
                raise GadgetError("the line y = -1 - 2x was met more than twice")
        else:
            kind = "diamond"

        local = _STEP_BUILDERS[kind](Leaf(weight))
        new_weight = certify_expression(local, q, edge_limit=limit)
        if kind == "diamond" and PlanePoint.from_q_gamma(q, new_weight) != diamond(point, certify=False):
            raise GadgetError(f"diamond closed form disagrees with its gadget at {point}")
        expr = _STEP_BUILDERS[kind](expr)
        if leaf_count(expr) <= limit:
            certify_gadget(expr_to_gadget(expr), q, new_weight)

        next_point = PlanePoint.from_q_gamma(q, new_weight)
        if not next_point.y > point.y:
            raise GadgetError(f"{kind} step did not increase y: {point} -> {next_point}")
        logger.debug(f"diamond step {trace.steps + 1} ({kind}): {point} -> {next_point}")
        point, weight = next_point, new_weight
        trace.points.append(point)

    trace.point, trace.expression = point, expr
    logger.info(f"diamond_iterate from {p}: y > 1 after {trace.steps} steps")
    return trace

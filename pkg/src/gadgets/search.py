"""
Bounded best-first search for a composition tree whose implemented point
lands in a target window [T - pi, T] on one coordinate.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .shifts import Leaf, Parallel, Series, ShiftExpr, parallel, series
from ..arith.rational import RationalLike, format_rational, to_rational
from ..regions.point import PlanePoint
from ..errors import SingularCompositionError
from config.settings import get_config

logger = logging.getLogger(__name__)

COORDINATES = ("x", "y")
PARTNER_POOL = 16


@dataclass
class ApproachResult:
    """Outcome of approach_weight; failure is a value, not an exception"""
    found: bool
    expression: Optional[ShiftExpr]
    point: Optional[PlanePoint]
    closest: Optional[PlanePoint]
    explored: int
    leaves: int = 0


@dataclass
class _Candidate:
    expr: ShiftExpr
    weight: Fraction
    leaves: int
    distance: Fraction

    @property
    def key(self) -> Tuple[Fraction, int]:
        return self.distance, self.leaves


def _coordinate(weight: Fraction, q: Fraction, coordinate: str) -> Optional[Fraction]:
    if coordinate == "y":
        return 1 + weight
    if weight == 0:
        return None
    return q / weight + 1


def _distance(value: Fraction, low: Fraction, high: Fraction) -> Fraction:
    if value < low:
        return low - value
    if value > high:
        return value - high
    return Fraction(0)


def approach_weight(base: Sequence[PlanePoint], target: RationalLike, tolerance: RationalLike,
                    coordinate: str = "y", base_exprs: Optional[Sequence[ShiftExpr]] = None,
                    depth: Optional[int] = None, width: Optional[int] = None) -> ApproachResult:
    """
    Search series/parallel compositions of the base points for a point whose
    chosen coordinate lies in [target - tolerance, target].

    Args:
        base: Points sharing one q
        target: Upper end T of the window
        tolerance: Window width pi > 0
        coordinate: "y" (default) or "x"
        base_exprs: Expressions implementing the base points, used as leaves
        depth: Maximum leaves per expression (defaults to the configured depth)
        width: Frontier size kept per round (defaults to the configured width)

    Returns:
        ApproachResult
    """
    config = get_config().gadget
    depth = depth if depth is not None else config.search_depth
    width = width if width is not None else config.search_width
    target, tolerance = to_rational(target), to_rational(tolerance)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if coordinate not in COORDINATES:
        raise ValueError(f"coordinate must be 'x' or 'y', got {coordinate!r}")
    if not base:
        raise ValueError("approach_weight needs at least one base point")
    q = base[0].q
    if any(point.q != q for point in base):
        raise ValueError("base points must share one q")
    if base_exprs is not None and len(base_exprs) != len(base):
        raise ValueError("base_exprs must match base one to one")
    low, high = target - tolerance, target

    seen: Dict[Fraction, _Candidate] = {}

    def admit(expr: ShiftExpr, weight: Fraction, leaves: int) -> Optional[_Candidate]:
        if weight in seen:
            return None
        value = _coordinate(weight, q, coordinate)
        if value is None:
            return None
        candidate = _Candidate(expr, weight, leaves, _distance(value, low, high))
        seen[weight] = candidate
        return candidate

    leaves: List[_Candidate] = []
    for index, point in enumerate(base):
        expr = base_exprs[index] if base_exprs is not None else Leaf(point.gamma)
        candidate = admit(expr, point.gamma, 1)
        if candidate is not None:
            leaves.append(candidate)

    frontier = sorted(leaves, key=lambda c: c.key)[:width]
    best = min(seen.values(), key=lambda c: c.key)
    rounds = 0
    while best.distance > 0 and frontier and rounds < depth:
        rounds += 1
        partners = leaves + sorted(frontier, key=lambda c: c.key)[:PARTNER_POOL]
        fresh: List[_Candidate] = []
        for a in frontier:
            for b in partners:
                size = a.leaves + b.leaves
                if size > depth:
                    continue
                try:
                    series_weight = series(a.weight, b.weight, q)
                except SingularCompositionError:
                    series_weight = None
                options = [(Parallel(a.expr, b.expr), parallel(a.weight, b.weight))]
                if series_weight is not None:
                    options.append((Series(a.expr, b.expr), series_weight))
                for expr, weight in options:
                    candidate = admit(expr, weight, size)
                    if candidate is not None:
                        fresh.append(candidate)
        frontier = sorted(fresh, key=lambda c: c.key)[:width]
        if frontier and frontier[0].key < best.key:
            best = frontier[0]
        logger.debug(f"approach round {rounds}: {len(fresh)} new, best distance "
                     f"{float(best.distance):.3g}")

    closest = PlanePoint.from_q_gamma(q, best.weight) if best.weight != 0 else None
    if best.distance == 0:
        logger.info(f"approach_weight: {coordinate} in [{format_rational(low)}, "
                    f"{format_rational(high)}] with {best.leaves} leaves")
        return ApproachResult(True, best.expr, closest, closest, len(seen), best.leaves)
    logger.info(f"approach_weight: no expression within {depth} leaves reached the window")
    return ApproachResult(False, None, None, closest, len(seen), best.leaves)

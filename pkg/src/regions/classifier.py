"""
Complexity status of every rational point of the (x, y) plane.

The rule list is ordered; the first rule whose predicate holds decides the
region and status. All comparisons are exact.
"""
import csv
import io
import json
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from .point import PlanePoint
from ..arith.rational import RationalLike, format_rational, is_integer, to_rational
from config.settings import get_config

logger = logging.getLogger(__name__)

SHARP_THRESHOLD = Fraction(32, 27)
OPEN_SEGMENT_START = Fraction(11, 27)


class Region(str, Enum):
    A = "A"
    B = "B"
    B_SPECIAL = "B-special"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    BE_BOUNDARY = "BE-boundary"
    BF_BOUNDARY = "BF-boundary"
    G = "G"
    H = "H"
    I = "I"
    J = "J"
    K = "K"
    L = "L"
    M = "M"
    Q1_HYPERBOLA = "Q1-hyperbola"
    OPEN = "Open"


class Status(str, Enum):
    FP = "FP"
    NP_COMPLETE = "NP-complete"
    SHARP_P_HARD = "SharpP-hard"
    OPEN = "Open"


@dataclass(frozen=True)
class PointClass:
    """Region label, status, the rule number that fired and a one-line reason"""
    region: Region
    status: Status
    rule: int
    evidence: str


MIRROR = {
    Region.A: Region.A,
    Region.G: Region.G,
    Region.H: Region.I,
    Region.I: Region.H,
    Region.L: Region.M,
    Region.M: Region.L,
    Region.Q1_HYPERBOLA: Region.Q1_HYPERBOLA,
    Region.OPEN: Region.OPEN,
}


def classify(p: PlanePoint) -> PointClass:
    x, y, q = p.x, p.y, p.q

    if x >= 0 and y >= 0:
        return PointClass(Region.A, Status.FP, 1, "x >= 0 and y >= 0: Z has a sign-determined closed form")
    if x == -1 and y == -1:
        return PointClass(Region.B_SPECIAL, Status.FP, 2, "(-1,-1): bicycle-space dimension")
    if min(x, y) <= -1 and max(x, y) < 0:
        return PointClass(Region.B, Status.SHARP_P_HARD, 3, "min(x,y) <= -1 < max(x,y) < 0")
    if x < -1 and y > 1:
        return PointClass(Region.C, Status.SHARP_P_HARD, 4, "x < -1, y > 1")
    if x > 1 and y < -1:
        return PointClass(Region.D, Status.SHARP_P_HARD, 5, "x > 1, y < -1")

    if x <= -1 and y == 0:
        if x == -1:
            return PointClass(Region.BE_BOUNDARY, Status.FP, 6, "(-1,0): counts 2-colourings")
        if is_integer(x):
            return PointClass(Region.BE_BOUNDARY, Status.NP_COMPLETE, 6,
                              f"(x,0) with integer x: {1 - x}-colourability")
        return PointClass(Region.BE_BOUNDARY, Status.SHARP_P_HARD, 6, "(x,0) with non-integer x < -1")

    if x == 0 and y <= -1:
        if y == -1:
            return PointClass(Region.BF_BOUNDARY, Status.FP, 7, "(0,-1): Eulerian test")
        if y == -2:
            return PointClass(Region.BF_BOUNDARY, Status.NP_COMPLETE, 7, "(0,-2): nowhere-zero 3-flow")
        if y in (-3, -4):
            return PointClass(Region.BF_BOUNDARY, Status.OPEN, 7, "(0,-3), (0,-4): 4- and 5-flows")
        if is_integer(y):
            return PointClass(Region.BF_BOUNDARY, Status.FP, 7, "(0,y), integer y <= -5: bridgeless test")
        if q < 4:
            return PointClass(Region.BF_BOUNDARY, Status.SHARP_P_HARD, 7, "(0,y), non-integer q < 4")
        return PointClass(Region.BF_BOUNDARY, Status.OPEN, 7, "(0,y), non-integer q > 4")

    if x <= -1 and 0 < y <= 1:
        if is_integer(q):
            return PointClass(Region.E, Status.FP, 8, f"integer q = {format_rational(q)}: Potts form")
        if x == -1 and OPEN_SEGMENT_START <= y < 1:
            return PointClass(Region.E, Status.OPEN, 8, "x = -1, 11/27 <= y < 1")
        return PointClass(Region.E, Status.SHARP_P_HARD, 8, "non-integer q")

    if 0 < x <= 1 and y <= -1:
        if is_integer(q):
            return PointClass(Region.F, Status.FP, 9, f"integer q = {format_rational(q)}: flow count")
        if y == -1 and OPEN_SEGMENT_START <= x < 1:
            return PointClass(Region.F, Status.OPEN, 9, "y = -1, 11/27 <= x < 1")
        if q < 4:
            return PointClass(Region.F, Status.SHARP_P_HARD, 9, "non-integer q < 4")
        return PointClass(Region.F, Status.OPEN, 9, "non-integer q > 4")

    if q == 1:
        return PointClass(Region.Q1_HYPERBOLA, Status.FP, 10, "q = 1: Z = prod(1 + gamma_e)")

    inside_square = max(abs(x), abs(y)) < 1
    if inside_square and q > SHARP_THRESHOLD:
        return PointClass(Region.G, Status.SHARP_P_HARD, 11, "inside the unit square, q > 32/27")
    if inside_square and y < -2 * x - 1:
        return PointClass(Region.H, Status.SHARP_P_HARD, 12, "inside the unit square, y < -1-2x")
    if inside_square and x < -2 * y - 1:
        return PointClass(Region.I, Status.SHARP_P_HARD, 13, "inside the unit square, x < -1-2y")

    if -1 <= x < 0 and y >= 1:
        return PointClass(Region.J, Status.FP, 14, "-1 <= x < 0, y >= 1: dual of region K")
    if x >= 1 and -1 <= y < 0:
        return PointClass(Region.K, Status.FP, 15, "x >= 1, -1 <= y < 0: q <= 0, weights in [-2,0)")
    if 0 < x < 1 and -x < y < 0:
        return PointClass(Region.L, Status.FP, 16, "0 < x < 1, -x < y < 0: alternating sign")
    if 0 < y < 1 and -y < x < 0:
        return PointClass(Region.M, Status.FP, 17, "0 < y < 1, -y < x < 0: dual of region L")
    return PointClass(Region.OPEN, Status.OPEN, 18, "no rule applies")


def _lattice(lo: Fraction, hi: Fraction, step: Fraction) -> List[Fraction]:
    values = []
    value = lo
    while value <= hi:
        values.append(value)
        value += step
    return values


def scan_grid(x_range: Tuple[RationalLike, RationalLike],
              y_range: Tuple[RationalLike, RationalLike],
              step: RationalLike,
              max_workers: Optional[int] = None) -> List[Tuple[PlanePoint, PointClass]]:
    """
    Classify every lattice point lo, lo+step, ... <= hi in both coordinates.

    Rows come back with x varying slowest, independent of worker scheduling.

    Args:
        x_range: (xmin, xmax)
        y_range: (ymin, ymax)
        step: Positive lattice spacing
        max_workers: Thread pool size (defaults to the configured value)

    Returns:
        List of (point, classification) pairs
    """
    step = to_rational(step)
    if step <= 0:
        raise ValueError("step must be positive")
    xs = _lattice(to_rational(x_range[0]), to_rational(x_range[1]), step)
    ys = _lattice(to_rational(y_range[0]), to_rational(y_range[1]), step)
    points = [PlanePoint(x, y) for x in xs for y in ys]
    if not points:
        return []

    workers = max_workers or get_config().map.workers
    classes: List[Optional[PointClass]] = [None] * len(points)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        future_to_index = {executor.submit(classify, point): i for i, point in enumerate(points)}
        for future in as_completed(future_to_index):
            classes[future_to_index[future]] = future.result()
    logger.info(f"Classified {len(points)} grid points ({len(xs)} x {len(ys)})")
    return list(zip(points, classes))


GRID_COLUMNS = ["x", "y", "q", "region", "status"]


def _row(point: PlanePoint, point_class: PointClass) -> dict:
    return {
        "x": format_rational(point.x),
        "y": format_rational(point.y),
        "q": format_rational(point.q),
        "region": point_class.region.value,
        "status": point_class.status.value,
    }


def grid_to_csv(rows: List[Tuple[PlanePoint, PointClass]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=GRID_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for point, point_class in rows:
        writer.writerow(_row(point, point_class))
    return buffer.getvalue()


def grid_to_json(rows: List[Tuple[PlanePoint, PointClass]]) -> str:
    return json.dumps([_row(point, point_class) for point, point_class in rows], indent=2)

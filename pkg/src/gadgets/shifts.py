"""
Shift algebra: series and parallel composition of edge weights, k-stretches,
k-thickenings, and composition trees (ShiftExpr) over a fixed q.

In (x, y) coordinates a series composition multiplies x and a parallel
composition multiplies y.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Union

from ..arith.rational import RationalLike, format_rational, to_rational
from ..regions.point import PlanePoint
from ..errors import SingularCompositionError


def series(w1: Fraction, w2: Fraction, q: Fraction) -> Fraction:
    denominator = q + w1 + w2
    if denominator == 0:
        raise SingularCompositionError(
            f"singular series composition: q + w1 + w2 = 0 "
            f"(q={format_rational(q)}, w1={format_rational(w1)}, w2={format_rational(w2)})")
    return w1 * w2 / denominator


def parallel(w1: Fraction, w2: Fraction) -> Fraction:
    return (1 + w1) * (1 + w2) - 1


def stretch(w: RationalLike, q: RationalLike, k: int) -> Fraction:
    """k edges of weight w in series, composed one edge at a time"""
    if k < 1:
        raise ValueError("k must be at least 1")
    w, q = to_rational(w), to_rational(q)
    result = w
    for _ in range(k - 1):
        result = series(result, w, q)
    return result


def thicken(w: RationalLike, k: int) -> Fraction:
    """k edges of weight w in parallel: (1 + w)^k - 1"""
    if k < 1:
        raise ValueError("k must be at least 1")
    return (1 + to_rational(w)) ** k - 1


def _same_q(p1: PlanePoint, p2: PlanePoint) -> Fraction:
    if p1.q != p2.q:
        raise ValueError(f"points {p1} and {p2} lie on different q-curves")
    return p1.q


def series_point(p1: PlanePoint, p2: PlanePoint) -> PlanePoint:
    q = _same_q(p1, p2)
    return PlanePoint.from_q_gamma(q, series(p1.gamma, p2.gamma, q))


def parallel_point(p1: PlanePoint, p2: PlanePoint) -> PlanePoint:
    q = _same_q(p1, p2)
    return PlanePoint.from_q_gamma(q, parallel(p1.gamma, p2.gamma))


@dataclass(frozen=True, eq=False)
class Leaf:
    weight: Fraction

    def __post_init__(self):
        object.__setattr__(self, "weight", to_rational(self.weight))


@dataclass(frozen=True, eq=False)
class Series:
    left: "ShiftExpr"
    right: "ShiftExpr"


@dataclass(frozen=True, eq=False)
class Parallel:
    left: "ShiftExpr"
    right: "ShiftExpr"


ShiftExpr = Union[Leaf, Series, Parallel]


def postorder(expr: ShiftExpr) -> Iterator[ShiftExpr]:
    """Each distinct node once, children before parents (shared subtrees visited once)"""
    done = set()
    stack: List[ShiftExpr] = [expr]
    while stack:
        node = stack[-1]
        if id(node) in done:
            stack.pop()
            continue
        if not isinstance(node, Leaf):
            pending = [c for c in (node.left, node.right) if id(c) not in done]
            if pending:
                stack.extend(pending)
                continue
        done.add(id(node))
        stack.pop()
        yield node


def node_weights(expr: ShiftExpr, q: RationalLike) -> Dict[int, Fraction]:
    """Bottom-up weights of every node, keyed by id(node)"""
    q = to_rational(q)
    weights: Dict[int, Fraction] = {}
    for node in postorder(expr):
        if isinstance(node, Leaf):
            weights[id(node)] = node.weight
        elif isinstance(node, Series):
            weights[id(node)] = series(weights[id(node.left)], weights[id(node.right)], q)
        else:
            weights[id(node)] = parallel(weights[id(node.left)], weights[id(node.right)])
    return weights


def expr_weight(expr: ShiftExpr, q: RationalLike) -> Fraction:
    return node_weights(expr, q)[id(expr)]


def expr_point(expr: ShiftExpr, q: RationalLike) -> PlanePoint:
    return PlanePoint.from_q_gamma(q, expr_weight(expr, q))


def leaf_count(expr: ShiftExpr) -> int:
    """Edges of the expanded gadget (shared subtrees counted with multiplicity)"""
    counts: Dict[int, int] = {}
    for node in postorder(expr):
        if isinstance(node, Leaf):
            counts[id(node)] = 1
        else:
            counts[id(node)] = counts[id(node.left)] + counts[id(node.right)]
    return counts[id(expr)]


def stretch_expr(expr: ShiftExpr, k: int) -> ShiftExpr:
    """k copies in series, as a balanced tree"""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return expr
    half = stretch_expr(expr, k // 2)
    doubled = Series(half, half)
    return Series(doubled, expr) if k % 2 else doubled


def thicken_expr(expr: ShiftExpr, k: int) -> ShiftExpr:
    """k copies in parallel, as a balanced tree"""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return expr
    half = thicken_expr(expr, k // 2)
    doubled = Parallel(half, half)
    return Parallel(doubled, expr) if k % 2 else doubled


def describe(expr: ShiftExpr) -> str:
    """Compact text form; shared subtrees are printed in full"""
    parts: Dict[int, str] = {}
    for node in postorder(expr):
        if isinstance(node, Leaf):
            parts[id(node)] = format_rational(node.weight)
        else:
            op = "S" if isinstance(node, Series) else "P"
            parts[id(node)] = f"{op}({parts[id(node.left)]}, {parts[id(node.right)]})"
    return parts[id(expr)]

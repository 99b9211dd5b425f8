"""
Minimum-cardinality (s,t)-cuts by exhaustive enumeration.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from ..graphs.multigraph import Multigraph, UnionFind
from ..errors import CapExceededError, ReductionError
from config.settings import get_config

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CutCount:
    """k is the minimum cut size and C the number of (s,t)-cuts of that size"""
    k: int
    C: int


def check_instance(g: Multigraph, s: int, t: int) -> None:
    """s and t distinct, connected, and not joined by an edge"""
    if s == t:
        raise ReductionError("terminals must be distinct")
    for vertex in (s, t):
        if not 0 <= vertex < g.vertex_count:
            raise ReductionError(f"terminal {vertex} is not a vertex")
    if any({u, v} == {s, t} for u, v in g.edges):
        raise ReductionError("the graph must not contain an (s,t) edge")
    forest = UnionFind(g.vertex_count)
    for u, v in g.edges:
        forest.union(u, v)
    if forest.find(s) != forest.find(t):
        raise ReductionError("s and t are disconnected")


def _separates(g: Multigraph, removed: set, s: int, t: int) -> bool:
    forest = UnionFind(g.vertex_count)
    for index, (u, v) in enumerate(g.edges):
        if index not in removed:
            forest.union(u, v)
    return forest.find(s) != forest.find(t)


def count_min_cuts_brute(g: Multigraph, s: int, t: int, cap: Optional[int] = None) -> CutCount:
    """
    Enumerate edge subsets by increasing size until some of them separate s from t.

    Args:
        g: Graph with s, t connected and no (s,t) edge
        s: Source terminal
        t: Sink terminal
        cap: Maximum |E| (defaults to the configured brute-force cap)

    Returns:
        CutCount
    """
    check_instance(g, s, t)
    cap = cap if cap is not None else get_config().evaluation.brute_force_cap
    if g.edge_count > cap:
        raise CapExceededError(f"|E| = {g.edge_count} exceeds the enumeration cap {cap}")
    for k in range(1, g.edge_count + 1):
        count = sum(1 for subset in combinations(range(g.edge_count), k)
                    if _separates(g, set(subset), s, t))
        if count:
            logger.debug(f"count_min_cuts_brute: k={k}, C={count}")
            return CutCount(k, count)
    raise ReductionError("s and t are disconnected")

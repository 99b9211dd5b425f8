"""
Backtracking deciders for the NP points: q-colourability and nowhere-zero q-flows.
"""
import logging
from typing import List, Optional

from ..graphs.multigraph import Multigraph, UnionFind
from ..errors import InstanceTooLargeError
from config.settings import get_config

logger = logging.getLogger(__name__)


class _NodeBudget:
    def __init__(self, cap: int):
        self.cap = cap
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.cap:
            raise InstanceTooLargeError(f"NP point, instance too large (node cap {self.cap})")


def _node_cap(cap: Optional[int]) -> int:
    return cap if cap is not None else get_config().sign.decider_node_cap


def decide_colourable(g: Multigraph, q: int, node_cap: Optional[int] = None) -> bool:
    """
    Exact q-colourability by backtracking, most-constrained vertex first.

    Args:
        g: Graph (loops make it uncolourable)
        q: Number of colours
        node_cap: Search node budget (defaults to the configured cap)
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    if g.loops():
        return False
    neighbours: List[set] = [set() for _ in range(g.vertex_count)]
    for u, v in g.edges:
        neighbours[u].add(v)
        neighbours[v].add(u)
    if q == 1:
        return g.edge_count == 0
    if q == 2:
        return g.is_bipartite()

    budget = _NodeBudget(_node_cap(node_cap))
    colour = [-1] * g.vertex_count

    def pick() -> int:
        best, best_key = -1, None
        for vertex in range(g.vertex_count):
            if colour[vertex] != -1:
                continue
            used = {colour[n] for n in neighbours[vertex] if colour[n] != -1}
            key = (len(used), len(neighbours[vertex]))
            if best_key is None or key > best_key:
                best, best_key = vertex, key
        return best

    def search(coloured: int, colours_open: int) -> bool:
        if coloured == g.vertex_count:
            return True
        budget.spend()
        vertex = pick()
        forbidden = {colour[n] for n in neighbours[vertex]}
        # A fresh colour is interchangeable with any other unused one
        for c in range(min(q, colours_open + 1)):
            if c in forbidden:
                continue
            colour[vertex] = c
            if search(coloured + 1, max(colours_open, c + 1)):
                return True
            colour[vertex] = -1
        return False

    found = search(0, 0)
    logger.debug(f"decide_colourable(q={q}): {found} after {budget.used} nodes")
    return found


def decide_nz_flow(g: Multigraph, q: int, node_cap: Optional[int] = None) -> bool:
    """
    Existence of a nowhere-zero Z_q flow.

    q=2 is the Eulerian test and q>=6 the bridgeless test. For q in {3,4,5}
    the search assigns values to the non-tree edges of a spanning forest; the
    tree edges are then forced by conservation and must be nonzero.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    if q == 1:
        return g.edge_count == 0
    if q == 2:
        return g.is_eulerian()
    if not g.is_bridgeless():
        return False
    if q >= 6:
        return True

    budget = _NodeBudget(_node_cap(node_cap))
    n = g.vertex_count
    forest = UnionFind(n)
    tree_edges, cotree_edges = [], []
    for index, (u, v) in enumerate(g.edges):
        if u != v and forest.union(u, v):
            tree_edges.append(index)
        elif u != v:
            cotree_edges.append(index)
        # loops carry any nonzero value and never affect conservation

    # Root each tree; process vertices leaves-first
    adjacency: List[List[int]] = [[] for _ in range(n)]
    for index in tree_edges:
        u, v = g.edges[index]
        adjacency[u].append(index)
        adjacency[v].append(index)
    parent_edge = [-1] * n
    order: List[int] = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            vertex = stack.pop()
            order.append(vertex)
            for index in adjacency[vertex]:
                u, v = g.edges[index]
                other = v if u == vertex else u
                if not seen[other]:
                    seen[other] = True
                    parent_edge[other] = index
                    stack.append(other)

    values = [0] * len(cotree_edges)

    def tree_edges_nonzero() -> bool:
        excess = [0] * n  # outflow minus inflow
        for (u, v), value in zip((g.edges[i] for i in cotree_edges), values):
            excess[u] += value
            excess[v] -= value
        for vertex in reversed(order):
            index = parent_edge[vertex]
            if index == -1:
                continue
            u, v = g.edges[index]
            if v == vertex:
                flow = excess[vertex] % q  # u -> vertex brings inflow
                excess[u] += flow
            else:
                flow = (-excess[vertex]) % q  # vertex -> v adds outflow
                excess[v] -= flow
            if flow == 0:
                return False
        return True

    def search(position: int) -> bool:
        budget.spend()
        if position == len(values):
            return tree_edges_nonzero()
        for value in range(1, q):
            values[position] = value
            if search(position + 1):
                return True
        return False

    found = search(0)
    logger.debug(f"decide_nz_flow(q={q}): {found} after {budget.used} nodes")
    return found

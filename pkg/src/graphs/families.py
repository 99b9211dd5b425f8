"""
Named graph families used by the gadgets, tests and demos.
"""
from typing import Tuple

import networkx as nx

from .multigraph import Multigraph


def complete_graph(n: int) -> Multigraph:
    return Multigraph.from_networkx(nx.complete_graph(n))


def cycle_graph(n: int) -> Multigraph:
    """C_n; n=1 is a loop and n=2 a double edge"""
    if n == 1:
        return Multigraph(1, ((0, 0),))
    if n == 2:
        return Multigraph(2, ((0, 1), (0, 1)))
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(edge_count: int) -> Multigraph:
    return Multigraph(edge_count + 1, tuple((i, i + 1) for i in range(edge_count)))


def petersen_graph() -> Multigraph:
    return Multigraph.from_networkx(nx.petersen_graph())


def clique_minus_edge(n: int) -> Tuple[Multigraph, int, int]:
    """K_n with the edge (0, 1) removed; terminals s=0, t=1"""
    if n < 2:
        raise ValueError("clique_minus_edge needs n >= 2")
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n) if (u, v) != (0, 1))
    return Multigraph(n, edges), 0, 1


def petersen_minus_edge() -> Tuple[Multigraph, int, int]:
    """Petersen graph minus its first edge; terminals are that edge's endpoints"""
    petersen = petersen_graph()
    s, t = petersen.edges[0]
    return petersen.delete(petersen.labels[0]).relabeled(), s, t


def diamond_graph() -> Tuple[Multigraph, int, int]:
    """Two parallel two-edge paths between s=0 and t=1"""
    return Multigraph(4, ((0, 2), (2, 1), (0, 3), (3, 1))), 0, 1

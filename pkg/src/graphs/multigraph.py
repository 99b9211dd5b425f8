"""
Multigraph data model.

Vertices are dense integers 0..vertex_count-1. Edges keep a stable integer
label through deletion and contraction, so weight functions (dicts keyed by
label) follow their edges across minors.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx

from ..arith.rational import RationalLike, to_rational

Edge = Tuple[int, int]
WeightFunction = Dict[int, Fraction]


class UnionFind:
    """Disjoint sets over 0..n-1 with path halving"""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.components = size

    def find(self, item: int) -> int:
        parent = self.parent
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    def union(self, a: int, b: int) -> bool:
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return False
        self.parent[root_b] = root_a
        self.components -= 1
        return True


def count_components(vertex_count: int, edges: Iterable[Edge]) -> int:
    forest = UnionFind(vertex_count)
    for u, v in edges:
        forest.union(u, v)
    return forest.components


def find_bridges(vertex_count: int, edges: Sequence[Edge]) -> Set[int]:
    """
    Indices of bridge edges, by lowpoint DFS.

    Works on multigraphs: the DFS skips only the edge it arrived by, so a
    parallel copy counts as a back edge. Loops are never bridges.
    """
    adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(vertex_count)]
    for index, (u, v) in enumerate(edges):
        if u != v:
            adjacency[u].append((v, index))
            adjacency[v].append((u, index))

    preorder = [-1] * vertex_count
    low = [0] * vertex_count
    bridges: Set[int] = set()
    counter = 0
    for root in range(vertex_count):
        if preorder[root] != -1:
            continue
        preorder[root] = low[root] = counter
        counter += 1
        # Frames: (vertex, edge used to reach it, neighbour iterator)
        stack = [(root, -1, iter(adjacency[root]))]
        while stack:
            vertex, via, neighbours = stack[-1]
            advanced = False
            for neighbour, index in neighbours:
                if index == via:
                    continue
                if preorder[neighbour] == -1:
                    preorder[neighbour] = low[neighbour] = counter
                    counter += 1
                    stack.append((neighbour, index, iter(adjacency[neighbour])))
                    advanced = True
                    break
                low[vertex] = min(low[vertex], preorder[neighbour])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[vertex])
                if low[vertex] > preorder[parent]:
                    bridges.add(via)
    return bridges


@dataclass(frozen=True)
class Multigraph:
    """Loops and parallel edges allowed; immutable, minors are new values."""
    vertex_count: int
    edges: Tuple[Edge, ...] = ()
    labels: Tuple[int, ...] = field(default=None)

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {self.vertex_count})")
        labels = tuple(range(len(edges))) if self.labels is None else tuple(self.labels)
        if len(labels) != len(edges) or len(set(labels)) != len(labels):
            raise ValueError("edge labels must be distinct and one per edge")
        object.__setattr__(self, "labels", labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def index_of(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown edge identity: {label}") from None

    def endpoints(self, label: int) -> Edge:
        return self.edges[self.index_of(label)]

    def weights_in_order(self, weights: Mapping[int, Fraction]) -> List[Fraction]:
        """Weights aligned with self.edges; the function must be total"""
        try:
            return [weights[label] for label in self.labels]
        except KeyError as e:
            raise ValueError(f"weight function is missing edge {e.args[0]}") from None

    def kappa(self, subset: Optional[Iterable[int]] = None) -> int:
        """Connected components of (V, subset), isolated vertices included"""
        if subset is None:
            return count_components(self.vertex_count, self.edges)
        return count_components(self.vertex_count, (self.endpoints(label) for label in subset))

    def delete(self, label: int) -> "Multigraph":
        index = self.index_of(label)
        return Multigraph(
            self.vertex_count,
            self.edges[:index] + self.edges[index + 1:],
            self.labels[:index] + self.labels[index + 1:],
        )

    def contract(self, label: int) -> "Multigraph":
        """Merge the endpoints of an edge; contracting a loop deletes it"""
        index = self.index_of(label)
        u, v = self.edges[index]
        if u == v:
            return self.delete(label)
        keep, gone = min(u, v), max(u, v)

        def relabel(w: int) -> int:
            if w == gone:
                return keep
            return w - 1 if w > gone else w

        edges = tuple(
            (relabel(a), relabel(b))
            for i, (a, b) in enumerate(self.edges) if i != index
        )
        return Multigraph(self.vertex_count - 1, edges, self.labels[:index] + self.labels[index + 1:])

    def add_edge(self, u: int, v: int) -> Tuple["Multigraph", int]:
        """Append an edge with a fresh label; returns the new graph and that label"""
        label = max(self.labels, default=-1) + 1
        return Multigraph(self.vertex_count, self.edges + ((u, v),), self.labels + (label,)), label

    def relabeled(self) -> "Multigraph":
        """Same graph with edge labels 0..m-1 in list order"""
        return Multigraph(self.vertex_count, self.edges)

    def disjoint_union(self, other: "Multigraph") -> "Multigraph":
        shift = self.vertex_count
        edges = self.edges + tuple((u + shift, v + shift) for u, v in other.edges)
        return Multigraph(self.vertex_count + other.vertex_count, edges)

    def degrees(self) -> List[int]:
        degree = [0] * self.vertex_count
        for u, v in self.edges:
            degree[u] += 1
            degree[v] += 1
        return degree

    def loops(self) -> FrozenSet[int]:
        return frozenset(label for label, (u, v) in zip(self.labels, self.edges) if u == v)

    def bridges(self) -> FrozenSet[int]:
        return frozenset(self.labels[i] for i in find_bridges(self.vertex_count, self.edges))

    def is_connected(self) -> bool:
        return self.kappa() <= 1

    def is_eulerian(self) -> bool:
        """All degrees even (connectivity not required)"""
        return all(d % 2 == 0 for d in self.degrees())

    def is_bipartite(self) -> bool:
        if self.loops():
            return False
        return nx.is_bipartite(self.to_networkx(simple=True))

    def is_bridgeless(self) -> bool:
        return not find_bridges(self.vertex_count, self.edges)

    def to_networkx(self, simple: bool = False) -> nx.Graph:
        graph = nx.Graph() if simple else nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for label, (u, v) in zip(self.labels, self.edges):
            if simple:
                graph.add_edge(u, v)
            else:
                graph.add_edge(u, v, key=label)
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Multigraph":
        """Nodes are relabelled to 0..n-1 in sorted order"""
        order = {node: i for i, node in enumerate(sorted(graph.nodes()))}
        return cls(len(order), tuple((order[u], order[v]) for u, v in graph.edges()))


def uniform_weights(g: Multigraph, gamma: RationalLike) -> WeightFunction:
    value = to_rational(gamma)
    return {label: value for label in g.labels}


def complete_weights(g: Multigraph, partial: Mapping[int, Optional[Fraction]],
                     gamma: Optional[RationalLike]) -> WeightFunction:
    """Fill missing per-edge weights with the uniform gamma"""
    weights: WeightFunction = {}
    for label in g.labels:
        value = partial.get(label)
        if value is None:
            if gamma is None:
                raise ValueError(f"edge {label} has no weight and no uniform gamma was given")
            value = to_rational(gamma)
        weights[label] = value
    return weights

"""
Shared fixtures: seeded random generators for rationals, graphs and points
"""
import random
from fractions import Fraction
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Iterator, List

import networkx as nx
import pytest

from src.graphs.multigraph import Multigraph
from src.regions.point import PlanePoint


class Generators:
    """Reproducible random inputs; one instance per test"""

    def __init__(self, seed: int = 20240601):
        self.rng = random.Random(seed)

    def rational(self, lo: Fraction = Fraction(-3), hi: Fraction = Fraction(3),
                 denominators=(1, 2, 3, 4, 5, 7)) -> Fraction:
        denominator = self.rng.choice(denominators)
        low = int(lo * denominator)
        high = int(hi * denominator)
        return Fraction(self.rng.randint(low, high), denominator)

    def open_interval(self, lo: Fraction, hi: Fraction, denominator: int = 97) -> Fraction:
        """Uniform on a grid strictly inside (lo, hi)"""
        width = hi - lo
        return lo + width * Fraction(self.rng.randint(1, denominator - 1), denominator)

    def non_integer_in(self, lo: Fraction, hi: Fraction) -> Fraction:
        while True:
            value = self.open_interval(lo, hi)
            if value.denominator != 1:
                return value

    def multigraph(self, max_vertices: int = 5, max_edges: int = 8, loops: bool = True,
                   connected: bool = False, min_vertices: int = 1) -> Multigraph:
        while True:
            n = self.rng.randint(min_vertices, max_vertices)
            m = self.rng.randint(0, max_edges)
            edges = []
            for _ in range(m):
                u, v = self.rng.randrange(n), self.rng.randrange(n)
                if u == v and not loops:
                    continue
                edges.append((u, v))
            graph = Multigraph(n, tuple(edges))
            if not connected or graph.is_connected():
                return graph

    def weights(self, g: Multigraph, avoid_zero: bool = False) -> dict:
        result = {}
        for label in g.labels:
            value = self.rational()
            while avoid_zero and value == 0:
                value = self.rational()
            result[label] = value
        return result

    def point_in(self, predicate, lo: Fraction = Fraction(-4), hi: Fraction = Fraction(4),
                 tries: int = 100_000) -> PlanePoint:
        for _ in range(tries):
            p = PlanePoint(self.rational(lo, hi, (1, 2, 3, 4, 5, 7, 9)),
                           self.rational(lo, hi, (1, 2, 3, 4, 5, 7, 9)))
            if predicate(p):
                return p
        raise RuntimeError("no point satisfied the predicate")


def small_multigraphs(max_edges: int, max_vertices: int, connected: bool = True) -> Iterator[Multigraph]:
    """Every edge multiset (loops included) on 1..max_vertices vertices"""
    for n in range(1, max_vertices + 1):
        slots = [(u, v) for u in range(n) for v in range(u, n)]
        for m in range(max_edges + 1):
            for edges in combinations_with_replacement(slots, m):
                graph = Multigraph(n, edges)
                if not connected or graph.is_connected():
                    yield graph


def atlas_graphs(max_vertices: int, max_edges: int) -> List[Multigraph]:
    """Simple graphs from the networkx atlas, one per isomorphism class"""
    graphs = []
    for graph in nx.graph_atlas_g():
        if 0 < graph.number_of_nodes() <= max_vertices and graph.number_of_edges() <= max_edges:
            graphs.append(Multigraph.from_networkx(graph))
    return graphs


@pytest.fixture
def gen() -> Generators:
    """Seeded generator"""
    return Generators()


@pytest.fixture
def k3() -> Multigraph:
    return Multigraph(3, ((0, 1), (1, 2), (0, 2)))


@pytest.fixture
def c4() -> Multigraph:
    return Multigraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))


@pytest.fixture
def data_dir() -> Path:
    return Path(__file__).parent.parent / "data" / "graphs"


@pytest.fixture
def small_graphs():
    """Factory for the exhaustive small multigraph lists"""
    return small_multigraphs


@pytest.fixture
def atlas():
    return atlas_graphs

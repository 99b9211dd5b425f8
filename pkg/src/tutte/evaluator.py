"""
Exact evaluation of the multivariate random-cluster polynomial

    Z(G; q, w) = sum over A subset of E of q^kappa(V, A) * prod_{e in A} w_e

by subset enumeration (the oracle of record) and by deletion-contraction with
series-parallel reductions.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from ..arith.rational import RationalLike, to_rational
from ..graphs.multigraph import Multigraph, UnionFind, find_bridges
from ..errors import CapExceededError
from config.settings import get_config

logger = logging.getLogger(__name__)

WeightedEdge = Tuple[int, int, Fraction]


@dataclass(frozen=True)
class TwoTerminalSplit:
    """Z split by whether s and t end up in the same cluster"""
    z_st: Fraction
    z_s_bar_t: Fraction

    @property
    def total(self) -> Fraction:
        return self.z_st + self.z_s_bar_t


def _brute_cap(cap: Optional[int]) -> int:
    return cap if cap is not None else get_config().evaluation.brute_force_cap


def z_brute(g: Multigraph, q: RationalLike, w: Mapping[int, Fraction],
            cap: Optional[int] = None) -> Fraction:
    """
    Direct enumeration over all 2^|E| edge subsets.

    Args:
        g: Graph
        q: Cluster weight
        w: Edge weights keyed by edge label
        cap: Maximum |E| (defaults to the configured brute-force cap)

    Returns:
        Exact Z(G; q, w)
    """
    split = _enumerate(g, to_rational(q), g.weights_in_order(w), None, None, _brute_cap(cap))
    return split.total


def z_two_terminal_brute(g: Multigraph, s: int, t: int, q: RationalLike,
                         w: Mapping[int, Fraction], cap: Optional[int] = None) -> TwoTerminalSplit:
    _check_terminals(g, s, t)
    return _enumerate(g, to_rational(q), g.weights_in_order(w), s, t, _brute_cap(cap))


def _enumerate(g: Multigraph, q: Fraction, weights: List[Fraction],
               s: Optional[int], t: Optional[int], cap: int) -> TwoTerminalSplit:
    m = g.edge_count
    if m > cap:
        raise CapExceededError(f"brute-force cap exceeded: |E|={m} > {cap}")
    powers = [q ** k for k in range(g.vertex_count + 1)]
    together = Fraction(0)
    apart = Fraction(0)
    for mask in range(1 << m):
        forest = UnionFind(g.vertex_count)
        term = Fraction(1)
        for index in range(m):
            if mask >> index & 1:
                u, v = g.edges[index]
                forest.union(u, v)
                term *= weights[index]
        if term == 0:
            continue
        term *= powers[forest.components]
        if s is not None and forest.find(s) == forest.find(t):
            together += term
        else:
            apart += term
    return TwoTerminalSplit(together, apart)


class _Reducer:
    """One top-level evaluation: fixed q, private memo table."""

    def __init__(self, q: Fraction):
        self.q = q
        self.memo: Dict[Tuple[int, Tuple[WeightedEdge, ...]], Fraction] = {}
        self.branches = 0

    def evaluate(self, n: int, edges: List[WeightedEdge]) -> Fraction:
        factor, n, edges = self._reduce(n, edges)
        if factor == 0:
            return Fraction(0)
        if not edges:
            return factor * self.q ** n

        components = self._components(n, edges)
        if len(components) > 1:
            value = factor
            for sub_n, sub_edges in components:
                value *= self.evaluate(sub_n, sub_edges)
                if value == 0:
                    break
            return value

        key = (n, tuple(sorted(edges)))
        cached = self.memo.get(key)
        if cached is None:
            cached = self._branch(n, edges)
            self.memo[key] = cached
        return factor * cached

    def _reduce(self, n: int, edges: List[WeightedEdge]) -> Tuple[Fraction, int, List[WeightedEdge]]:
        q = self.q
        factor = Fraction(1)
        while True:
            # Loops factor out, zero weights drop, parallel classes merge
            bundles: Dict[Tuple[int, int], Fraction] = {}
            for u, v, w in edges:
                if w == 0:
                    continue
                if u == v:
                    factor *= 1 + w
                    continue
                key = (u, v) if u < v else (v, u)
                bundles[key] = bundles.get(key, Fraction(1)) * (1 + w)
            if factor == 0:
                return factor, n, []
            edges = [(u, v, p - 1) for (u, v), p in bundles.items() if p != 1]

            # Isolated vertices each contribute one factor q
            degree = [0] * n
            for u, v, _ in edges:
                degree[u] += 1
                degree[v] += 1
            isolated = degree.count(0)
            if isolated:
                factor *= q ** isolated
                n, edges = _compact(n, edges, [d > 0 for d in degree])
                continue

            # Bridges: Z(G) = (q + w) Z(G/e)
            bridges = find_bridges(n, [(u, v) for u, v, _ in edges])
            if bridges:
                forest = UnionFind(n)
                for index in bridges:
                    u, v, w = edges[index]
                    factor *= q + w
                    forest.union(u, v)
                if factor == 0:
                    return factor, n, []
                rest = [e for i, e in enumerate(edges) if i not in bridges]
                n, edges = _merge(n, rest, forest)
                continue

            step = self._series_step(n, edges)
            if step is not None:
                step_factor, n, edges = step
                factor *= step_factor
                continue
            return factor, n, edges

    def _series_step(self, n: int, edges: List[WeightedEdge]):
        """Replace one degree-2 vertex by a single edge, if any admits it"""
        incident: List[List[int]] = [[] for _ in range(n)]
        for index, (u, v, _) in enumerate(edges):
            incident[u].append(index)
            incident[v].append(index)
        for vertex in range(n):
            if len(incident[vertex]) != 2:
                continue
            first, second = incident[vertex]
            u1, v1, w1 = edges[first]
            u2, v2, w2 = edges[second]
            denominator = self.q + w1 + w2
            if denominator == 0:
                continue
            a = v1 if u1 == vertex else u1
            b = v2 if u2 == vertex else u2
            rest = [e for i, e in enumerate(edges) if i not in (first, second)]
            rest.append((a, b, w1 * w2 / denominator))
            keep = [True] * n
            keep[vertex] = False
            new_n, new_edges = _compact(n, rest, keep)
            return denominator, new_n, new_edges
        return None

    def _components(self, n: int, edges: List[WeightedEdge]) -> List[Tuple[int, List[WeightedEdge]]]:
        forest = UnionFind(n)
        for u, v, _ in edges:
            forest.union(u, v)
        if forest.components == 1:
            return [(n, edges)]
        groups: Dict[int, List[WeightedEdge]] = {}
        for edge in edges:
            groups.setdefault(forest.find(edge[0]), []).append(edge)
        parts = []
        for group in groups.values():
            used = [False] * n
            for u, v, _ in group:
                used[u] = used[v] = True
            parts.append(_compact(n, group, used))
        return parts

    def _branch(self, n: int, edges: List[WeightedEdge]) -> Fraction:
        self.branches += 1
        degree = [0] * n
        for u, v, _ in edges:
            degree[u] += 1
            degree[v] += 1
        hub = max(range(n), key=degree.__getitem__)
        index = next(i for i, (u, v, _) in enumerate(edges) if hub in (u, v))
        u, v, w = edges[index]
        rest = edges[:index] + edges[index + 1:]
        deleted = self.evaluate(n, list(rest))
        forest = UnionFind(n)
        forest.union(u, v)
        contracted_n, contracted = _merge(n, rest, forest)
        return deleted + w * self.evaluate(contracted_n, contracted)


def _compact(n: int, edges: List[WeightedEdge], keep: List[bool]) -> Tuple[int, List[WeightedEdge]]:
    mapping = {}
    for vertex in range(n):
        if keep[vertex]:
            mapping[vertex] = len(mapping)
    return len(mapping), [(mapping[u], mapping[v], w) for u, v, w in edges]


def _merge(n: int, edges: List[WeightedEdge], forest: UnionFind) -> Tuple[int, List[WeightedEdge]]:
    """Identify vertices in the same union-find class and relabel densely"""
    mapping: Dict[int, int] = {}
    for vertex in range(n):
        mapping.setdefault(forest.find(vertex), len(mapping))
    return len(mapping), [
        (mapping[forest.find(u)], mapping[forest.find(v)], w) for u, v, w in edges
    ]


def z_multivariate(g: Multigraph, q: RationalLike, w: Mapping[int, Fraction]) -> Fraction:
    """
    Deletion-contraction with reductions, memoized per call.

    Reductions before branching: loops, parallel merge, bridges, series merge.
    Disconnected pieces are evaluated separately.
    """
    q = to_rational(q)
    weights = g.weights_in_order(w)
    if g.vertex_count == 0:
        return Fraction(1)
    if q == 0:
        return Fraction(0)
    if q == 1:
        value = Fraction(1)
        for weight in weights:
            value *= 1 + weight
        return value
    reducer = _Reducer(q)
    value = reducer.evaluate(g.vertex_count, [(u, v, x) for (u, v), x in zip(g.edges, weights)])
    logger.debug(f"z_multivariate: |V|={g.vertex_count} |E|={g.edge_count} "
                 f"branches={reducer.branches} memo={len(reducer.memo)}")
    return value


def _check_terminals(g: Multigraph, s: int, t: int) -> None:
    if s == t:
        raise ValueError("terminals must be distinct")
    for vertex in (s, t):
        if not 0 <= vertex < g.vertex_count:
            raise ValueError(f"terminal {vertex} is not a vertex")


def z_two_terminal(g: Multigraph, s: int, t: int, q: RationalLike,
                   w: Mapping[int, Fraction]) -> TwoTerminalSplit:
    """
    Split Z into Z_st + Z_s|t using two full evaluations.

    With an auxiliary (s,t) edge of weight 1:
        Z+ = 2 Z_st + (1 + 1/q) Z_s|t
    which is solvable unless q = 1. At q = 0 both parts vanish.
    """
    _check_terminals(g, s, t)
    q = to_rational(q)
    if q == 0:
        return TwoTerminalSplit(Fraction(0), Fraction(0))
    if q == 1:
        logger.warning("z_two_terminal: singular system at q=1, falling back to enumeration")
        return z_two_terminal_brute(g, s, t, q, w)
    total = z_multivariate(g, q, w)
    augmented, label = g.add_edge(s, t)
    weights = dict(w)
    weights[label] = Fraction(1)
    boosted = z_multivariate(augmented, q, weights)
    apart = q * (boosted - 2 * total) / (1 - q)
    return TwoTerminalSplit(total - apart, apart)


def tutte_value(g: Multigraph, x: RationalLike, y: RationalLike) -> Fraction:
    """Classical T(G; x, y) recovered from Z at q=(x-1)(y-1), w=y-1"""
    x, y = to_rational(x), to_rational(y)
    if x == 1 or y == 1:
        raise ValueError("tutte_value needs x != 1 and y != 1")
    z = z_multivariate(g, (x - 1) * (y - 1), {label: y - 1 for label in g.labels})
    return z / ((y - 1) ** g.vertex_count * (x - 1) ** g.kappa())

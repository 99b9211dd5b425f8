"""
Two-terminal gadgets: the weight a gadget implements, composition, literal
substitution into a host graph, and certification of composition trees.

A gadget (graph, s, t, weights) implements

    w* = q Z_st / Z_s|t

and replacing a host edge by the gadget multiplies Z by Z_s|t / q^2.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from .shifts import Leaf, Parallel, Series, ShiftExpr, leaf_count, node_weights, postorder
from ..arith.rational import RationalLike, format_rational, to_rational
from ..graphs.io import format_graph_text, parse_graph_text
from ..graphs.multigraph import Multigraph
from ..regions.point import PlanePoint
from ..tutte.evaluator import TwoTerminalSplit, z_two_terminal
from ..errors import CapExceededError, GadgetError, GraphFormatError
from config.settings import get_config

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Gadget:
    """Graph with distinct terminals s, t and a weight on every edge"""
    graph: Multigraph
    s: int
    t: int
    weights: Dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.s == self.t:
            raise ValueError("gadget terminals must be distinct")
        for vertex in (self.s, self.t):
            if not 0 <= vertex < self.graph.vertex_count:
                raise ValueError(f"terminal {vertex} is not a vertex")
        weights = {label: to_rational(self.weights[label]) for label in self.graph.labels
                   if label in self.weights}
        if len(weights) != self.graph.edge_count:
            raise ValueError("gadget weights must cover every edge")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def single_edge(cls, weight: RationalLike) -> "Gadget":
        return cls(Multigraph(2, ((0, 1),)), 0, 1, {0: to_rational(weight)})

    @classmethod
    def uniform(cls, graph: Multigraph, s: int, t: int, weight: RationalLike) -> "Gadget":
        value = to_rational(weight)
        return cls(graph, s, t, {label: value for label in graph.labels})

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    def weight_list(self) -> List[Fraction]:
        return self.graph.weights_in_order(self.weights)

    def to_text(self) -> str:
        return format_graph_text(self.graph, self.weights, {"s": self.s, "t": self.t})

    @classmethod
    def from_text(cls, text: str) -> "Gadget":
        parsed = parse_graph_text(text)
        if set(parsed.terminals) != {"s", "t"}:
            raise GraphFormatError("gadget needs both 'terminal s' and 'terminal t' lines")
        if not parsed.is_weighted:
            raise GraphFormatError("every gadget edge needs a weight")
        return cls(parsed.graph, parsed.terminals["s"], parsed.terminals["t"], parsed.weights)


@dataclass(frozen=True)
class Implementation:
    """Implemented weight, the substitution scale Z_s|t/q^2 and the raw split"""
    weight: Fraction
    scale: Fraction
    split: TwoTerminalSplit

    def point(self, q: RationalLike) -> PlanePoint:
        return PlanePoint.from_q_gamma(q, self.weight)


def implemented_weight(gd: Gadget, q: RationalLike) -> Implementation:
    """
    Exact weight implemented by a gadget, via the two-terminal evaluator.

    Args:
        gd: Gadget
        q: Cluster weight (nonzero)

    Returns:
        Implementation with weight q Z_st / Z_s|t and scale Z_s|t / q^2
    """
    q = to_rational(q)
    if q == 0:
        raise GadgetError("implemented weight is undefined at q = 0")
    split = z_two_terminal(gd.graph, gd.s, gd.t, q, gd.weights)
    if split.z_s_bar_t == 0:
        raise GadgetError("non-implementing gadget: Z_s|t = 0")
    return Implementation(q * split.z_st / split.z_s_bar_t, split.z_s_bar_t / q ** 2, split)


def _glue(a: Gadget, b: Gadget, identify: Mapping[int, int]) -> Tuple[int, List, List[Fraction], Dict[int, int]]:
    """Vertices of b appended after a, except those identified with a vertex of a"""
    index: Dict[int, int] = {}
    next_vertex = a.graph.vertex_count
    for vertex in range(b.graph.vertex_count):
        if vertex in identify:
            index[vertex] = identify[vertex]
        else:
            index[vertex] = next_vertex
            next_vertex += 1
    edges = list(a.graph.edges) + [(index[u], index[v]) for u, v in b.graph.edges]
    return next_vertex, edges, a.weight_list() + b.weight_list(), index


def _assemble(vertex_count: int, edges: List, weights: List[Fraction], s: int, t: int) -> Gadget:
    graph = Multigraph(vertex_count, tuple(edges))
    return Gadget(graph, s, t, dict(zip(graph.labels, weights)))


def series_gadget(a: Gadget, b: Gadget) -> Gadget:
    """t of a is identified with s of b"""
    n, edges, weights, index = _glue(a, b, {b.s: a.t})
    return _assemble(n, edges, weights, a.s, index[b.t])


def parallel_gadget(a: Gadget, b: Gadget) -> Gadget:
    n, edges, weights, _ = _glue(a, b, {b.s: a.s, b.t: a.t})
    return _assemble(n, edges, weights, a.s, a.t)


def expr_to_gadget(expr: ShiftExpr, edge_cap: Optional[int] = None) -> Gadget:
    """Expand a composition tree into its literal series-parallel gadget"""
    edge_cap = edge_cap if edge_cap is not None else get_config().gadget.gadget_edge_cap
    size = leaf_count(expr)
    if size > edge_cap:
        raise CapExceededError(f"gadget would have {size} edges, above the cap of {edge_cap}")
    built: Dict[int, Gadget] = {}
    for node in postorder(expr):
        if isinstance(node, Leaf):
            built[id(node)] = Gadget.single_edge(node.weight)
        elif isinstance(node, Series):
            built[id(node)] = series_gadget(built[id(node.left)], built[id(node.right)])
        else:
            built[id(node)] = parallel_gadget(built[id(node.left)], built[id(node.right)])
    return built[id(expr)]


def replace_every_edge(base: Multigraph, s: int, t: int, edge_gadget: Gadget) -> Gadget:
    """Every edge (u, v) of base becomes a copy of edge_gadget with s->u, t->v"""
    vertex_count = base.vertex_count
    edges: List[Tuple[int, int]] = []
    weights: List[Fraction] = []
    inner = edge_gadget.weight_list()
    for u, v in base.edges:
        index: Dict[int, int] = {}
        for vertex in range(edge_gadget.graph.vertex_count):
            if vertex == edge_gadget.s:
                index[vertex] = u
            elif vertex == edge_gadget.t:
                index[vertex] = v
            else:
                index[vertex] = vertex_count
                vertex_count += 1
        edges.extend((index[a], index[b]) for a, b in edge_gadget.graph.edges)
        weights.extend(inner)
    return _assemble(vertex_count, edges, weights, s, t)


def substitute(host: Multigraph, host_weights: Mapping[int, Fraction], label: int,
               gd: Gadget) -> Tuple[Multigraph, Dict[int, Fraction]]:
    """
    Replace one host edge by a copy of the gadget.

    Z(result) = (Z_s|t / q^2) Z(host with that edge weighted by the implemented weight).

    Returns:
        (new graph, new weights); untouched host edges keep their labels
    """
    u, v = host.endpoints(label)
    if u == v:
        raise ValueError("cannot substitute a gadget for a loop")
    index: Dict[int, int] = {}
    vertex_count = host.vertex_count
    for vertex in range(gd.graph.vertex_count):
        if vertex == gd.s:
            index[vertex] = u
        elif vertex == gd.t:
            index[vertex] = v
        else:
            index[vertex] = vertex_count
            vertex_count += 1
    kept = [(lab, edge) for lab, edge in zip(host.labels, host.edges) if lab != label]
    next_label = max(host.labels) + 1
    new_labels = list(range(next_label, next_label + gd.edge_count))
    graph = Multigraph(
        vertex_count,
        tuple(edge for _, edge in kept) + tuple((index[a], index[b]) for a, b in gd.graph.edges),
        tuple(lab for lab, _ in kept) + tuple(new_labels),
    )
    weights = {lab: to_rational(host_weights[lab]) for lab, _ in kept}
    weights.update(zip(new_labels, gd.weight_list()))
    return graph, weights


def certify_gadget(gd: Gadget, q: RationalLike, expected: RationalLike) -> Implementation:
    """implemented_weight, which must equal the closed-form expectation exactly"""
    implementation = implemented_weight(gd, q)
    expected = to_rational(expected)
    if implementation.weight != expected:
        raise GadgetError(
            f"certification failed: gadget implements {format_rational(implementation.weight)}, "
            f"closed form gives {format_rational(expected)}")
    return implementation


def certify_expression(expr: ShiftExpr, q: RationalLike, edge_limit: Optional[int] = None) -> Fraction:
    """
    Certify a composition tree against the two-terminal evaluator.

    Every distinct internal node is checked as a two-edge gadget over its
    children's weights. When the expanded gadget has at most edge_limit edges
    it is also checked as a whole.

    Returns:
        The certified weight of the root
    """
    q = to_rational(q)
    edge_limit = edge_limit if edge_limit is not None else get_config().gadget.certify_edge_limit
    weights = node_weights(expr, q)
    for node in postorder(expr):
        if isinstance(node, Leaf):
            continue
        left = Gadget.single_edge(weights[id(node.left)])
        right = Gadget.single_edge(weights[id(node.right)])
        local = series_gadget(left, right) if isinstance(node, Series) else parallel_gadget(left, right)
        certify_gadget(local, q, weights[id(node)])
    root = weights[id(expr)]
    size = leaf_count(expr)
    if size <= edge_limit:
        certify_gadget(expr_to_gadget(expr), q, root)
    else:
        logger.debug(f"certify_expression: {size} edges, certified node by node only")
    return root

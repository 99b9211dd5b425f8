"""
Graph and gadget text format.

    vertices <n>
    edge <u> <v> [<rational>]
    terminal s <v>
    terminal t <v>

'#' starts a comment. A missing weight means "use the uniform gamma".
"""
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple, Union

from .multigraph import Multigraph
from ..arith.rational import format_rational, parse_rational
from ..errors import GraphFormatError


@dataclass
class GraphFile:
    """Parsed contents of a graph (or gadget) file"""
    graph: Multigraph
    weights: Dict[int, Optional[Fraction]] = field(default_factory=dict)
    terminals: Dict[str, int] = field(default_factory=dict)

    @property
    def is_weighted(self) -> bool:
        return all(w is not None for w in self.weights.values())


def parse_graph_text(text: str) -> GraphFile:
    vertex_count: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    weights: Dict[int, Optional[Fraction]] = {}
    terminals: Dict[str, int] = {}

    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "vertices" and len(parts) == 2:
                if vertex_count is not None:
                    raise GraphFormatError(f"line {line_number}: duplicate 'vertices' line")
                vertex_count = int(parts[1])
            elif parts[0] == "edge" and len(parts) in (3, 4):
                if vertex_count is None:
                    raise GraphFormatError(f"line {line_number}: 'edge' before 'vertices'")
                u, v = int(parts[1]), int(parts[2])
                if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                    raise GraphFormatError(f"line {line_number}: endpoint out of range")
                weights[len(edges)] = parse_rational(parts[3]) if len(parts) == 4 else None
                edges.append((u, v))
            elif parts[0] == "terminal" and len(parts) == 3 and parts[1] in ("s", "t"):
                terminals[parts[1]] = int(parts[2])
            else:
                raise GraphFormatError(f"line {line_number}: unrecognised line {raw.strip()!r}")
        except ValueError as e:
            if isinstance(e, GraphFormatError):
                raise
            raise GraphFormatError(f"line {line_number}: {e}") from None

    if vertex_count is None:
        raise GraphFormatError("missing 'vertices' line")
    for name, vertex in terminals.items():
        if not 0 <= vertex < vertex_count:
            raise GraphFormatError(f"terminal {name} out of range")
    return GraphFile(Multigraph(vertex_count, tuple(edges)), weights, terminals)


def read_graph(path: Union[str, Path]) -> GraphFile:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise GraphFormatError(f"cannot read graph file {path}: {e}") from None
    return parse_graph_text(text)


def format_graph_text(graph: Multigraph,
                      weights: Optional[Mapping[int, Fraction]] = None,
                      terminals: Optional[Mapping[str, int]] = None) -> str:
    """Edges written in list order; labels are not part of the format"""
    lines = [f"vertices {graph.vertex_count}"]
    for label, (u, v) in zip(graph.labels, graph.edges):
        if weights is not None and weights.get(label) is not None:
            lines.append(f"edge {u} {v} {format_rational(weights[label])}")
        else:
            lines.append(f"edge {u} {v}")
    for name in ("s", "t"):
        if terminals and name in terminals:
            lines.append(f"terminal {name} {terminals[name]}")
    return "\n".join(lines) + "\n"

"""
Chromatic, flow and Potts specializations of Z, with brute-force oracles.
"""
import itertools
import logging
from fractions import Fraction
from typing import Optional

from .evaluator import z_multivariate
from ..arith.rational import RationalLike, to_rational
from ..arith.unipoly import UniPoly, interpolate
from ..graphs.multigraph import Multigraph, uniform_weights
from ..errors import CapExceededError
from config.settings import get_config

logger = logging.getLogger(__name__)


def chromatic_poly(g: Multigraph) -> UniPoly:
    """P(G; q) = Z(G; q, -1), interpolated at q = 1..|V|+1"""
    degree = g.vertex_count
    minus_one = uniform_weights(g, -1)
    nodes = [(Fraction(q), z_multivariate(g, q, minus_one)) for q in range(1, degree + 2)]
    return interpolate(nodes, degree)


def flow_value(g: Multigraph, q: RationalLike) -> Fraction:
    """F(G; q) = q^-|V| (-1)^|E| Z(G; q, -q)"""
    q = to_rational(q)
    if q == 0:
        raise ValueError("flow_value needs q != 0")
    z = z_multivariate(g, q, uniform_weights(g, -q))
    return (-1) ** g.edge_count * z / q ** g.vertex_count


def flow_poly(g: Multigraph) -> UniPoly:
    """F(G; q), degree at most the cycle rank |E| - |V| + kappa, interpolated at q = 1..d+1"""
    degree = g.edge_count - g.vertex_count + g.kappa()
    nodes = [(Fraction(q), flow_value(g, q)) for q in range(1, degree + 2)]
    poly = interpolate(nodes, degree)
    logger.debug(f"flow_poly: cycle rank {degree}, result {poly}")
    return poly


def _oracle_cap(cap: Optional[int]) -> int:
    return cap if cap is not None else get_config().evaluation.oracle_cap


def _check_positive_integer(q: int) -> None:
    if isinstance(q, bool) or not isinstance(q, int) or q < 1:
        raise ValueError(f"q must be a positive integer, got {q!r}")


def count_colourings_brute(g: Multigraph, q: int, cap: Optional[int] = None) -> int:
    """Proper colourings V -> [q] by enumeration"""
    _check_positive_integer(q)
    limit = _oracle_cap(cap)
    if q ** g.vertex_count > limit:
        raise CapExceededError(f"oracle cap exceeded: {q}^{g.vertex_count} > {limit}")
    if g.loops():
        return 0
    count = 0
    for colouring in itertools.product(range(q), repeat=g.vertex_count):
        if all(colouring[u] != colouring[v] for u, v in g.edges):
            count += 1
    return count


def count_nzflows_brute(g: Multigraph, q: int, cap: Optional[int] = None) -> int:
    """Nowhere-zero Z_q flows, each edge oriented u -> v as listed"""
    _check_positive_integer(q)
    limit = _oracle_cap(cap)
    if q ** g.edge_count > limit:
        raise CapExceededError(f"oracle cap exceeded: {q}^{g.edge_count} > {limit}")
    count = 0
    for values in itertools.product(range(1, q), repeat=g.edge_count):
        excess = [0] * g.vertex_count
        for (u, v), value in zip(g.edges, values):
            excess[u] += value
            excess[v] -= value
        if all(e % q == 0 for e in excess):
            count += 1
    return count


def potts_brute(g: Multigraph, q: int, w, cap: Optional[int] = None) -> Fraction:
    """
    Potts partition function sum_sigma prod_e (1 + w_e [sigma(u) = sigma(v)]).

    Args:
        g: Graph
        q: Number of spin states
        w: Uniform weight or per-edge weight mapping
        cap: Maximum number of spin configurations
    """
    _check_positive_integer(q)
    limit = _oracle_cap(cap)
    if q ** g.vertex_count > limit:
        raise CapExceededError(f"oracle cap exceeded: {q}^{g.vertex_count} > {limit}")
    weights = g.weights_in_order(w if isinstance(w, dict) else uniform_weights(g, w))
    total = Fraction(0)
    for sigma in itertools.product(range(q), repeat=g.vertex_count):
        term = Fraction(1)
        for (u, v), weight in zip(g.edges, weights):
            if sigma[u] == sigma[v]:
                term *= 1 + weight
        total += term
    return total

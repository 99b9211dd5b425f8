"""
Fixed-shape gadgets: K_n minus an edge at weight -1 (+ delta), and the
Petersen graph minus an edge at weight -q (- delta).
"""
import logging
from fractions import Fraction
from typing import Tuple

from .gadget import Gadget, implemented_weight
from ..arith.rational import RationalLike, format_rational, is_integer, to_rational
from ..graphs.families import clique_minus_edge, petersen_graph, petersen_minus_edge
from ..tutte.specializations import flow_value
from ..errors import HypothesisError

logger = logging.getLogger(__name__)


def clique_minus_edge_weight(n: int, q: RationalLike) -> Fraction:
    """Closed form (n-2)/(q-n+1) of the weight K_n - st implements at gamma = -1"""
    q = to_rational(q)
    if q == n - 1:
        raise HypothesisError(f"q = {n - 1} makes the clique weight infinite")
    return Fraction(n - 2) / (q - n + 1)


def gamma_n_gadget(n: int, q: RationalLike, delta: RationalLike = 0) -> Gadget:
    """
    K_n minus the edge (s, t) with every weight -1 + delta.

    At delta = 0 the implemented weight is (n-2)/(q-n+1), which is below -1
    for every non-integer q in (1, n-1); the hardness argument uses
    q in (n-2, n-1).

    Args:
        n: Number of vertices, at least 4
        q: Non-integer cluster weight in (1, n-1)
        delta: Offset in [0, 1)
    """
    q, delta = to_rational(q), to_rational(delta)
    if n < 4:
        raise HypothesisError(f"n >= 4 required, got n = {n}")
    if is_integer(q):
        raise HypothesisError(f"q must not be an integer, got q = {format_rational(q)}")
    if not 1 < q < n - 1:
        raise HypothesisError(f"1 < q < {n - 1} required, got q = {format_rational(q)}")
    if not 0 <= delta < 1:
        raise HypothesisError(f"0 <= delta < 1 required, got delta = {format_rational(delta)}")
    graph, s, t = clique_minus_edge(n)
    return Gadget.uniform(graph, s, t, delta - 1)


def petersen_flow_weight(q: RationalLike) -> Fraction:
    """
    w(q) = -q F(G) / (F(G) - (q-1) F(Gamma)) with G the Petersen graph and
    Gamma = G minus an edge; the weight Gamma implements at gamma = -q.
    """
    q = to_rational(q)
    flows_g = flow_value(petersen_graph(), q)
    graph, _, _ = petersen_minus_edge()
    flows_gamma = flow_value(graph, q)
    denominator = flows_g - (q - 1) * flows_gamma
    if denominator == 0:
        raise HypothesisError(f"Petersen weight undefined at q = {format_rational(q)}")
    return -q * flows_g / denominator


def petersen_gadget(q: RationalLike, delta: RationalLike = 0) -> Tuple[Gadget, Fraction]:
    """
    Petersen graph minus an edge, every weight -q - delta.

    Returns:
        (gadget, implemented weight); at delta = 0 the weight equals
        petersen_flow_weight(q) and lies in (-q, 0)
    """
    q, delta = to_rational(q), to_rational(delta)
    if is_integer(q) or not 2 < q < 4:
        raise HypothesisError(f"non-integer 2 < q < 4 required, got q = {format_rational(q)}")
    if delta < 0:
        raise HypothesisError("delta >= 0 required")
    graph, s, t = petersen_minus_edge()
    gadget = Gadget.uniform(graph, s, t, -q - delta)
    weight = implemented_weight(gadget, q).weight
    logger.debug(f"petersen_gadget(q={format_rational(q)}, delta={format_rational(delta)}): "
                 f"w = {format_rational(weight)}")
    return gadget, weight

"""
Sign of Z(G; q, gamma) at a plane point.

Polynomial-time rules are used wherever the point admits one; the NP points
go to the backtracking deciders; everything else falls back to exact
evaluation.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import prod
from typing import Callable, Mapping, Optional

from .deciders import decide_colourable, decide_nz_flow
from .matroid_values import value_matroid_js, value_matroid_qneg
from ..arith.rational import format_rational, is_integer, sign
from ..graphs.multigraph import Multigraph, uniform_weights
from ..matroids.binary import BinaryMatroid, cycle_matroid
from ..matroids.tutte import dual_weights
from ..regions.classifier import PointClass, Region, classify
from ..regions.point import PlanePoint
from ..tutte.evaluator import z_multivariate
from ..errors import TutteSignError
from config.settings import get_config

logger = logging.getLogger(__name__)

METHODS = ("auto", "fp", "exact")


class SignValue(int, Enum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of(cls, value) -> "SignValue":
        return cls(sign(Fraction(value)))

    @property
    def label(self) -> str:
        return self.name.capitalize()


def _parity(exponent: int) -> SignValue:
    return SignValue.NEGATIVE if exponent % 2 else SignValue.POSITIVE


@dataclass(frozen=True)
class SignReport:
    """Sign, the rule that produced it and an optional certificate"""
    sign: SignValue
    method: str
    certificate: Optional[str] = None
    region: Optional[Region] = None


@dataclass(frozen=True)
class MatroidValue:
    value: Fraction
    stripped: int
    rank: int


class SignDispatcher:
    """Routes (graph, point) pairs to the sign rule for the point's region"""

    def __init__(self, config=None):
        self.config = config or get_config()

    def dispatch(self, g: Multigraph, p: PlanePoint, method: Optional[str] = None) -> SignReport:
        """
        Args:
            g: Graph
            p: Point (x, y); q and gamma are derived from it
            method: "auto" (rule if any, else exact), "fp" (rule or error) or "exact"

        Returns:
            SignReport
        """
        method = method or self.config.sign.default_method
        if method not in METHODS:
            raise ValueError(f"unknown sign method {method!r}; expected one of {', '.join(METHODS)}")
        point_class = classify(p)

        if method == "exact":
            return self._exact(g, p, point_class)
        report = self._rule(g, p, point_class)
        if report is not None:
            logger.debug(f"sign at {p}: {report.sign.label} via {report.method}")
            return report
        if method == "fp":
            raise TutteSignError(
                f"no polynomial-time sign rule at {p} (region {point_class.region.value}, "
                f"status {point_class.status.value})")
        return self._exact(g, p, point_class)

    def _exact(self, g: Multigraph, p: PlanePoint, point_class: PointClass) -> SignReport:
        logger.info(f"Exact fallback at {p} for |V|={g.vertex_count}, |E|={g.edge_count}")
        value = z_multivariate(g, p.q, uniform_weights(g, p.gamma))
        return SignReport(SignValue.of(value), "exact-fallback", f"Z = {format_rational(value)}",
                          point_class.region)

    def _rule(self, g: Multigraph, p: PlanePoint, point_class: PointClass) -> Optional[SignReport]:
        x, y, q = p.x, p.y, p.q
        n, m = g.vertex_count, g.edge_count
        region = point_class.region

        if n == 0:
            return SignReport(SignValue.POSITIVE, "empty-graph", "Z = 1", region)
        if q == 0:
            return SignReport(SignValue.ZERO, "q-zero", "every term carries q^kappa", region)
        if q == 1:
            if y == 0 and m > 0:
                return SignReport(SignValue.ZERO, "q-one-hyperbola", "factor (1+gamma) = 0", region)
            return SignReport(SignValue.of(y) if m % 2 else SignValue.POSITIVE,
                              "q-one-hyperbola", f"Z = y^{m}", region)

        if region == Region.A:
            return self._region_a(g, p)
        if region == Region.B_SPECIAL:
            return self._bicycle(g)
        if region == Region.BE_BOUNDARY and is_integer(x):
            return self._colourings(g, int(1 - x), region)
        if region == Region.BF_BOUNDARY and is_integer(y) and y not in (-3, -4):
            return self._flows(g, int(1 - y), region)
        if region == Region.E and is_integer(q):
            return SignReport(SignValue.POSITIVE, "potts-positive",
                              f"integer q = {format_rational(q)}, every Potts factor >= y > 0", region)
        if region == Region.F and is_integer(q):
            return SignReport(_parity(m), "flow-expansion-sign",
                              f"integer q = {format_rational(q)}, all {m} factors negative", region)
        if region == Region.K:
            return self._region_k(g, p)
        if region == Region.J:
            return self._region_j(g, p)
        if region == Region.L:
            return self._region_l(g, p)
        if region == Region.M:
            return self._region_m(g, p)
        return None

    def _region_a(self, g: Multigraph, p: PlanePoint) -> SignReport:
        # Z = (y-1)^|V| (x-1)^kappa T(G;x,y) with T >= 0 here
        if p.x == 0 and not g.is_bridgeless():
            return SignReport(SignValue.ZERO, "region-a-tutte-positive",
                              "x = 0 and G has a bridge: T = 0", Region.A)
        if p.y == 0 and g.loops():
            return SignReport(SignValue.ZERO, "region-a-tutte-positive",
                              "y = 0 and G has a loop: T = 0", Region.A)
        kappa = g.kappa()
        exponent = (g.vertex_count if p.y < 1 else 0) + (kappa if p.x < 1 else 0)
        return SignReport(_parity(exponent), "region-a-tutte-positive",
                          f"T > 0, sign(y-1)^{g.vertex_count} sign(x-1)^{kappa}", Region.A)

    def _bicycle(self, g: Multigraph) -> SignReport:
        # T(G;-1,-1) = (-1)^|E| (-2)^d with d the bicycle dimension
        bicycle = cycle_matroid(g).bicycle_dimension()
        exponent = g.vertex_count + g.kappa() + g.edge_count + bicycle
        return SignReport(_parity(exponent), "bicycle-space", f"bicycle dimension {bicycle}",
                          Region.B_SPECIAL)

    def _colourings(self, g: Multigraph, colours: int, region: Region) -> SignReport:
        if colours == 2:
            found = g.is_bipartite()
            method, certificate = "bipartite", "bipartite" if found else "odd cycle or loop"
        else:
            found = decide_colourable(g, colours, self.config.sign.decider_node_cap)
            method = "colourability-decider"
            certificate = f"{colours}-colourable" if found else f"not {colours}-colourable"
        return SignReport(SignValue.POSITIVE if found else SignValue.ZERO, method, certificate, region)

    def _flows(self, g: Multigraph, q: int, region: Region) -> SignReport:
        if q == 2:
            found = g.is_eulerian()
            method, certificate = "eulerian", "all degrees even" if found else "odd degree vertex"
        elif q >= 6:
            found = g.is_bridgeless()
            method, certificate = "bridgeless", "bridgeless" if found else "bridge found"
        else:
            found = decide_nz_flow(g, q, self.config.sign.decider_node_cap)
            method = "flow-decider"
            certificate = f"nowhere-zero {q}-flow" if found else f"no nowhere-zero {q}-flow"
        if not found:
            return SignReport(SignValue.ZERO, method, certificate, region)
        return SignReport(_parity(g.edge_count), method, certificate, region)

    def _matroid_value(self, g: Multigraph, p: PlanePoint, dual: bool,
                       recursion: Callable[[BinaryMatroid, Fraction, Mapping], Fraction]) -> MatroidValue:
        """
        Z = q^|V| Z~(M(G); q, gamma). On the dual side
        Z~(M) = q^-r(E) prod(gamma) Z~(M*; q, q/gamma), so bridges become loops.
        Loop factors (1 + w) are taken out before the recursion runs.
        """
        q = p.q
        weights = uniform_weights(g, p.gamma)
        matroid = cycle_matroid(g)
        prefactor = q ** g.vertex_count
        if dual and matroid.size:
            prefactor *= q ** -matroid.rank() * prod(weights.values(), start=Fraction(1))
            weights = dual_weights(weights, q)
            matroid = matroid.dual()
        loops = [e for e in matroid.elements if matroid.is_loop(e)]
        for e in loops:
            prefactor *= 1 + weights[e]
            matroid = matroid.delete(e)
        value = recursion(matroid, q, weights)
        return MatroidValue(prefactor * value, len(loops), matroid.rank())

    def _matroid_rule(self, g: Multigraph, p: PlanePoint, region: Region, method: str, dual: bool,
                      recursion, fallback_exponent: int, fallback_certificate: str) -> SignReport:
        if g.edge_count > self.config.sign.matroid_edge_limit:
            logger.debug(f"{method}: {g.edge_count} edges above the recursion limit, parity only")
            return SignReport(_parity(fallback_exponent), method, fallback_certificate, region)
        result = self._matroid_value(g, p, dual, recursion)
        certificate = (f"Z = {format_rational(result.value)}, "
                       f"{'bridges' if dual else 'loops'}={result.stripped}, rank={result.rank}")
        return SignReport(SignValue.of(result.value), method, certificate, region)

    def _region_k(self, g: Multigraph, p: PlanePoint) -> SignReport:
        # q < 0; loops give factors y < 0; the loopless rest is positive
        loops = len(g.loops())
        return self._matroid_rule(g, p, Region.K, "negative-q-loopless", False, value_matroid_qneg,
                                  g.vertex_count + loops, f"loops={loops}, q^{g.vertex_count}")

    def _region_j(self, g: Multigraph, p: PlanePoint) -> SignReport:
        # Dual weights q/gamma = x - 1 in [-2, -1); dual loops are bridges with factor x < 0
        bridges = len(g.bridges())
        kappa = g.kappa()
        return self._matroid_rule(g, p, Region.J, "dual-negative-q", True, value_matroid_qneg,
                                  kappa + bridges, f"bridges={bridges}, kappa={kappa}")

    def _region_l(self, g: Multigraph, p: PlanePoint) -> SignReport:
        loops = len(g.loops())
        rank = g.vertex_count - g.kappa()
        return self._matroid_rule(g, p, Region.L, "alternating-rank-sign", False, value_matroid_js,
                                  loops + rank, f"loops={loops}, rank={rank}")

    def _region_m(self, g: Multigraph, p: PlanePoint) -> SignReport:
        bridges = len(g.bridges())
        rank = g.vertex_count - g.kappa()
        return self._matroid_rule(g, p, Region.M, "dual-alternating-rank-sign", True, value_matroid_js,
                                  bridges + rank, f"bridges={bridges}, rank={rank}")


def sign_dispatch(g: Multigraph, p: PlanePoint, method: Optional[str] = None) -> SignReport:
    """Convenience wrapper around SignDispatcher with the global configuration"""
    return SignDispatcher().dispatch(g, p, method)

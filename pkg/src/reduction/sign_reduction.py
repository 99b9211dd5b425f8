"""
Counting minimum (s,t)-cuts with nothing but a sign oracle for Z.

Every edge of G gets a heavy weight M and one extra (s,t) edge gets weight
gamma' = -1 - eps (q > 1) or -1 + eps (q < 1). Then

    Z(G') = Z_st (1 + gamma') + Z_s|t (1 + gamma'/q)

changes sign exactly once as eps sweeps [M^-2m, min(1, |q-1|)], at an eps*
with eps*/(|q-1| - eps*) = Z_s|t / (q Z_st), which is close to C M^-k.
Bisection on the oracle's answers brackets eps*, and the bracket pins down
(k, C).
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Mapping, Optional, Tuple

from .mincut import CutCount, check_instance, count_min_cuts_brute
from ..arith.rational import format_rational, parse_rational, to_rational, RationalLike
from ..gadgets.gadget import expr_to_gadget, implemented_weight, substitute
from ..gadgets.search import approach_weight
from ..gadgets.shifts import Leaf, Parallel, expr_weight, thicken_expr
from ..graphs.multigraph import Multigraph, WeightFunction, uniform_weights
from ..regions.point import PlanePoint
from ..signs.dispatch import SignValue
from ..tutte.evaluator import z_multivariate, z_two_terminal
from ..errors import ReductionError
from config.settings import get_config

logger = logging.getLogger(__name__)

SignOracle = Callable[[Multigraph, Fraction, Mapping[int, Fraction]], SignValue]

MODES = ("idealized", "gadget")
SCHEDULES = ("validated", "fixed")


def exact_sign_oracle(graph: Multigraph, q: Fraction, weights: Mapping[int, Fraction]) -> SignValue:
    """Idealized oracle: the exact sign of Z with arbitrary rational weights"""
    return SignValue.of(z_multivariate(graph, q, weights))


@dataclass(frozen=True)
class ReductionParams:
    """Heavy weight M = (gamma2 + 1)^h - 1, search interval, slack delta and the rho bound"""
    M: Fraction
    h: int
    eps_lo: Fraction
    eps_hi: Fraction
    delta: Fraction
    rho: Fraction
    precision: Fraction


def expected_endpoint_signs(q: Fraction) -> Tuple[SignValue, SignValue]:
    """Signs of Z(G') at eps_lo and eps_hi"""
    if 0 < q < 1:
        return SignValue.NEGATIVE, SignValue.POSITIVE
    return SignValue.POSITIVE, SignValue.NEGATIVE


def light_edge_weight(q: Fraction, eps: Fraction) -> Fraction:
    return -1 - eps if q > 1 else -1 + eps


def reduction_params(g: Multigraph, q: RationalLike, config=None) -> ReductionParams:
    """
    Smallest thickening h whose M clears every inequality the bracket uses.

    M must exceed max((8 max(|q|, 1/|q|))^m, 2/|q-1|) and make
    delta <= 4^-m / 4, where delta bounds the relative error of
    Z_st ~ M^m q and Z_s|t ~ C M^(m-k) q^2.
    """
    config = config or get_config()
    q = to_rational(q)
    if q in (0, 1):
        raise ReductionError("q must differ from 0 and 1")
    m, n = g.edge_count, g.vertex_count
    if m == 0:
        raise ReductionError("the graph has no edges")
    heavy = parse_rational(config.reduction.heavy_weight)
    base = heavy + 1
    if base <= 1:
        raise ReductionError("the heavy weight must be positive")

    big = max(abs(q), 1 / abs(q))
    threshold = max((8 * big) ** m, 2 / abs(q - 1))
    goal = Fraction(1, 4 ** m * 4)
    for h in range(1, config.reduction.max_thickening + 1):
        M = base ** h - 1
        if M <= threshold:
            continue
        delta_growth = (2 * big) ** m / M
        delta_terms = 2 ** m * max(abs(q), 1) ** n / (M * min(abs(q), 1) ** 2)
        delta = max(delta_growth, delta_terms)
        if delta > goal:
            continue
        precision = M ** -(m * m)
        rho = 2 ** m * max(abs(q), 1) ** m * M ** m * precision
        return ReductionParams(M, h, M ** (-2 * m), min(Fraction(1), abs(q - 1)), delta, rho, precision)
    raise ReductionError(f"no thickening up to h = {config.reduction.max_thickening} makes M large enough")


def _ratio(eps: Fraction, k: int, params: ReductionParams, q: Fraction) -> Optional[Fraction]:
    """R_k(eps) = eps M^k / (|q-1| - eps); None stands for +infinity"""
    room = abs(q - 1) - eps
    if room <= 0:
        return None
    return eps * params.M ** k / room


def bracket_candidates(lo: Fraction, hi: Fraction, m: int, params: ReductionParams, q: Fraction,
                       shrink: Fraction, grow: Fraction) -> List[Tuple[int, int, int]]:
    """
    (k, first C, how many C) for every k whose bracket
    [R_k(lo) shrink, R_k(hi) grow] holds integers in [1, 2^m].
    """
    limit = 2 ** m
    found = []
    for k in range(1, m + 1):
        low = _ratio(lo, k, params, q)
        high = _ratio(hi, k, params, q)
        if low is None:
            continue
        first = max(1, math.ceil(low * shrink))
        last = limit if high is None else min(limit, math.floor(high * grow))
        if last >= first:
            found.append((k, first, last - first + 1))
    return found


@dataclass
class ReductionReport:
    """Outcome of one reduction run"""
    count: CutCount
    params: ReductionParams
    queries: int
    bracket: Tuple[Fraction, Fraction]
    mode: str
    schedule: str
    steps: int = 0
    history: List[Tuple[Fraction, SignValue]] = field(default_factory=list)


class SignReduction:
    """Turing reduction from counting minimum (s,t)-cuts to the sign of Z"""

    def __init__(self, config=None, oracle: Optional[SignOracle] = None):
        self.config = config or get_config()
        self.oracle = oracle or exact_sign_oracle
        self.queries = 0

    def run(self, g: Multigraph, s: int, t: int, q: RationalLike,
            mode: Optional[str] = None, schedule: Optional[str] = None) -> ReductionReport:
        """
        Args:
            g: Connected graph without an (s,t) edge
            s: Source terminal
            t: Sink terminal
            q: Cluster weight, not 0 or 1
            mode: "idealized" (oracle sees gamma' directly) or "gadget"
            schedule: "validated" (stop once (k, C) is forced) or "fixed" (a preset number of halvings)

        Returns:
            ReductionReport
        """
        mode = mode or self.config.reduction.mode
        schedule = schedule or self.config.reduction.schedule
        if mode not in MODES:
            raise ValueError(f"unknown reduction mode {mode!r}; expected one of {', '.join(MODES)}")
        if schedule not in SCHEDULES:
            raise ValueError(f"unknown schedule {schedule!r}; expected one of {', '.join(SCHEDULES)}")
        q = to_rational(q)
        if q in (0, 1):
            raise ReductionError("q must differ from 0 and 1")
        check_instance(g, s, t)
        if not g.is_connected():
            raise ReductionError("the graph must be connected")
        params = reduction_params(g, q, self.config)
        self.queries = 0
        logger.info(f"Reduction on |V|={g.vertex_count} |E|={g.edge_count}, q={format_rational(q)}: "
                    f"M={format_rational(params.M)} (h={params.h}), mode={mode}, schedule={schedule}")
        if mode == "gadget":
            return self._run_gadget(g, s, t, q, params, schedule)
        if schedule == "fixed":
            return self._run_fixed(g, s, t, q, params)
        return self._run_validated(g, s, t, q, params)

    # idealized oracle

    def _query(self, augmented: Multigraph, label: int, q: Fraction, params: ReductionParams,
               eps: Fraction) -> SignValue:
        weights = uniform_weights(augmented, params.M)
        weights[label] = light_edge_weight(q, eps)
        self.queries += 1
        return self.oracle(augmented, q, weights)

    def _endpoints(self, augmented: Multigraph, label: int, q: Fraction,
                   params: ReductionParams) -> SignValue:
        expected = expected_endpoint_signs(q)
        observed = (self._query(augmented, label, q, params, params.eps_lo),
                    self._query(augmented, label, q, params, params.eps_hi))
        if observed != expected:
            raise ReductionError(
                f"interval endpoints violate the sign guarantees: expected "
                f"({expected[0].label}, {expected[1].label}), got ({observed[0].label}, {observed[1].label})")
        return expected[0]

    def _unique(self, candidates: List[Tuple[int, int, int]]) -> Optional[CutCount]:
        if len(candidates) == 1 and candidates[0][2] == 1:
            return CutCount(candidates[0][0], candidates[0][1])
        return None

    def _run_validated(self, g, s, t, q, params) -> ReductionReport:
        augmented, label = g.add_edge(s, t)
        m = g.edge_count
        sign_lo = self._endpoints(augmented, label, q, params)
        shrink = (1 - params.delta) / (1 + params.delta)
        grow = (1 + params.delta) / (1 - params.delta)
        lo, hi = params.eps_lo, params.eps_hi
        history: List[Tuple[Fraction, SignValue]] = []
        for step in range(self.config.reduction.max_search_steps):
            count = self._unique(bracket_candidates(lo, hi, m, params, q, shrink, grow))
            if count is not None:
                logger.info(f"Reduction finished after {step} bisections: k={count.k}, C={count.C}")
                return ReductionReport(count, params, self.queries, (lo, hi), "idealized", "validated",
                                       step, history)
            if lo == hi:
                break
            mid = (lo + hi) / 2
            answer = self._query(augmented, label, q, params, mid)
            history.append((mid, answer))
            if answer == SignValue.ZERO:
                lo = hi = mid
            elif answer == sign_lo:
                lo = mid
            else:
                hi = mid
            logger.debug(f"bisection {step + 1}: eps={format_rational(mid)} sign={answer.label}")
        raise ReductionError("bisection did not isolate a unique (k, C)")

    def _run_fixed(self, g, s, t, q, params) -> ReductionReport:
        m = g.edge_count
        halvings = math.ceil(m * m * (math.log2(params.M.numerator) - math.log2(params.M.denominator)))
        if halvings > self.config.reduction.max_search_steps:
            raise ReductionError(f"the fixed schedule needs {halvings} halvings, above max_search_steps")
        augmented, label = g.add_edge(s, t)
        sign_lo = self._endpoints(augmented, label, q, params)
        lo, hi = params.eps_lo, params.eps_hi
        history: List[Tuple[Fraction, SignValue]] = []
        for _ in range(halvings):
            mid = (lo + hi) / 2
            answer = self._query(augmented, label, q, params, mid)
            history.append((mid, answer))
            if answer == SignValue.ZERO:
                lo = hi = mid
                break
            if answer == sign_lo:
                lo = mid
            else:
                hi = mid
        slack = Fraction(1, 4 ** m)
        if params.rho > lo * params.M ** m * abs(q) * slack:
            raise ReductionError("rho exceeds eps M^m |q| 4^-m; the instance is too small for the fixed schedule")
        shrink = (1 - 2 * slack) / (1 + slack)
        grow = (1 + 2 * slack) / (1 - slack)
        count = self._unique(bracket_candidates(lo, lo, m, params, q, shrink, grow))
        if count is None:
            raise ReductionError("the final bracket does not isolate a unique (k, C)")
        logger.info(f"Reduction finished after {halvings} halvings: k={count.k}, C={count.C}")
        return ReductionReport(count, params, self.queries, (lo, hi), "idealized", "fixed", halvings, history)

    # gadget realization

    def _light_point(self, q: Fraction) -> Fraction:
        text = self.config.reduction.light_weight_big_q if q > 1 else self.config.reduction.light_weight_small_q
        return parse_rational(text) + 1

    def _realize_eps(self, q: Fraction, target: Fraction, slack: Fraction):
        """A gadget for gamma' whose eps lies in [target - slack, target]"""
        heavy = parse_rational(self.config.reduction.heavy_weight)
        light_y = self._light_point(q)
        if not (-1 < light_y < 1 and light_y != 0):
            raise ReductionError("the light weight must give a y-coordinate in (-1, 0) or (0, 1)")
        wanted = -target if q > 1 else target
        cap = self.config.gadget.exponent_cap
        j = next((j for j in range(1, cap + 1)
                  if abs(light_y) ** j < target and (light_y ** (j + 2) > 0) == (wanted > 0)), None)
        if j is None:
            raise ReductionError("the light weight cannot produce the required sign")
        scale = light_y ** (j + 2)
        heavy_point = PlanePoint.from_q_gamma(q, heavy)
        found = approach_weight([heavy_point], wanted / scale, slack / abs(scale), coordinate="y")
        if not found.found:
            raise ReductionError(f"could not implement eps near {format_rational(target)} "
                                 f"(closest point {found.closest})")
        expr = Parallel(found.expression, thicken_expr(Leaf(light_y - 1), j + 2))
        y_value = expr_weight(expr, q) + 1
        achieved = -y_value if q > 1 else y_value
        if not target - slack <= achieved <= target:
            raise ReductionError("implemented eps fell outside its window")
        return achieved, expr_to_gadget(expr)

    def _literal_query(self, g: Multigraph, s: int, t: int, q: Fraction, params: ReductionParams,
                       gadget) -> SignValue:
        heavy = parse_rational(self.config.reduction.heavy_weight)
        edges = tuple(edge for edge in g.edges for _ in range(params.h))
        thick = Multigraph(g.vertex_count, edges)
        augmented, label = thick.add_edge(s, t)
        weights: WeightFunction = uniform_weights(augmented, heavy)
        graph, literal_weights = substitute(augmented, weights, label, gadget)
        # thickened bundles scale Z by 1; the gadget by Z_s|t / q^2
        scale_sign = SignValue.of(implemented_weight(gadget, q).scale)
        self.queries += 1
        answer = self.oracle(graph, q, literal_weights)
        return SignValue(answer.value * scale_sign.value)

    def _run_gadget(self, g, s, t, q, params, schedule) -> ReductionReport:
        m = g.edge_count
        sign_lo, _ = expected_endpoint_signs(q)
        shrink = (1 - params.delta) / (1 + params.delta)
        grow = (1 + params.delta) / (1 - params.delta)
        lo, hi = params.eps_lo, params.eps_hi
        log_m = math.log2(params.M.numerator) - math.log2(params.M.denominator)
        rounds = min(math.ceil(m * m * log_m / math.log2(1.5)), self.config.reduction.max_search_steps)
        history: List[Tuple[Fraction, SignValue]] = []
        for step in range(rounds):
            count = self._unique(bracket_candidates(lo, hi, m, params, q, shrink, grow))
            if count is not None and schedule == "validated":
                return ReductionReport(count, params, self.queries, (lo, hi), "gadget", schedule, step, history)
            if lo == hi:
                break
            eps, gadget = self._realize_eps(q, (lo + hi) / 2, (hi - lo) / 6)
            answer = self._literal_query(g, s, t, q, params, gadget)
            history.append((eps, answer))
            if answer == SignValue.ZERO:
                lo = hi = eps
            elif answer == sign_lo:
                lo = eps
            else:
                hi = eps
            logger.debug(f"gadget step {step + 1}: eps={format_rational(eps)} sign={answer.label}")
        count = self._unique(bracket_candidates(lo, hi, m, params, q, shrink, grow))
        if count is None:
            raise ReductionError("the gadget schedule did not isolate a unique (k, C)")
        return ReductionReport(count, params, self.queries, (lo, hi), "gadget", schedule, len(history), history)


def count_min_cuts_via_sign(g: Multigraph, s: int, t: int, q: RationalLike,
                            oracle: Optional[SignOracle] = None, mode: Optional[str] = None,
                            schedule: Optional[str] = None) -> CutCount:
    """(k, C) recovered from sign queries alone"""
    return SignReduction(oracle=oracle).run(g, s, t, q, mode, schedule).count


@dataclass
class ReductionFacts:
    """Exact check of the estimates the bracket relies on"""
    z_st: Fraction
    z_s_bar_t: Fraction
    count: CutCount
    z_st_within: bool
    z_s_bar_t_within: bool
    endpoint_signs: Tuple[SignValue, SignValue]
    expected_signs: Tuple[SignValue, SignValue]

    @property
    def holds(self) -> bool:
        return self.z_st_within and self.z_s_bar_t_within and self.endpoint_signs == self.expected_signs


def verify_reduction_facts(g: Multigraph, s: int, t: int, q: RationalLike,
                           params: Optional[ReductionParams] = None) -> ReductionFacts:
    """
    Check, by exact evaluation,
        |Z_st(G;q,M) - M^m q| <= delta M^m |q|
        C M^(m-k) q^2 (1-delta) <= Z_s|t(G;q,M) <= C M^(m-k) q^2 (1+delta)
    and the signs of Z(G') at both ends of the eps interval.
    """
    q = to_rational(q)
    params = params or reduction_params(g, q)
    count = count_min_cuts_brute(g, s, t)
    M, delta, m = params.M, params.delta, g.edge_count
    split = z_two_terminal(g, s, t, q, uniform_weights(g, M))
    z_st_within = abs(split.z_st - M ** m * q) <= delta * M ** m * abs(q)
    centre = count.C * M ** (m - count.k) * q ** 2
    z_s_bar_t_within = centre * (1 - delta) <= split.z_s_bar_t <= centre * (1 + delta)

    def sign_at(eps: Fraction) -> SignValue:
        gamma = light_edge_weight(q, eps)
        return SignValue.of(split.z_st * (1 + gamma) + split.z_s_bar_t * (1 + gamma / q))

    return ReductionFacts(split.z_st, split.z_s_bar_t, count, z_st_within, z_s_bar_t_within,
                          (sign_at(params.eps_lo), sign_at(params.eps_hi)), expected_endpoint_signs(q))

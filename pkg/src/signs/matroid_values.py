"""
Sign-certified recursions for the matroid polynomial Z~ in the regions where
its sign is known in advance:

  * q < 0, loopless, every weight in [-2, 0]: Z~ > 0.
  * 0 < q < 1 with loop weights > -1, coloop weights < -q and every other
    weight within sqrt(1-q) of -1: sign(Z~) = (-1)^r(E).
"""
import logging
from fractions import Fraction
from typing import Dict, Mapping

from ..arith.rational import RationalLike, format_rational, to_rational
from ..matroids.binary import BinaryMatroid
from ..errors import HypothesisError

logger = logging.getLogger(__name__)


def within_sqrt_band(gamma: Fraction, q: Fraction) -> bool:
    """-1 - sqrt(1-q) < gamma < -1 + sqrt(1-q), compared by squaring (0 < q < 1)"""
    return (gamma + 1) ** 2 < 1 - q


def _merge_parallel(m: BinaryMatroid, w: Dict) -> BinaryMatroid:
    """Collapse every size-2 circuit into one element of parallel weight"""
    while True:
        pairs = m.parallel_pairs()
        if not pairs:
            return m
        keep, drop = pairs[0]
        w[keep] = w[keep] + w[drop] + w[keep] * w[drop]
        m = m.delete(drop)


def value_matroid_qneg(m: BinaryMatroid, q: RationalLike, w: Mapping) -> Fraction:
    """
    Z~(M; q, w) for q < 0, M loopless, weights in [-2, 0]. The result is positive.
    """
    q = to_rational(q)
    if q >= 0:
        raise HypothesisError(f"q < 0 required, got q = {format_rational(q)}")
    if m.loops():
        raise HypothesisError("matroid must be loopless")
    for e in m.elements:
        if not -2 <= w[e] <= 0:
            raise HypothesisError(f"weight of {e!r} must lie in [-2, 0], got {format_rational(w[e])}")
    return _qneg(m, q, {e: to_rational(w[e]) for e in m.elements})


def _qneg(m: BinaryMatroid, q: Fraction, w: Dict) -> Fraction:
    w = dict(w)
    m = _merge_parallel(m, w)
    if m.size == 0:
        return Fraction(1)
    if m.rank() == m.size:
        value = Fraction(1)
        for e in m.elements:
            value *= 1 + w[e] / q
        return value
    coloops = m.coloops()
    element = next(e for e in m.elements if e not in coloops)
    return _qneg(m.delete(element), q, w) + w[element] / q * _qneg(m.contract(element), q, w)


def value_matroid_js(m: BinaryMatroid, q: RationalLike, w: Mapping) -> Fraction:
    """
    Z~(M; q, w) for 0 < q < 1 under the loop / coloop / band conditions.

    Five ordered cases: loop factor, coloop factor with contraction, parallel
    merge, series merge with factor (q + w1 + w2)/q, deletion-contraction.
    """
    q = to_rational(q)
    if not 0 < q < 1:
        raise HypothesisError(f"0 < q < 1 required, got q = {format_rational(q)}")
    coloops = m.coloops()
    for e in m.elements:
        gamma = to_rational(w[e])
        if m.is_loop(e):
            if not gamma > -1:
                raise HypothesisError(f"loop {e!r} needs weight > -1")
        elif e in coloops:
            if not gamma < -q:
                raise HypothesisError(f"coloop {e!r} needs weight < -q")
        elif not within_sqrt_band(gamma, q):
            raise HypothesisError(f"element {e!r} needs -1-sqrt(1-q) < weight < -1+sqrt(1-q)")
    return _js(m, q, {e: to_rational(w[e]) for e in m.elements})


def _js(m: BinaryMatroid, q: Fraction, w: Dict) -> Fraction:
    if m.size == 0:
        return Fraction(1)
    for e in m.elements:
        if m.is_loop(e):
            return (1 + w[e]) * _js(m.delete(e), q, w)
    coloops = m.coloops()
    if coloops:
        e = next(iter(sorted(coloops, key=m.elements.index)))
        return (1 + w[e] / q) * _js(m.contract(e), q, w)
    pairs = m.parallel_pairs()
    if pairs:
        keep, drop = pairs[0]
        merged = dict(w)
        merged[keep] = w[keep] + w[drop] + w[keep] * w[drop]
        return _js(m.delete(drop), q, merged)
    pairs = m.series_pairs()
    if pairs:
        keep, drop = pairs[0]
        denominator = q + w[keep] + w[drop]
        merged = dict(w)
        merged[keep] = w[keep] * w[drop] / denominator
        return denominator / q * _js(m.contract(drop), q, merged)
    e = m.elements[0]
    return _js(m.delete(e), q, w) + w[e] / q * _js(m.contract(e), q, w)

"""
Matroid random-cluster polynomial

    Z~(M; q, w) = sum over A subset of E of q^-r(A) * prod_{e in A} w_e
"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Optional

from .binary import BinaryMatroid
from ..arith.rational import RationalLike, to_rational
from ..errors import CapExceededError
from config.settings import get_config

logger = logging.getLogger(__name__)


def _check_q(q: Fraction) -> None:
    if q == 0:
        raise ValueError("z_tilde needs q != 0 (negative powers of q)")


def z_tilde_brute(m: BinaryMatroid, q: RationalLike, w: Mapping, cap: Optional[int] = None) -> Fraction:
    """Enumeration over all subsets of the ground set"""
    q = to_rational(q)
    _check_q(q)
    limit = cap if cap is not None else get_config().evaluation.matroid_enum_cap
    if m.size > limit:
        raise CapExceededError(f"matroid enumeration cap exceeded: {m.size} > {limit}")
    total = Fraction(0)
    for size in range(m.size + 1):
        for subset in combinations(m.elements, size):
            term = Fraction(1)
            for e in subset:
                term *= w[e]
            if term:
                total += term / q ** m.rank(subset)
    return total


def z_tilde(m: BinaryMatroid, q: RationalLike, w: Mapping) -> Fraction:
    """
    Deletion-contraction with exact loop and coloop factors:

        loop e:    (1 + w_e) Z~(M \\ e)
        coloop e:  (1 + w_e/q) Z~(M / e)
        otherwise: Z~(M \\ e) + (w_e/q) Z~(M / e)
    """
    q = to_rational(q)
    _check_q(q)
    return _z_tilde(m, q, w)


def _z_tilde(m: BinaryMatroid, q: Fraction, w: Mapping) -> Fraction:
    if m.size == 0:
        return Fraction(1)
    element = m.elements[0]
    gamma = w[element]
    if m.is_loop(element):
        return (1 + gamma) * _z_tilde(m.delete(element), q, w)
    if m.is_coloop(element):
        return (1 + gamma / q) * _z_tilde(m.contract(element), q, w)
    deleted = _z_tilde(m.delete(element), q, w)
    if gamma == 0:
        return deleted
    return deleted + gamma / q * _z_tilde(m.contract(element), q, w)


def dual_weights(w: Mapping, q: Fraction) -> dict:
    """w*_e = q / w_e"""
    if any(value == 0 for value in w.values()):
        raise ValueError("dual weights need every weight nonzero")
    return {e: q / value for e, value in w.items()}

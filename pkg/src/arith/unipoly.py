"""
Dense univariate polynomials in q with exact rational coefficients.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

from .rational import RationalLike, format_rational, to_rational
from ..errors import InterpolationError

logger = logging.getLogger(__name__)


def _strip_trailing_zeros(coefficients: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    end = len(coefficients)
    while end > 0 and coefficients[end - 1] == 0:
        end -= 1
    return tuple(coefficients[:end])


@dataclass(frozen=True)
class UniPoly:
    """Coefficients lowest degree first; the zero polynomial is the empty tuple."""
    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        normalized = _strip_trailing_zeros([to_rational(c) for c in self.coefficients])
        object.__setattr__(self, "coefficients", normalized)

    @classmethod
    def constant(cls, value: RationalLike) -> "UniPoly":
        return cls((to_rational(value),))

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "UniPoly":
        return cls((Fraction(0),) * degree + (to_rational(coefficient),))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, q: RationalLike) -> Fraction:
        return eval_poly(self, to_rational(q))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        size = max(len(self.coefficients), len(other.coefficients))
        left = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        right = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return UniPoly(tuple(a + b for a, b in zip(left, right)))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: Union["UniPoly", RationalLike]) -> "UniPoly":
        if not isinstance(other, UniPoly):
            scalar = to_rational(other)
            return UniPoly(tuple(c * scalar for c in self.coefficients))
        if self.is_zero() or other.is_zero():
            return UniPoly()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return UniPoly(tuple(product))

    __rmul__ = __mul__

    def coefficient_strings(self) -> List[str]:
        return [format_rational(c) for c in self.coefficients]

    def to_expr(self, symbol: str = "q") -> sympy.Expr:
        """Sympy expression, used only for human-readable output"""
        variable = sympy.Symbol(symbol)
        return sympy.Add(*[
            sympy.Rational(c.numerator, c.denominator) * variable ** power
            for power, c in enumerate(self.coefficients)
        ])

    def pretty(self, symbol: str = "q") -> str:
        if self.is_zero():
            return "0"
        return str(self.to_expr(symbol))

    def __str__(self) -> str:
        return self.pretty()


def eval_poly(p: UniPoly, q: Fraction) -> Fraction:
    """Horner evaluation"""
    value = Fraction(0)
    for coefficient in reversed(p.coefficients):
        value = value * q + coefficient
    return value


def interpolate(points: Iterable[Tuple[RationalLike, RationalLike]], degree_bound: int) -> UniPoly:
    """
    Recover the unique polynomial of degree <= degree_bound through the points.

    Newton divided differences over the first degree_bound+1 nodes; any further
    nodes must agree with the result.

    Args:
        points: (abscissa, value) pairs with pairwise-distinct abscissae
        degree_bound: Maximum degree of the result

    Returns:
        UniPoly with exact coefficients
    """
    nodes = [(to_rational(a), to_rational(b)) for a, b in points]
    abscissae = [a for a, _ in nodes]
    if len(set(abscissae)) != len(abscissae):
        raise InterpolationError("degenerate nodes")
    if degree_bound < 0 or len(nodes) < degree_bound + 1:
        raise InterpolationError("insufficient nodes")

    used = nodes[:degree_bound + 1]
    xs = [a for a, _ in used]
    table = [b for _, b in used]
    # In-place divided differences: table[i] becomes f[x_0..x_i]
    for level in range(1, len(xs)):
        for i in range(len(xs) - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])

    result = UniPoly.constant(table[-1])
    for i in range(len(xs) - 2, -1, -1):
        result = result * UniPoly((-xs[i], Fraction(1))) + UniPoly.constant(table[i])

    for a, b in nodes[degree_bound + 1:]:
        if eval_poly(result, a) != b:
            raise InterpolationError(
                f"nodes inconsistent with a polynomial of degree <= {degree_bound}")
    logger.debug(f"Interpolated degree {result.degree} polynomial from {len(nodes)} nodes")
    return result

"""
Points of the Tutte plane in classical coordinates, with derived q and gamma.
"""
from dataclasses import dataclass
from fractions import Fraction

from ..arith.rational import RationalLike, format_rational, to_rational


@dataclass(frozen=True)
class PlanePoint:
    """Exact (x, y); q = (x-1)(y-1) and gamma = y-1 are always derived."""
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_rational(self.x))
        object.__setattr__(self, "y", to_rational(self.y))

    @property
    def q(self) -> Fraction:
        return (self.x - 1) * (self.y - 1)

    @property
    def gamma(self) -> Fraction:
        return self.y - 1

    @classmethod
    def from_q_gamma(cls, q: RationalLike, gamma: RationalLike) -> "PlanePoint":
        """The point implemented by weight gamma at cluster weight q (gamma != 0)"""
        q, gamma = to_rational(q), to_rational(gamma)
        if gamma == 0:
            raise ValueError("gamma = 0 has no finite x-coordinate")
        return cls(q / gamma + 1, gamma + 1)

    def mirrored(self) -> "PlanePoint":
        return PlanePoint(self.y, self.x)

    def __str__(self) -> str:
        return f"({format_rational(self.x)}, {format_rational(self.y)})"

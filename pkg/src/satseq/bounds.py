"""The satiety lower bound and the dimension-counting inequality.

The lower bound is (1/(d-2)) * sqrt((d-1)(d^2-2)/2).  It is kept as an exact
square so every comparison with an integer reduces to integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, factorial, prod
from typing import Tuple


@dataclass(frozen=True)
class Zeta:
    d: int

    def __post_init__(self):
        if self.d < 3:
            raise ValueError("d must be >= 3")

    @property
    def prefactor(self) -> Fraction:
        return Fraction(1, self.d - 2)

    @property
    def radicand(self) -> Fraction:
        d = self.d
        return Fraction((d - 1) * (d * d - 2), 2)

    @property
    def square(self) -> Fraction:
        return self.prefactor ** 2 * self.radicand

    def exceeds(self, m) -> bool:
        """m < zeta, decided on squares."""
        m = Fraction(m)
        return m < 0 or m * m < self.square

    def at_most(self, m) -> bool:
        """zeta <= m."""
        return not self.exceeds(m)

    def decimal(self, digits: int = 30) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits
            sq = self.square
            return (Decimal(sq.numerator) / Decimal(sq.denominator)).sqrt()

    def __float__(self) -> float:
        return float(self.decimal(20))

    def as_dict(self) -> dict:
        sq = self.square
        return {
            "square": f"{sq.numerator}/{sq.denominator}",
            "prefactor": f"1/{self.d - 2}",
            "radicand": f"{self.radicand.numerator}/{self.radicand.denominator}",
            "decimal": str(self.decimal(20)),
        }


def counting_inequality_sides(d: int, m: int) -> Tuple[int, int]:
    """(dim W_2 (x) R_{m-2}, dim (I_C)_m)."""
    return (2 * d - 3) * comb(m + d - 2, d), comb(m + d, d) - (m * d + 1)


def check_counting_inequality(d: int, m: int) -> bool:
    if d < 4 or m < 2:
        raise ValueError("need d >= 4 and m >= 2")
    lhs, rhs = counting_inequality_sides(d, m)
    return lhs >= rhs


def quadratic_part(d: int, m) -> int:
    """(2d-3)(m-1)m - (m+d-1)(m+d)."""
    return (2 * d - 3) * (m - 1) * m - (m + d - 1) * (m + d)


def factored_inequality_lhs(d: int, m: int) -> int:
    """d! times (lhs - rhs) of the counting inequality, with the quadratic split off."""
    return quadratic_part(d, m) * prod(range(m + 1, m + d - 1)) + factorial(d) * (m * d + 1)


def quadratic_coefficients(d: int) -> Tuple[Fraction, Fraction, Fraction]:
    """(c2, c1, c0) with quadratic_part(d, m) = c2 m^2 + c1 m + c0."""
    return Fraction(2 * (d - 2)), Fraction(-4 * (d - 1)), Fraction(-d * (d - 1))


def factored_coefficients(d: int) -> Tuple[Fraction, Fraction, Fraction]:
    """Coefficients of 2(d-2)(m - r1)(m - r2), r1,2 = (d-1)/(d-2) -+ zeta.

    The roots are conjugate so r1 + r2 and r1 r2 are rational.
    """
    c = Fraction(d - 1, d - 2)
    lead = Fraction(2 * (d - 2))
    root_sum = 2 * c
    root_prod = c * c - Zeta(d).square
    return lead, -lead * root_sum, lead * root_prod

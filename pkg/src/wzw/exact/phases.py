"""
Roots of unity stored by their exponent.

A RationalPhase t represents exp(2*pi*i*t); t is a reduced fraction taken
mod 1, so equality of phases is exact equality of fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from fractions import Fraction
from typing import Iterable, Tuple

import mpmath


@total_ordering
@dataclass(frozen=True)
class RationalPhase:
    num: int
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("phase denominator is zero")
        value = Fraction(self.num, self.den) % 1
        object.__setattr__(self, 'num', value.numerator)
        object.__setattr__(self, 'den', value.denominator)

    @classmethod
    def of(cls, value) -> RationalPhase:
        """Builds a phase from an int, Fraction or 'num/den' string."""
        if isinstance(value, RationalPhase):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @classmethod
    def parse(cls, text: str) -> RationalPhase:
        num, _, den = text.strip().partition('/')
        return cls(int(num), int(den or 1))

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __add__(self, other) -> RationalPhase:
        return RationalPhase.of(self.value + RationalPhase.of(other).value)

    __radd__ = __add__

    def __neg__(self) -> RationalPhase:
        return RationalPhase(-self.num, self.den)

    def __sub__(self, other) -> RationalPhase:
        return self + (-RationalPhase.of(other))

    def __mul__(self, multiplier: int) -> RationalPhase:
        if not isinstance(multiplier, int):
            return NotImplemented
        return RationalPhase(self.num * multiplier, self.den)

    __rmul__ = __mul__

    def __lt__(self, other) -> bool:
        """Orders by the exponent in [0, 1)."""
        if not isinstance(other, RationalPhase):
            return NotImplemented
        return self.value < other.value

    def is_zero(self) -> bool:
        return self.num == 0

    def order(self) -> int:
        """Multiplicative order of the root of unity."""
        return self.den

    def to_complex(self, prec: int = 128):
        with mpmath.workprec(prec):
            return mpmath.expjpi(2 * mpmath.mpf(self.num) / self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


ZERO_PHASE = RationalPhase(0)


def phase_combine(ops: Iterable[Tuple[RationalPhase, int]]) -> RationalPhase:
    """Returns sum(m * t) mod 1 for (t, m) pairs, exactly."""
    total = Fraction(0)
    for phase, multiplier in ops:
        total += RationalPhase.of(phase).value * multiplier
    return RationalPhase.of(total)

"""
Exact twists and monodromy exponents.

t(lambda) = lambda K (lambda + 2 rho)^T / D(k), shifted by 1/2 where the
family's pivotal sign is negative. Type A carries the sign (-1)^{sum j lambda_j}
only for odd r, where it is a character of the Z_{r+1} grading; type C
carries (-1)^{sum_{j odd} lambda_j}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from utils.errors import NonQuantizedMonodromyError
from wzw.exact.phases import RationalPhase
from wzw.fusion.ring import FusionRing, element_order
from wzw.lie.algebra import AlgebraSpec, Weight, alcove, dual_weight, lie_data_for


def _raw_exponent(spec: AlgebraSpec, labels) -> Fraction:
    data = lie_data_for(spec)
    K = data.killing
    total = Fraction(0)
    for i, li in enumerate(labels):
        if li:
            for j, lj in enumerate(labels):
                total += li * K[i][j] * (lj + 2)
    return total / data.twist_denominator(spec.level)


def literal_sign(spec: AlgebraSpec, labels) -> int:
    """The pivotal sign exactly as the closed formulas state it."""
    if spec.family == 'A':
        return -1 if sum(j * x for j, x in enumerate(labels, start=1)) % 2 else 1
    if spec.family == 'C':
        return -1 if sum(x for j, x in enumerate(labels, start=1) if j % 2) % 2 else 1
    return 1


def pivotal_sign(spec: AlgebraSpec, labels) -> int:
    if spec.family == 'A' and spec.rank % 2 == 0:
        return 1
    return literal_sign(spec, labels)


def twist(spec: AlgebraSpec, weight: Weight) -> RationalPhase:
    exponent = _raw_exponent(spec, weight.labels)
    if pivotal_sign(spec, weight.labels) < 0:
        exponent += Fraction(1, 2)
    return RationalPhase.of(exponent)


def literal_sign_discrepancies(spec: AlgebraSpec) -> List[dict]:
    """
    Weights where the literal sign rule breaks t(lambda) = t(lambda*).

    Empty except for type A with even rank.
    """
    rows = []
    for weight in alcove(spec):
        partner = dual_weight(spec, weight)
        if partner <= weight:
            continue
        literal = [RationalPhase.of(_raw_exponent(spec, w.labels)
                                    + (Fraction(1, 2) if literal_sign(spec, w.labels) < 0 else 0))
                   for w in (weight, partner)]
        if literal[0] != literal[1]:
            rows.append({'weight': str(weight), 'dual': str(partner),
                         'literal_twist': str(literal[0]), 'literal_dual_twist': str(literal[1]),
                         'twist': str(twist(spec, weight))})
    return rows


@dataclass(frozen=True)
class TwistTable:
    spec: AlgebraSpec
    phases: tuple

    def __getitem__(self, i: int) -> RationalPhase:
        return self.phases[i]

    def __len__(self) -> int:
        return len(self.phases)


def twist_table(ring: FusionRing) -> TwistTable:
    return TwistTable(ring.spec, tuple(twist(ring.spec, w) for w in ring.basis))


def monodromy_exponent(ring: FusionRing, twists, g: int, x: int) -> int:
    """
    n mod M with sigma_{X,g} sigma_{g,X} = exp(2 pi i n / M).

    Uses the balancing relation on the simple object g (x) X.

    Raises:
        NonQuantizedMonodromyError: when M * (t(gX) - t(g) - t(X)) is not an
            integer.
    """
    order = element_order(ring, g)
    product = ring.fuse_single(g, x)
    difference = (twists[product] - twists[g] - twists[x]).value * order
    if difference.denominator != 1:
        raise NonQuantizedMonodromyError(
            f"monodromy of {ring.label(g)} with {ring.label(x)} is {difference}/{order}, not quantized")
    return int(difference) % order

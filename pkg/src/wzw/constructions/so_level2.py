"""
Hand presentation of C(so_2r+1, 2) and its Galois automorphisms.

Simples are 1, Z, X1, X2, Y1..Yr with m = 2r+1. Y indices fold into 1..r by
j -> min(j mod m, -j mod m), and Y_0 stands for 1 + Z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List

from utils.errors import InvalidSpecError, InvariantViolationError, NoConsistentLabelingError, NonUnitError
from wzw.autoeq.groups import RingAutomorphism
from wzw.autoeq.search import find_isomorphisms, invariant_keys, verify_isomorphism
from wzw.exact.phases import RationalPhase
from wzw.fusion.ring import FusionRing, Products, build_ring, verify_ring
from wzw.lie.algebra import AlgebraSpec
from wzw.modular.twists import twist_table


def fold(j: int, m: int) -> int:
    return min(j % m, (-j) % m)


def presentation_labels(r: int) -> List[str]:
    return ['1', 'Z', 'X1', 'X2'] + [f'Y{i}' for i in range(1, r + 1)]


def presentation_twists(r: int) -> List[RationalPhase]:
    m = 2 * r + 1
    phases = [RationalPhase(0), RationalPhase(0), RationalPhase.of(Fraction(r, 8)),
              RationalPhase.of(Fraction(r, 8) + Fraction(1, 2))]
    return phases + [RationalPhase.of(Fraction(j * j * r, m)) for j in range(1, r + 1)]


def so_level2_ring(r: int) -> FusionRing:
    """
    The fusion ring from the displayed rules.

    Raises:
        InvalidSpecError: r < 2.
        InvariantViolationError: the rules fail a ring axiom.
    """
    if r < 2:
        raise InvalidSpecError(f"the level-2 presentation needs r >= 2, got {r}", flag='--rank')
    m = 2 * r + 1
    labels = presentation_labels(r)
    one, z, x1, x2 = 0, 1, 2, 3
    y = {i: 3 + i for i in range(1, r + 1)}
    ys = list(y.values())

    def add(target: Dict[int, int], item: int, mult: int = 1):
        target[item] = target.get(item, 0) + mult

    def y_sum(j: int, target: Dict[int, int]):
        j = fold(j, m)
        if j == 0:
            add(target, one)
            add(target, z)
        else:
            add(target, y[j])

    n = len(labels)
    products: Products = {a: {} for a in range(n)}
    for a in range(n):
        products[one][a] = {a: 1}
        products[a][one] = {a: 1}

    def put(a: int, b: int, result: Dict[int, int]):
        products[a][b] = dict(sorted(result.items()))
        products[b][a] = products[a][b]

    put(z, z, {one: 1})
    put(z, x1, {x2: 1})
    put(z, x2, {x1: 1})
    for i in ys:
        put(z, i, {i: 1})
    put(x1, x1, {one: 1, **{i: 1 for i in ys}})
    put(x2, x2, {one: 1, **{i: 1 for i in ys}})
    put(x1, x2, {z: 1, **{i: 1 for i in ys}})
    for i in ys:
        put(x1, i, {x1: 1, x2: 1})
        put(x2, i, {x1: 1, x2: 1})
    for i in range(1, r + 1):
        for j in range(i, r + 1):
            result: Dict[int, int] = {}
            y_sum(i + j, result)
            y_sum(i - j, result)
            put(y[i], y[j], result)

    ring = FusionRing(tuple(labels), products, one, tuple(range(n)), None, name=f"so({m})_2 presentation")
    violations = verify_ring(ring)
    if violations:
        raise InvariantViolationError(f"{ring.name}: " + "; ".join(violations[:5]))
    return ring


@dataclass(frozen=True, eq=False)
class SoLevel2Presentation:
    r: int
    ring: FusionRing
    kw_ring: FusionRing
    label_map: tuple = field(repr=False)

    def transport(self, auto: RingAutomorphism) -> RingAutomorphism:
        """Carries an automorphism of the presentation to the Kac-Walton ring."""
        inverse = {target: source for source, target in enumerate(self.label_map)}
        perm = tuple(self.label_map[auto.perm[inverse[i]]] for i in range(self.kw_ring.size))
        return RingAutomorphism(perm, auto.name)

    def dictionary(self) -> Dict[str, str]:
        return {self.ring.label(i): self.kw_ring.label(j) for i, j in enumerate(self.label_map)}


def so_level2_presentation(r: int) -> SoLevel2Presentation:
    """
    Matches the presentation to the Kac-Walton ring of (B, r, 2) on (dimension, twist).

    Raises:
        NoConsistentLabelingError: no based-ring isomorphism respects the twists.
    """
    ring = so_level2_ring(r)
    kw_ring = build_ring(AlgebraSpec('B', r, 2))
    kw_twists = twist_table(kw_ring)
    key1 = invariant_keys(ring, presentation_twists(r))
    key2 = invariant_keys(kw_ring, list(kw_twists.phases))
    matches = find_isomorphisms(ring, kw_ring, key1, key2, first_only=True)
    if not matches:
        raise NoConsistentLabelingError(f"no labeling of so({2 * r + 1})_2 matches dimensions and twists")
    return SoLevel2Presentation(r, ring, kw_ring, matches[0])


def so_level2_galois(pres: SoLevel2Presentation, n: int) -> RingAutomorphism:
    """
    Y_i -> Y_{fold(n i)}, fixing 1, Z, X1 and X2.

    Raises:
        NonUnitError: gcd(n, 2r+1) != 1.
    """
    m = 2 * pres.r + 1
    if gcd(n, m) != 1:
        raise NonUnitError(f"{n} is not a unit mod {m}")
    perm = list(range(pres.ring.size))
    for i in range(1, pres.r + 1):
        perm[3 + i] = 3 + fold(n * i, m)
    perm = tuple(perm)
    problems = verify_isomorphism(pres.ring, pres.ring, perm)
    if problems:
        raise InvariantViolationError(f"Galois map {n} on {pres.ring.name}: {problems[0]}")
    return RingAutomorphism(perm, f"G{n % m}")


def x_swap(pres: SoLevel2Presentation) -> RingAutomorphism:
    perm = (0, 1, 3, 2) + tuple(range(4, pres.ring.size))
    return RingAutomorphism(perm, "S")


def galois_twist_row(pres: SoLevel2Presentation, n: int) -> dict:
    """Twist preservation of the Galois map against the n^2 = 1 criterion."""
    m = 2 * pres.r + 1
    twists = presentation_twists(pres.r)
    auto = so_level2_galois(pres, n)
    preserving = all(twists[auto.perm[i]] == twists[i] for i in range(pres.ring.size))
    return {'n': n % m, 'twist_preserving': preserving, 'square_is_one': (n * n) % m == 1,
            'square_is_minus_one': (n * n) % m == m - 1}

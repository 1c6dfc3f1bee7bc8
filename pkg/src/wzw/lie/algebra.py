"""
Static Lie data for the families A_r, B_r, C_r and G2, and level-k alcoves.

Conventions:
- Row i of the Cartan matrix lists the Dynkin labels of the simple root
  alpha_i, i.e. cartan[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
- Long roots have squared length 2.
- B_r has alpha_r short, C_r has alpha_r long, G2 has alpha_1 short.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import List, Tuple

import numpy as np
from sympy import Matrix, Rational

from utils.errors import InvalidSpecError

FAMILIES = ('A', 'B', 'C', 'G2')


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    rank: int
    level: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidSpecError(f"Unknown family '{self.family}'", flag='--family')
        if self.family == 'G2' and self.rank != 2:
            raise InvalidSpecError("G2 has rank 2", flag='--rank')
        if self.rank < 1:
            raise InvalidSpecError(f"Rank must be positive, got {self.rank}", flag='--rank')
        if self.level < 1:
            raise InvalidSpecError(f"Level must be positive, got {self.level}", flag='--level')

    @property
    def algebra(self) -> Tuple[str, int]:
        """The (family, rank) key; everything level independent hangs off it."""
        return (self.family, self.rank)

    def __str__(self) -> str:
        return f"({self.family}, {self.rank}, {self.level})"


@dataclass(frozen=True, order=True)
class Weight:
    labels: Tuple[int, ...]

    @classmethod
    def of(cls, *labels) -> Weight:
        if len(labels) == 1 and not isinstance(labels[0], int):
            labels = tuple(labels[0])
        return cls(tuple(int(x) for x in labels))

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int, multiple: int = 1) -> Weight:
        """multiple * Lambda_i with 1-based i."""
        labels = [0] * rank
        labels[i - 1] = multiple
        return cls(tuple(labels))

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.labels, other.labels)))

    def is_zero(self) -> bool:
        return not any(self.labels)

    def pretty(self) -> str:
        """Lambda notation, e.g. 2Λ1+Λ3."""
        parts = []
        for i, x in enumerate(self.labels, start=1):
            if x:
                parts.append(f"{'' if x == 1 else x}Λ{i}")
        return "+".join(parts) or "0"

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.labels) + "]"


@dataclass(frozen=True)
class LieData:
    family: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    colabels: Tuple[int, ...]
    killing: Tuple[Tuple[Fraction, ...], ...]
    killing_scale: int
    root_lengths: Tuple[Fraction, ...]

    @property
    def dual_coxeter(self) -> int:
        return 1 + sum(self.colabels)

    def twist_denominator(self, level: int) -> int:
        """D(k) of the twist formula."""
        r, k = self.rank, level
        if self.family == 'A':
            return 2 * (1 + k + r)
        if self.family == 'B':
            return 4 * (2 * r - 1 + k)
        if self.family == 'C':
            return 4 * (r + k + 1)
        return 6 * (4 + k)

    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64)


def _cartan(family: str, r: int) -> List[List[int]]:
    if family == 'G2':
        return [[2, -1], [-3, 2]]
    cartan = [[0] * r for _ in range(r)]
    for i in range(r):
        cartan[i][i] = 2
        if i + 1 < r:
            cartan[i][i + 1] = -1
            cartan[i + 1][i] = -1
    if r >= 2:
        if family == 'B':
            cartan[r - 2][r - 1] = -2
        elif family == 'C':
            cartan[r - 1][r - 2] = -2
    return cartan


def _colabels(family: str, r: int) -> Tuple[int, ...]:
    if family in ('A', 'C'):
        return (1,) * r
    if family == 'B':
        if r == 1:
            return (1,)
        return tuple(1 if j in (1, r) else 2 for j in range(1, r + 1))
    return (1, 2)


def _killing(family: str, r: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """The Killing matrices in the closed forms of the twist formulas."""
    if family == 'G2':
        return ((Fraction(2), Fraction(3)), (Fraction(3), Fraction(6)))
    rows = []
    for i in range(1, r + 1):
        row = []
        for j in range(1, r + 1):
            if family == 'A':
                row.append(Fraction(min(i, j)) - Fraction(i * j, r + 1))
            elif family == 'B':
                row.append(Fraction(2 * min(i, j), 2 ** ((i == r) + (j == r))))
            else:
                row.append(Fraction(min(i, j)))
        rows.append(tuple(row))
    return tuple(rows)


def _root_lengths(family: str, r: int) -> Tuple[Fraction, ...]:
    """Squared lengths of the simple roots, long roots normalized to 2."""
    if family == 'A':
        return (Fraction(2),) * r
    if family == 'B':
        if r == 1:
            return (Fraction(1),)
        return (Fraction(2),) * (r - 1) + (Fraction(1),)
    if family == 'C':
        if r == 1:
            return (Fraction(2),)
        return (Fraction(1),) * (r - 1) + (Fraction(2),)
    return (Fraction(2, 3), Fraction(2))


KILLING_SCALE = {'A': 1, 'B': 2, 'C': 2, 'G2': 3}


@lru_cache(maxsize=None)
def lie_data(family: str, rank: int) -> LieData:
    AlgebraSpec(family, rank, 1)
    return LieData(
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in _cartan(family, rank)),
        colabels=_colabels(family, rank),
        killing=_killing(family, rank),
        killing_scale=KILLING_SCALE[family],
        root_lengths=_root_lengths(family, rank),
    )


def lie_data_for(spec: AlgebraSpec) -> LieData:
    return lie_data(spec.family, spec.rank)


@lru_cache(maxsize=None)
def quadratic_form(family: str, rank: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """
    Inner products (Lambda_i, Lambda_j) of the fundamental weights.

    Computed as A^{-1} diag(|alpha_j|^2 / 2) from the Cartan matrix, so it is
    an independent derivation of the Killing matrix up to the family scale.
    """
    data = lie_data(family, rank)
    inverse = Matrix(data.cartan).inv()
    rows = []
    for i in range(rank):
        row = []
        for j in range(rank):
            entry = Rational(inverse[i, j]) * Rational(data.root_lengths[j].numerator,
                                                       2 * data.root_lengths[j].denominator)
            row.append(Fraction(int(entry.p), int(entry.q)))
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def inverse_cartan(family: str, rank: int) -> Tuple[Tuple[Fraction, ...], ...]:
    inverse = Matrix(lie_data(family, rank).cartan).inv()
    return tuple(tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(rank))
                 for i in range(rank))


def inner_product(family: str, rank: int, x, y) -> Fraction:
    """(x, y) for weights given by Dynkin labels."""
    form = quadratic_form(family, rank)
    total = Fraction(0)
    for i, xi in enumerate(x):
        if xi:
            row = form[i]
            for j, yj in enumerate(y):
                if yj:
                    total += xi * row[j] * yj
    return total


def weight_level(spec_or_data, labels) -> int:
    colabels = spec_or_data.colabels if isinstance(spec_or_data, LieData) else lie_data_for(spec_or_data).colabels
    return sum(a * x for a, x in zip(colabels, labels))


@lru_cache(maxsize=None)
def _alcove(family: str, rank: int, level: int) -> Tuple[Weight, ...]:
    colabels = lie_data(family, rank).colabels
    ranges = [range(level // a + 1) for a in colabels]
    weights = [Weight(labels) for labels in product(*ranges)
               if sum(a * x for a, x in zip(colabels, labels)) <= level]
    return tuple(sorted(weights))


def alcove(spec: AlgebraSpec) -> List[Weight]:
    """All dominant weights with sum(lambda_j a_j) <= k, lexicographic."""
    return list(_alcove(spec.family, spec.rank, spec.level))


def rho(rank: int) -> np.ndarray:
    return np.ones(rank, dtype=np.int64)


def dual_weight(spec: AlgebraSpec, weight: Weight) -> Weight:
    """lambda* = -w0(lambda); only type A is not self-dual."""
    if spec.family == 'A':
        return Weight(tuple(reversed(weight.labels)))
    return weight


def weyl_group_order(family: str, rank: int) -> int:
    from math import factorial
    if family == 'A':
        return factorial(rank + 1)
    if family in ('B', 'C'):
        return 2 ** rank * factorial(rank)
    return 12

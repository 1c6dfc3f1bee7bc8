"""
Weight multiplicities of irreducible highest-weight modules.

Dominant multiplicities come from Freudenthal's recursion; the full weight
system is assembled from Weyl orbits. Results are memoized per algebra and
highest weight, independent of the level.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Dict, Tuple

import numpy as np

from wzw.lie.algebra import inner_product, lie_data
from wzw.lie.weyl import dominant_representative, orbit, positive_roots, root_coefficients


def _depth(family: str, rank: int, highest, labels) -> Fraction:
    diff = [h - x for h, x in zip(highest, labels)]
    return sum(root_coefficients(family, rank, diff))


@lru_cache(maxsize=4096)
def dominant_multiplicities(family: str, rank: int, highest: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
    """
    Multiplicities of the dominant weights of L(highest).

    The dominant weights are found by subtracting positive roots from the
    highest weight and keeping dominant results; they are processed by
    increasing depth so every term of the recursion is already known.
    """
    cartan = lie_data(family, rank).cartan_array()
    roots = positive_roots(family, rank)
    highest = tuple(highest)

    dominant = {highest}
    queue = deque([highest])
    while queue:
        current = queue.popleft()
        for root in roots:
            candidate = tuple(c - a for c, a in zip(current, root))
            if min(candidate) >= 0 and candidate not in dominant:
                dominant.add(candidate)
                queue.append(candidate)

    shifted = lambda labels: tuple(x + 1 for x in labels)
    norm_top = inner_product(family, rank, shifted(highest), shifted(highest))
    mults = {highest: 1}
    for mu in sorted(dominant - {highest}, key=lambda w: (_depth(family, rank, highest, w), w)):
        total = Fraction(0)
        for root in roots:
            j = 1
            while True:
                shifted_weight = tuple(m + j * a for m, a in zip(mu, root))
                rep, _ = dominant_representative(shifted_weight, cartan)
                m = mults.get(rep, 0)
                if m == 0:
                    break
                total += m * inner_product(family, rank, shifted_weight, root)
                j += 1
        denominator = norm_top - inner_product(family, rank, shifted(mu), shifted(mu))
        value = 2 * total / denominator
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"non-integral multiplicity {value} at {mu} in L({highest})")
        if value:
            mults[mu] = int(value)
    return mults


@lru_cache(maxsize=2048)
def weight_system(family: str, rank: int, highest: Tuple[int, ...]) -> Tuple[np.ndarray, np.ndarray]:
    """
    All weights of L(highest) with multiplicities.

    Returns:
        (weights, multiplicities): an (n, rank) int array and an (n,) int array.
    """
    cartan = lie_data(family, rank).cartan_array()
    weights, mults = [], []
    for mu, m in sorted(dominant_multiplicities(family, rank, tuple(highest)).items()):
        for image in orbit(mu, cartan):
            weights.append(image)
            mults.append(m)
    return np.array(weights, dtype=np.int64).reshape(-1, rank), np.array(mults, dtype=np.int64)


def weyl_dimension(family: str, rank: int, highest) -> int:
    """Weyl dimension formula, used to cross-check the weight system."""
    shifted = [x + 1 for x in highest]
    rho = [1] * rank
    value = prod(inner_product(family, rank, shifted, root) / inner_product(family, rank, rho, root)
                 for root in positive_roots(family, rank))
    return int(value)

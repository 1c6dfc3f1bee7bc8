"""
Finite Weyl group, root system and reflections in Dynkin coordinates.

Weights are integer row vectors of Dynkin labels. The simple reflection s_i
sends lambda to lambda - lambda_i * alpha_i, i.e. right multiplication by
I - e_i^T alpha_i.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from utils.errors import WeylBoundError
from utils.settings import get_settings
from wzw.lie.algebra import AlgebraSpec, inverse_cartan, lie_data, weyl_group_order


@dataclass(frozen=True)
class WeylElement:
    matrix: np.ndarray
    sign: int
    length: int

    def apply(self, labels) -> np.ndarray:
        return np.asarray(labels, dtype=np.int64) @ self.matrix


@lru_cache(maxsize=None)
def simple_reflections(family: str, rank: int) -> Tuple[np.ndarray, ...]:
    cartan = lie_data(family, rank).cartan_array()
    mats = []
    for i in range(rank):
        m = np.eye(rank, dtype=np.int64)
        m[i, :] -= cartan[i]
        mats.append(m)
    return tuple(mats)


def weyl_group(spec: AlgebraSpec, bound: int = None) -> List[WeylElement]:
    """
    All elements of the Weyl group with their determinant signs.

    Args:
        spec: Algebra spec; the level is ignored.
        bound: Maximum allowed group order; defaults to Settings.max_weyl.

    Raises:
        WeylBoundError: when |W| exceeds the bound.
    """
    bound = bound or get_settings().max_weyl
    expected = weyl_group_order(spec.family, spec.rank)
    if expected > bound:
        raise WeylBoundError(f"|W| = {expected} for {spec.family}{spec.rank} exceeds bound {bound}")
    return list(_weyl_group(spec.family, spec.rank))


@lru_cache(maxsize=16)
def _weyl_group(family: str, rank: int) -> Tuple[WeylElement, ...]:
    gens = simple_reflections(family, rank)
    identity = np.eye(rank, dtype=np.int64)
    seen = {identity.tobytes(): WeylElement(identity, 1, 0)}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        element = seen[current.tobytes()]
        for s in gens:
            nxt = current @ s
            key = nxt.tobytes()
            if key not in seen:
                seen[key] = WeylElement(nxt, -element.sign, element.length + 1)
                queue.append(nxt)
    return tuple(sorted(seen.values(), key=lambda w: (w.length, tuple(w.matrix.ravel()))))


def reflect(labels: np.ndarray, i: int, cartan: np.ndarray) -> np.ndarray:
    return labels - labels[i] * cartan[i]


def dominant_representative(labels, cartan: np.ndarray) -> Tuple[Tuple[int, ...], int]:
    """Reflects into the dominant chamber; returns (labels, parity of steps)."""
    x = np.array(labels, dtype=np.int64)
    steps = 0
    while True:
        negative = np.nonzero(x < 0)[0]
        if negative.size == 0:
            return tuple(int(v) for v in x), steps
        x = reflect(x, int(negative[0]), cartan)
        steps += 1


def orbit(labels, cartan: np.ndarray) -> List[Tuple[int, ...]]:
    """Weyl orbit of a dominant weight, reflecting only on positive labels."""
    start = tuple(int(v) for v in labels)
    seen = {start}
    queue = deque([start])
    while queue:
        current = np.array(queue.popleft(), dtype=np.int64)
        for i in np.nonzero(current > 0)[0]:
            image = tuple(int(v) for v in reflect(current, int(i), cartan))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen)


@lru_cache(maxsize=None)
def positive_roots(family: str, rank: int) -> Tuple[Tuple[int, ...], ...]:
    """Positive roots in Dynkin coordinates, sorted by height then labels."""
    cartan = lie_data(family, rank).cartan_array()
    roots = set()
    for i in range(rank):
        start = tuple(int(v) for v in cartan[i])
        roots.add(start)
        queue = deque([start])
        while queue:
            current = np.array(queue.popleft(), dtype=np.int64)
            for j in range(rank):
                image = tuple(int(v) for v in reflect(current, j, cartan))
                if image not in roots:
                    roots.add(image)
                    queue.append(image)
    positive = [(sum(c), root) for root in roots
                for c in [root_coefficients(family, rank, root)] if all(x >= 0 for x in c)]
    return tuple(root for _, root in sorted(positive))


def root_coefficients(family: str, rank: int, labels) -> Tuple:
    """Expansion of a weight in the simple-root basis (labels times A^{-1})."""
    inverse = inverse_cartan(family, rank)
    return tuple(sum(labels[i] * inverse[i][j] for i in range(rank)) for j in range(rank))


def highest_root(family: str, rank: int) -> Tuple[int, ...]:
    return positive_roots(family, rank)[-1]

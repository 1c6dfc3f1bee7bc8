"""
Level-k fusion by the Kac-Walton algorithm.

The weights of one factor (with multiplicities) are shifted by the other
highest weight plus rho and reflected into the open fundamental alcove of the
shifted affine Weyl group; points on a wall cancel.
"""

from typing import Dict

import numpy as np

from utils.errors import InvariantViolationError
from wzw.lie.algebra import AlgebraSpec, Weight, lie_data_for
from wzw.lie.characters import weight_system, weyl_dimension
from wzw.lie.weyl import highest_root

MAX_REFLECTION_ROUNDS = 100_000


def affine_reflect(spec: AlgebraSpec, shifted: np.ndarray):
    """
    Reflects rho-shifted weights into the open alcove.

    Args:
        spec: The algebra and level.
        shifted: (n, rank) integer array of weights plus rho.

    Returns:
        (points, signs, alive): reflected points, the accumulated signs and a
        mask of the rows that did not land on a wall.
    """
    data = lie_data_for(spec)
    cartan = data.cartan_array()
    colabels = np.array(data.colabels, dtype=np.int64)
    theta = np.array(highest_root(spec.family, spec.rank), dtype=np.int64)
    kappa = spec.level + data.dual_coxeter

    x = np.array(shifted, dtype=np.int64, copy=True)
    signs = np.ones(len(x), dtype=np.int64)
    alive = np.ones(len(x), dtype=bool)

    for _ in range(MAX_REFLECTION_ROUNDS):
        level = x @ colabels
        alive &= ~((x == 0).any(axis=1) | (level == kappa))
        negative = alive & (x < 0).any(axis=1)
        above = alive & ~negative & (level > kappa)
        if not negative.any() and not above.any():
            return x, signs, alive

        if negative.any():
            rows = x[negative]
            first = np.argmax(rows < 0, axis=1)
            rows -= rows[np.arange(len(rows)), first][:, None] * cartan[first]
            x[negative] = rows
            signs[negative] *= -1
        if above.any():
            x[above] -= (level[above] - kappa)[:, None] * theta
            signs[above] *= -1

    raise InvariantViolationError(f"affine reflection did not terminate for {spec}")


def fuse(spec: AlgebraSpec, lam: Weight, mu: Weight) -> Dict[Weight, int]:
    """
    Decomposes lam (x) mu at level k.

    The factor with the smaller classical dimension supplies the weights.

    Returns:
        Mapping from alcove weights to positive multiplicities, sorted.
    """
    if weyl_dimension(spec.family, spec.rank, lam.labels) > weyl_dimension(spec.family, spec.rank, mu.labels):
        lam, mu = mu, lam
    weights, mults = weight_system(spec.family, spec.rank, lam.labels)
    shifted = weights + np.array(mu.labels, dtype=np.int64) + 1
    points, signs, alive = affine_reflect(spec, shifted)
    if not alive.any():
        return {}

    kept = points[alive] - 1
    contributions = (mults * signs)[alive]
    unique, inverse = np.unique(kept, axis=0, return_inverse=True)
    totals = np.zeros(len(unique), dtype=np.int64)
    np.add.at(totals, inverse.reshape(-1), contributions)

    result = {}
    for labels, total in zip(unique, totals):
        if total < 0:
            raise InvariantViolationError(f"negative fusion multiplicity {total} in {lam} x {mu} at {spec}")
        if total:
            result[Weight(tuple(int(v) for v in labels))] = int(total)
    return dict(sorted(result.items()))

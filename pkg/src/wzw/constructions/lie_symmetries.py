"""
Auto-equivalences coming from classical Lie symmetries: the Dynkin flip of
A_r and the Young-diagram transpose of sp_2r at level r.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from utils.errors import AutomorphismNotFoundError, InvalidSpecError, InvariantViolationError
from wzw.autoeq.groups import RingAutomorphism
from wzw.autoeq.search import enumerate_fusion_autos, verify_isomorphism
from wzw.fusion.ring import FusionRing
from wzw.lie.algebra import Weight


def _from_weight_map(ring: FusionRing, image, name: str) -> RingAutomorphism:
    perm = tuple(ring.index_of(image(w)) for w in ring.basis)
    problems = verify_isomorphism(ring, ring, perm)
    if problems:
        raise InvariantViolationError(f"{name} on {ring.name}: {problems[0]}")
    return RingAutomorphism(perm, name)


def charge_conjugation(ring: FusionRing) -> RingAutomorphism:
    """lambda_i -> lambda_{r+1-i}; the identity for r = 1."""
    if ring.spec is None or ring.spec.family != 'A':
        raise InvalidSpecError("charge conjugation is the type A Dynkin flip", flag='--family')
    return _from_weight_map(ring, lambda w: Weight(tuple(reversed(w.labels))), "C")


def _partition(labels: Tuple[int, ...]) -> List[int]:
    """Row lengths l_j = sum_{i >= j} lambda_i."""
    return [sum(labels[j:]) for j in range(len(labels))]


def _labels(rows: List[int]) -> Tuple[int, ...]:
    padded = list(rows) + [0]
    return tuple(padded[i] - padded[i + 1] for i in range(len(rows)))


def transpose_weight(weight: Weight, r: int) -> Optional[Weight]:
    """Transpose of the Young diagram of lambda inside the r x r box."""
    rows = _partition(weight.labels)
    if rows and rows[0] > r:
        return None
    columns = [sum(1 for length in rows if length >= i) for i in range(1, r + 1)]
    return Weight(_labels(columns))


def sp_levelrank_transpose(ring: FusionRing) -> RingAutomorphism:
    """
    The order-2 automorphism of C(sp_2r, r) fixing Lambda_1.

    Tries the Young-diagram transpose first; when that is not an automorphism,
    searches for a non-identity automorphism fixing Lambda_1. The path taken
    is recorded in the name.

    Raises:
        AutomorphismNotFoundError: neither path produces one.
    """
    spec = ring.spec
    if spec is None or spec.family != 'C' or spec.level != spec.rank or spec.rank < 2:
        raise InvalidSpecError(f"level-rank transpose needs (C, r, r) with r >= 2, got {ring.name}",
                               flag='--level')
    r = spec.rank
    images = [transpose_weight(w, r) for w in ring.basis]
    if all(image is not None and image in ring.index for image in images):
        perm = tuple(ring.index[image] for image in images)
        if not verify_isomorphism(ring, ring, perm) and any(i != p for i, p in enumerate(perm)):
            return RingAutomorphism(perm, "T")

    lam1 = ring.index_of(Weight.fundamental(r, 1))
    for perm in enumerate_fusion_autos(ring).elements:
        if perm[lam1] == lam1 and any(i != p for i, p in enumerate(perm)):
            return RingAutomorphism(perm, "T(search)")
    raise AutomorphismNotFoundError(f"no non-identity automorphism of {ring.name} fixes Λ1")

"""
Algebra objects of C(g2, 4) attached to automorphisms.

A_F = sum_X X (x) F^{-1}(X*) is decomposed into five simple algebras drawn
with repetition from the nine candidates in g2_candidates.json.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, List, Tuple

from utils.errors import InvalidSpecError
from wzw.autoeq.groups import RingAutomorphism, inverse
from wzw.autoeq.search import automorphism_from_map
from wzw.fusion.ring import FusionRing
from wzw.lie.algebra import Weight

CANDIDATES_FILE = os.path.join(os.path.dirname(__file__), 'g2_candidates.json')


@dataclass(frozen=True)
class AlgebraCandidate:
    name: str
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        if any(m < 0 for m in self.multiplicities) or self.multiplicities[0] < 1:
            raise ValueError(f"candidate {self.name} must contain the unit and have nonnegative entries")


def load_candidates(path: str = CANDIDATES_FILE) -> dict:
    with open(path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    data['candidates'] = [AlgebraCandidate(name, tuple(row)) for name, row in data['candidates'].items()]
    return data


def _check_ring(ring: FusionRing):
    spec = ring.spec
    if spec is None or spec.family != 'G2' or spec.level != 4:
        raise InvalidSpecError(f"expected C(g2, 4), got {ring.name}", flag='--level')


def candidate_basis(ring: FusionRing, data: dict = None) -> List[int]:
    """Ring indices in the order of the candidate table."""
    data = data or load_candidates()
    return [ring.index_of(Weight.of(json.loads(label))) for label in data['basis']]


def g2_exceptional_automorphism(ring: FusionRing) -> RingAutomorphism:
    """Lambda1 <-> 2 Lambda2 and Lambda2 <-> 4 Lambda1, fixing the rest."""
    _check_ring(ring)
    data = load_candidates()
    mapping = {Weight.of(json.loads(a)): Weight.of(json.loads(b)) for a, b in data['exceptional'].items()}
    return automorphism_from_map(ring, mapping, "E")


def g2_full_algebra(ring: FusionRing, auto: RingAutomorphism) -> Tuple[int, ...]:
    """Multiplicities of A_F[Y] = sum_X N_{X, F^{-1}(X*)}^Y in candidate order."""
    _check_ring(ring)
    back = inverse(auto.perm)
    totals: Dict[int, int] = {}
    for x in range(ring.size):
        for y, m in ring.product(x, back[ring.dual[x]]).items():
            totals[y] = totals.get(y, 0) + m
    return tuple(totals.get(i, 0) for i in candidate_basis(ring))


def g2_decompose(target, candidates: List[AlgebraCandidate] = None, components: int = None) -> List[Tuple[str, ...]]:
    """
    All multisets of `components` candidates summing to target componentwise.

    Returns:
        Matching multisets as sorted name tuples, in enumeration order.
    """
    data = None
    if candidates is None or components is None:
        data = load_candidates()
    candidates = candidates or data['candidates']
    components = components or data['components']
    target = tuple(target)
    matches = []
    for choice in combinations_with_replacement(range(len(candidates)), components):
        total = [0] * len(target)
        for index in choice:
            for i, m in enumerate(candidates[index].multiplicities):
                total[i] += m
        if tuple(total) == target:
            matches.append(tuple(candidates[index].name for index in choice))
    return matches


def search_space_size(candidates: int = 9, components: int = 5) -> int:
    return sum(1 for _ in combinations_with_replacement(range(candidates), components))

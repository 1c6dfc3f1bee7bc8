"""
Backtracking search for based-ring isomorphisms.

Domains start from invariant keys (Frobenius-Perron dimension, self-duality,
row mass and a one-step refinement) and are narrowed by forward checking:
once a -> b and x -> y are both fixed, every c in a (x) x must land in
b (x) y with the same multiplicity. Every leaf is verified in full before it
is reported.
"""

from __future__ import annotations

from typing import Dict, Hashable, List, Optional, Sequence

from utils.errors import InvariantViolationError, SearchBoundError
from utils.settings import get_settings
from wzw.autoeq.groups import Perm, PermGroup, RingAutomorphism, identity
from wzw.fusion.ring import FusionRing

QDIM_DIGITS = 8
QDIM_TOLERANCE = 1e-9


def invariant_keys(ring: FusionRing, extra: Optional[Sequence[Hashable]] = None) -> List[tuple]:
    """
    Per-element keys preserved by every based-ring isomorphism.

    Args:
        ring: The ring.
        extra: Optional additional per-element invariants (e.g. twists when
            matching a braided presentation).
    """
    dims = ring.fp_dims
    P = ring.products
    base = []
    for a in range(ring.size):
        mass = sum(sum(row.values()) for row in P[a].values())
        base.append((round(float(dims[a]), QDIM_DIGITS), ring.dual[a] == a, mass,
                     len(P[a][ring.dual[a]]), extra[a] if extra is not None else None))
    return [(base[a], tuple(sorted((base[c], m) for c, m in P[a][a].items())))
            for a in range(ring.size)]


def verify_isomorphism(ring1: FusionRing, ring2: FusionRing, perm: Perm) -> List[str]:
    """Checks unit, duals and every structure constant under perm."""
    problems = []
    if sorted(perm) != list(range(ring2.size)) or ring1.size != ring2.size:
        return ["not a bijection"]
    if perm[ring1.unit] != ring2.unit:
        problems.append("unit not fixed")
    for a in range(ring1.size):
        if perm[ring1.dual[a]] != ring2.dual[perm[a]]:
            problems.append(f"dual of {ring1.label(a)} not preserved")
        for b in range(ring1.size):
            image = {perm[c]: m for c, m in ring1.products[a][b].items()}
            if image != ring2.products[perm[a]][perm[b]]:
                problems.append(f"N at ({ring1.label(a)}, {ring1.label(b)}) not preserved")
                return problems
    return problems


def verify_automorphism(ring: FusionRing, perm: Perm) -> bool:
    return not verify_isomorphism(ring, ring, tuple(perm))


def _restrict(domains: List[set], c: int, allowed: set) -> bool:
    narrowed = domains[c] & allowed
    if not narrowed:
        return False
    domains[c] = narrowed
    return True


def find_isomorphisms(ring1: FusionRing, ring2: FusionRing,
                      key1: Optional[Sequence[Hashable]] = None,
                      key2: Optional[Sequence[Hashable]] = None,
                      max_nodes: int = None,
                      first_only: bool = False) -> List[Perm]:
    """
    All based-ring isomorphisms ring1 -> ring2 respecting the given keys.

    Returns:
        Sorted list of permutations p with p[a] the image of a.

    Raises:
        SearchBoundError: when more than max_nodes search nodes are visited.
    """
    n = ring1.size
    if n != ring2.size:
        return []
    max_nodes = max_nodes or get_settings().max_search_nodes
    key1 = list(key1) if key1 is not None else invariant_keys(ring1)
    key2 = list(key2) if key2 is not None else invariant_keys(ring2)

    by_key: Dict[Hashable, set] = {}
    for b, key in enumerate(key2):
        by_key.setdefault(key, set()).add(b)
    domains = [set(by_key.get(key, ())) for key in key1]
    domains[ring1.unit] &= {ring2.unit}
    if any(not d for d in domains):
        return []

    P1, P2 = ring1.products, ring2.products
    results: List[Perm] = []
    nodes = 0

    def assign(assignment: Dict[int, int], domains: List[set], a: int, b: int) -> bool:
        pending = [(a, b)]
        while pending:
            a, b = pending.pop()
            if a in assignment:
                if assignment[a] != b:
                    return False
                continue
            if b in assignment.values() or b not in domains[a]:
                return False
            assignment[a] = b
            domains[a] = {b}
            if not _restrict(domains, ring1.dual[a], {ring2.dual[b]}):
                return False
            for x, y in list(assignment.items()):
                left, right = P1[a][x], P2[b][y]
                if sorted(left.values()) != sorted(right.values()):
                    return False
                for c, m in left.items():
                    if not _restrict(domains, c, {d for d, md in right.items() if md == m}):
                        return False
            for c in range(n):
                if c not in assignment and len(domains[c]) == 1:
                    pending.append((c, next(iter(domains[c]))))
        return True

    def search(assignment: Dict[int, int], domains: List[set]):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise SearchBoundError(f"isomorphism search exceeded {max_nodes} nodes ({ring1.name} -> {ring2.name})")
        if len(assignment) == n:
            perm = tuple(assignment[a] for a in range(n))
            if not verify_isomorphism(ring1, ring2, perm):
                results.append(perm)
            return
        free = [a for a in range(n) if a not in assignment]
        a = min(free, key=lambda x: (len(domains[x]), x))
        for b in sorted(domains[a]):
            trial_assignment = dict(assignment)
            trial_domains = list(domains)
            if assign(trial_assignment, trial_domains, a, b):
                search(trial_assignment, trial_domains)
                if first_only and results:
                    return

    start: Dict[int, int] = {}
    if assign(start, domains, ring1.unit, ring2.unit):
        search(start, domains)
    return sorted(results)


def enumerate_fusion_autos(ring: FusionRing, max_nodes: int = None) -> PermGroup:
    """
    The full group of fusion-ring automorphisms, as explicit permutations.

    Raises:
        SearchBoundError: search exceeded the node bound.
        InvariantViolationError: an automorphism changes a quantum dimension.
    """
    keys = invariant_keys(ring)
    perms = find_isomorphisms(ring, ring, keys, keys, max_nodes=max_nodes)
    dims = ring.fp_dims
    for perm in perms:
        if any(abs(dims[perm[a]] - dims[a]) > QDIM_TOLERANCE for a in range(ring.size)):
            raise InvariantViolationError(f"automorphism {perm} of {ring.name} changes a dimension")
    if not perms:
        perms = [identity(ring.size)]
    return PermGroup.from_elements(perms, ring.size)


def automorphism_from_map(ring: FusionRing, mapping: Dict, name: str = "") -> RingAutomorphism:
    """
    Builds a RingAutomorphism from a partial label map; unlisted elements are fixed.

    Raises:
        InvariantViolationError: the completed permutation is not an automorphism.
    """
    perm = list(range(ring.size))
    for source, target in mapping.items():
        perm[ring.index_of(source)] = ring.index_of(target)
    perm = tuple(perm)
    problems = verify_isomorphism(ring, ring, perm)
    if problems:
        raise InvariantViolationError(f"{name or 'map'} on {ring.name}: {problems[0]}")
    return RingAutomorphism(perm, name)

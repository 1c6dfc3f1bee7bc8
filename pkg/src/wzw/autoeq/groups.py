"""
Explicit permutation groups of basis indices.

Permutations are tuples p with p[i] the image of i; composition
compose(p, q) applies q first. sympy's PermutationGroup supplies closure and
orders; everything downstream works on the explicit element list.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from sympy import factorint
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors

Perm = Tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, image in enumerate(p):
        out[image] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(n))


def cycles(p: Perm, label: Callable[[int], str] = str) -> str:
    """Cycle notation, fixed points omitted; '()' for the identity."""
    seen, parts = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle, i = [], start
        while i not in seen:
            seen.add(i)
            cycle.append(label(i))
            i = p[i]
        parts.append("(" + " ".join(cycle) + ")")
    return "".join(parts) or "()"


@dataclass(frozen=True)
class RingAutomorphism:
    perm: Perm
    name: str = ""

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.perm))

    def compose(self, other: RingAutomorphism) -> RingAutomorphism:
        return RingAutomorphism(compose(self.perm, other.perm))

    def inverse(self) -> RingAutomorphism:
        return RingAutomorphism(inverse(self.perm), f"{self.name}^-1" if self.name else "")


def _sympy_group(generators: Sequence[Perm], degree: int) -> PermutationGroup:
    gens = [Permutation(list(g), size=degree) for g in generators] or [Permutation(list(range(degree)), size=degree)]
    return PermutationGroup(gens)


@dataclass(frozen=True)
class PermGroup:
    degree: int
    elements: Tuple[Perm, ...]
    generators: Tuple[Perm, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        if isinstance(p, RingAutomorphism):
            p = p.perm
        return tuple(p) in self._element_set

    @property
    def _element_set(self) -> frozenset:
        cached = self.__dict__.get('_set_cache')
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, '_set_cache', cached)
        return cached

    @classmethod
    def from_generators(cls, generators: Iterable[Perm], degree: int, max_order: int = 10 ** 6) -> PermGroup:
        generators = [tuple(g) for g in generators]
        group = _sympy_group(generators, degree)
        if group.order() > max_order:
            raise ValueError(f"group of order {group.order()} exceeds {max_order}")
        elements = sorted(tuple(p.array_form) for p in group.generate())
        return cls(degree, tuple(elements), tuple(_greedy_generators(elements, degree)))

    @classmethod
    def from_elements(cls, elements: Iterable[Perm], degree: int) -> PermGroup:
        """Wraps an explicit element list, checking closure."""
        elements = sorted(set(tuple(e) for e in elements))
        members = set(elements)
        if identity(degree) not in members:
            raise ValueError("element list lacks the identity")
        for p in elements:
            if inverse(p) not in members:
                raise ValueError("element list is not closed under inverses")
            for q in elements:
                if compose(p, q) not in members:
                    raise ValueError("element list is not closed under composition")
        return cls(degree, tuple(elements), tuple(_greedy_generators(elements, degree)))

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls(degree, (identity(degree),), ())

    def subgroup(self, predicate: Callable[[Perm], bool]) -> PermGroup:
        kept = [p for p in self.elements if predicate(p)]
        return PermGroup.from_elements(kept, self.degree)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(p in other for p in self.elements)

    def sympy(self) -> PermutationGroup:
        return _sympy_group(self.generators, self.degree)


def _greedy_generators(elements: Sequence[Perm], degree: int) -> List[Perm]:
    """Adds elements in order until they generate everything."""
    target = len(elements)
    chosen: List[Perm] = []
    generated = {identity(degree)}
    for p in elements:
        if len(generated) == target:
            break
        if p in generated:
            continue
        chosen.append(p)
        generated = {tuple(q.array_form) for q in _sympy_group(chosen, degree).generate()}
    return chosen


def invariant_factors_from_orders(orders: Sequence[int]) -> List[int]:
    """
    Invariant factors of a finite abelian group from its element orders.

    For each prime p, |G[p^j]| = p^{sum_i min(j, e_i)} pins down the p-primary
    exponents e_i; the elementary divisors are then merged with a Smith
    normal form.
    """
    if not orders:
        return []
    primes = set()
    for order in orders:
        primes.update(factorint(order))
    elementary: List[int] = []
    for p in sorted(primes):
        top = max(factorint(o).get(p, 0) for o in orders)
        counts = [sum(1 for o in orders if factorint(o).get(p, 0) <= j) for j in range(top + 1)]
        # counts[j] = p^{sum_i min(j, e_i)}; the number of e_i >= j is log_p(counts[j] / counts[j-1])
        at_least = []
        for j in range(1, top + 1):
            ratio, steps = counts[j] // counts[j - 1], 0
            while ratio > 1:
                ratio //= p
                steps += 1
            at_least.append(steps)
        for j in range(top, 0, -1):
            exact = at_least[j - 1] - (at_least[j] if j < top else 0)
            elementary.extend([p ** j] * exact)
    return combine_invariants(elementary)


def combine_invariants(*factor_lists: Iterable[int]) -> List[int]:
    """Invariant factors of a direct product of cyclic groups."""
    factors = [int(f) for factors in factor_lists for f in factors if int(f) > 1]
    if not factors:
        return []
    n = len(factors)
    diagonal = DM([[factors[i] if i == j else 0 for j in range(n)] for i in range(n)], ZZ)
    return [abs(int(f)) for f in invariant_factors(diagonal) if abs(int(f)) > 1]


@dataclass(frozen=True)
class GroupStructure:
    order: int
    abelian: bool
    invariants: Optional[Tuple[int, ...]]
    center_order: int

    def describe(self) -> str:
        if not self.abelian:
            return f"nonabelian of order {self.order}, center of order {self.center_order}"
        if not self.invariants:
            return "trivial"
        return " x ".join(f"Z{f}" for f in self.invariants)


def abelian_invariants(group: PermGroup) -> GroupStructure:
    """Invariant factors for abelian groups; order and center size otherwise."""
    if group.order == 1:
        return GroupStructure(1, True, (), 1)
    sym = group.sympy()
    if not sym.is_abelian:
        return GroupStructure(group.order, False, None, sym.center().order())
    orders = [Permutation(list(p)).order() for p in group.elements]
    return GroupStructure(group.order, True, tuple(invariant_factors_from_orders(orders)), group.order)


def twist_preserving_subgroup(group: PermGroup, twists) -> PermGroup:
    """Elements pi with t(pi(x)) = t(x) for every basis element x."""
    return group.subgroup(lambda p: all(twists[p[i]] == twists[i] for i in range(len(p))))

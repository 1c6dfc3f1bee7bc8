"""
The composition group of type A simple currents and its unit-group model.

G(n, k) is {a in Z_n : gcd(1 + ka, n) = 1} under a.a' = a + a' + aa'k; it is
isomorphic to G(n, d) = {b in Z_dn^x : b = 1 mod d} with d = gcd(n, k).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Tuple

from sympy import gcdex, mod_inverse, primefactors, primerange
from sympy.ntheory.modular import crt
from tqdm import tqdm

from wzw.autoeq.groups import PermGroup, abelian_invariants, invariant_factors_from_orders


@dataclass(frozen=True)
class AppendixGroup:
    n: int
    k: int
    elements: Tuple[int, ...]

    @property
    def d(self) -> int:
        return gcd(self.n, self.k)

    @property
    def order(self) -> int:
        return len(self.elements)

    def multiply(self, a: int, b: int) -> int:
        return (a + b + a * b * self.k) % self.n

    def table(self) -> Dict[Tuple[int, int], int]:
        return {(a, b): self.multiply(a, b) for a in self.elements for b in self.elements}

    def element_order(self, a: int) -> int:
        power, order = a, 1
        while power != 0:
            power = self.multiply(power, a)
            order += 1
        return order

    def invariants(self) -> List[int]:
        return invariant_factors_from_orders([self.element_order(a) for a in self.elements])

    def as_permutations(self) -> PermGroup:
        """The regular representation on the element list."""
        position = {a: i for i, a in enumerate(self.elements)}
        perms = [tuple(position[self.multiply(g, a)] for a in self.elements) for g in self.elements]
        return PermGroup.from_elements(perms, self.order)


def appendix_group(n: int, k: int) -> AppendixGroup:
    if n < 1 or k < 1:
        raise ValueError(f"n and k must be positive, got n={n}, k={k}")
    return AppendixGroup(n, k, tuple(a for a in range(n) if gcd(1 + k * a, n) == 1))


@dataclass(frozen=True)
class UnitSubgroup:
    n: int
    d: int
    elements: Tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.n * self.d

    @property
    def order(self) -> int:
        return len(self.elements)

    def multiply(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def element_order(self, b: int) -> int:
        power, order = b % self.modulus, 1
        while power != 1 % self.modulus:
            power = self.multiply(power, b)
            order += 1
        return order

    def invariants(self) -> List[int]:
        return invariant_factors_from_orders([self.element_order(b) for b in self.elements])


def gnd_subgroup(n: int, d: int) -> UnitSubgroup:
    m = n * d
    return UnitSubgroup(n, d, tuple(b for b in range(m) if gcd(b, m) == 1 and b % d == 1 % d))


def _coprime_multiplier(n: int, k: int) -> int:
    """An l coprime to n with l k = d mod n, from d = l k + m n shifted by a multiple of n/d."""
    d = gcd(n, k)
    ell = int(gcdex(k, n)[0])
    step = n // d
    moduli, residues = [], []
    for p in primefactors(n):
        if step % p:
            # primes dividing n/d already miss ell
            moduli.append(p)
            residues.append(0 if ell % p else mod_inverse(step, p))
    shift = int(crt(moduli, residues)[0]) if moduli else 0
    adjusted = (ell + shift * step) % n
    if gcd(adjusted, n) != 1:
        raise ArithmeticError(f"multiplier {adjusted} is not a unit mod {n}")
    return adjusted


@dataclass(frozen=True)
class IsoReport:
    n: int
    k: int
    d: int
    ell: int
    order: int
    appendix_invariants: Tuple[int, ...]
    unit_invariants: Tuple[int, ...]
    bijective: bool
    homomorphism: bool

    @property
    def passed(self) -> bool:
        return self.bijective and self.homomorphism and self.appendix_invariants == self.unit_invariants


def iso_check(n: int, k: int) -> IsoReport:
    """
    Verifies b -> l (b - 1)/d maps G(n, d) isomorphically onto G(n, k).

    Also compares the invariant factors of both sides independently.
    """
    group = appendix_group(n, k)
    units = gnd_subgroup(n, group.d)
    d = group.d
    ell = _coprime_multiplier(n, k)

    image = {b: (ell * ((b - 1) // d)) % n for b in units.elements}
    bijective = sorted(image.values()) == list(group.elements)
    homomorphism = bijective and all(
        image[units.multiply(b, c)] == group.multiply(image[b], image[c])
        for b in units.elements for c in units.elements)
    return IsoReport(n, k, d, ell, group.order, tuple(group.invariants()), tuple(units.invariants()),
                     bijective, homomorphism)


def local_structure_check(max_prime_power: int = 64) -> List[dict]:
    """
    G(p^nu, p^eta) for eta >= 1 against Z_2 x Z_{2^{nu-1}} (p = 2, eta = 1)
    and Z_{p^nu} otherwise.
    """
    rows = []
    for p in primerange(2, max_prime_power + 1):
        nu = 1
        while p ** nu <= max_prime_power:
            n = p ** nu
            for eta in range(1, nu + 1):
                expected = [2, 2 ** (nu - 1)] if (p == 2 and eta == 1) else [n]
                expected = [f for f in expected if f > 1]
                computed = gnd_subgroup(n, p ** eta).invariants()
                rows.append({'p': p, 'nu': nu, 'eta': eta, 'invariants': computed,
                             'expected': expected, 'match': computed == expected})
            nu += 1
    return rows


def appendix_grid(max_n: int, max_k: int, progress: bool = False) -> List[dict]:
    """Rows for every (n, k): group order, invariants on both sides, verdict."""
    from wzw.appendix.theorem_table import predicted_invariants

    rows = []
    pairs = [(n, k) for n in range(1, max_n + 1) for k in range(1, max_k + 1)]
    for n, k in tqdm(pairs, desc="Appendix grid", disable=not progress, leave=False):
        report = iso_check(n, k)
        predicted = predicted_invariants(n - 1, k, include_charge_conjugation=False)
        rows.append({
            'n': n, 'k': k, 'd': report.d, 'order': report.order,
            'invariants': list(report.appendix_invariants),
            'unit_invariants': list(report.unit_invariants),
            'predicted': predicted,
            'match': report.passed and list(report.appendix_invariants) == predicted,
        })
    return rows


def regular_structure(n: int, k: int):
    """Structure of G(n, k) computed through its permutation representation."""
    return abelian_invariants(appendix_group(n, k).as_permutations())

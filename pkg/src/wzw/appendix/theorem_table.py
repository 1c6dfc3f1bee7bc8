"""
Closed-form orders of the auto-equivalence groups and fusion automorphism groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import List, Optional

from sympy import primefactors, totient

from utils.errors import InvalidSpecError
from wzw.autoeq.groups import combine_invariants, invariant_factors_from_orders
from wzw.lie.algebra import FAMILIES


def smooth_part(n: int, k: int) -> int:
    """gcd(n, k^infinity): the largest divisor of n whose primes all divide k."""
    part, g = 1, gcd(n, k)
    while g > 1:
        part *= g
        n //= g
        g = gcd(n, k)
    return part


def omega(n: int) -> int:
    return len(primefactors(n))


@dataclass(frozen=True)
class TypeAParameters:
    n: int
    n_prime: int
    n_dprime: int
    c: int
    p: int
    t: int

    @property
    def d(self) -> int:
        return gcd(self.n, self.n_dprime)


def type_a_parameters(r: int, k: int) -> TypeAParameters:
    n = r + 1
    n_dprime = smooth_part(n, k)
    c = 1 if (k >= 3 and r != 1) else 0
    p = sum(1 for prime in primefactors(n) if prime != 2 and k % prime)
    if r % 2 == 0 or k % 4 == 0 or (k % 2 == 1 and r % 4 == 1):
        t = 0
    else:
        t = 1
    return TypeAParameters(n, n // n_dprime, n_dprime, c, p, t)


def unit_group_invariants(n: int) -> List[int]:
    units = [a for a in range(n) if gcd(a, n) == 1] if n > 1 else [0]
    orders = []
    for a in units:
        power, order = a % n if n > 1 else 0, 1
        while power != 1 % n:
            power = (power * a) % n
            order += 1
        orders.append(order)
    return invariant_factors_from_orders(orders)


def predicted_invariants(r: int, k: int, include_charge_conjugation: bool = True) -> List[int]:
    """
    Invariant factors of Z_2^c x Z_{n'}^x x (Z_2 x Z_{n''/2} or Z_{n''}).

    The Z_2 x Z_{n''/2} split applies when 2 exactly divides gcd(r+1, k).
    """
    params = type_a_parameters(r, k)
    d = gcd(params.n, k)
    if d % 4 == 2:
        cyclic = [2, params.n_dprime // 2]
    else:
        cyclic = [params.n_dprime]
    charge = [2] * params.c if include_charge_conjugation else []
    return combine_invariants(charge, unit_group_invariants(params.n_prime), cyclic)


@dataclass(frozen=True)
class TheoremPrediction:
    family: str
    rank: int
    level: int
    ten_aut: int
    br_aut: int
    ten_aut_invariants: Optional[List[int]] = None
    parameters: dict = field(default_factory=dict)


def theorem_order(family: str, r: int, k: int) -> TheoremPrediction:
    """Predicted |TenAut| and |BrAut| for C(g, k)."""
    if family not in FAMILIES:
        raise InvalidSpecError(f"Unknown family '{family}'", flag='--family')

    if family == 'A':
        params = type_a_parameters(r, k)
        values = dict(n=params.n, n_prime=params.n_prime, n_dprime=params.n_dprime,
                      c=params.c, p=params.p, t=params.t)
        if (r, k) == (1, 2):
            return TheoremPrediction(family, r, k, 1, 1, [], values)
        invariants = predicted_invariants(r, k)
        ten = 2 ** params.c * int(totient(params.n_prime)) * params.n_dprime
        return TheoremPrediction(family, r, k, ten, 2 ** (params.c + params.p + params.t), invariants, values)

    if family == 'B':
        m = 2 * r + 1
        w = omega(m)
        values = {'omega': w}
        if k == 1:
            return TheoremPrediction(family, r, k, 1, 1, [], values)
        if k == 2:
            split = all(prime % 4 == 1 for prime in primefactors(m))
            ten = 2 ** (w + 1) if split else 2 ** w
            return TheoremPrediction(family, r, k, ten, 2 ** (w - 1), [2] * (ten.bit_length() - 1), values)
        if k % 2 == 0:
            return TheoremPrediction(family, r, k, 2, 1, [2], values)
        return TheoremPrediction(family, r, k, 2, 2, [2], values)

    if family == 'C':
        if (r, k) == (2, 1):
            return TheoremPrediction(family, r, k, 1, 1, [])
        if r == k:
            return TheoremPrediction(family, r, k, 4, 1, [2, 2]) if r % 2 == 0 \
                else TheoremPrediction(family, r, k, 2, 1, [2])
        if (r * k) % 2 == 1:
            return TheoremPrediction(family, r, k, 1, 1, [])
        if (r * k) % 4 == 0:
            return TheoremPrediction(family, r, k, 2, 1, [2])
        return TheoremPrediction(family, r, k, 2, 2, [2])

    if k == 4:
        return TheoremPrediction(family, r, k, 2, 2, [2])
    return TheoremPrediction(family, r, k, 1, 1, [])


def fuseq_closed_form(family: str, r: int, k: int) -> int:
    """Order of the full fusion-ring automorphism group."""
    if family == 'A':
        n = r + 1
        admissible = sum(1 for a in range(n) if gcd(1 + k * a, n) == 1)
        if (r, k) == (1, 2):
            return 1
        if r == 1 or k <= 2:
            return admissible
        return 2 * admissible
    if family == 'B':
        if k == 1:
            return 1
        if k == 2:
            return int(totient(2 * r + 1))
        return 2
    if family == 'C':
        return theorem_order(family, r, k).ten_aut
    if family == 'G2':
        return {3: 3, 4: 2}.get(k, 1)
    raise InvalidSpecError(f"Unknown family '{family}'", flag='--family')

"""
Tambara-Yamagami categories over a cyclic group Z_m.

Labels 0..m-1 are the group elements and m is the non-invertible object.
The associator is F^{a m b}_m = chi(a, b), F^{m a m}_b = chi(a, b) and
F^{mmm}_m[e, f] = tau / sqrt(m) * chi(e, f)^{-1}; every other admissible
entry is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Tuple

import numpy as np

from utils.errors import BoundExceededError, InvalidSpecError, NonUnitError
from utils.settings import get_settings
from wzw.exact.phases import RationalPhase

PENTAGON_TOLERANCE = 1e-9


@dataclass(frozen=True)
class TYCategory:
    m: int
    c: int = 1
    tau: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise InvalidSpecError(f"group order must be positive, got {self.m}", flag='--order')
        if self.tau not in (1, -1):
            raise InvalidSpecError(f"tau must be +1 or -1, got {self.tau}")
        if self.m > 1 and gcd(self.c, self.m) != 1:
            raise InvalidSpecError(f"chi(i, j) = {self.c}ij/{self.m} is degenerate", flag='--coefficient')

    @property
    def sigma(self) -> int:
        return self.m

    def chi(self, i: int, j: int) -> RationalPhase:
        return RationalPhase(self.c * i * j, self.m)

    def fuse(self, a: int, b: int) -> List[int]:
        m = self.m
        if a == m and b == m:
            return list(range(m))
        if a == m or b == m:
            return [m]
        return [(a + b) % m]


def level2_category(r: int, tau: int = 1) -> TYCategory:
    """The Z_{2r+1} category with chi(i, j) = r ij / (2r+1)."""
    return TYCategory(2 * r + 1, r, tau)


def ty_fsymbol(ty: TYCategory, a: int, b: int, c: int, d: int, e: int, f: int) -> complex:
    """(F^{abc}_d)_{ef} with e in a x b and f in b x c; 0 when inadmissible."""
    if e not in ty.fuse(a, b) or f not in ty.fuse(b, c) or d not in ty.fuse(e, c) or d not in ty.fuse(a, f):
        return 0j
    s = ty.sigma
    if a == s and b == s and c == s:
        return ty.tau / np.sqrt(ty.m) * complex((-ty.chi(e, f)).to_complex(53))
    if b == s and a != s and c != s:
        return complex(ty.chi(a, c).to_complex(53))
    if a == s and c == s and b != s:
        return complex(ty.chi(b, d).to_complex(53))
    return 1 + 0j


def fsymbol_table(ty: TYCategory) -> np.ndarray:
    size = ty.m + 1
    table = np.zeros((size,) * 6, dtype=np.complex128)
    for a in range(size):
        for b in range(size):
            for c in range(size):
                for e in ty.fuse(a, b):
                    for f in ty.fuse(b, c):
                        for d in ty.fuse(e, c):
                            table[a, b, c, d, e, f] = ty_fsymbol(ty, a, b, c, d, e, f)
    return table


@dataclass(frozen=True)
class PentagonReport:
    m: int
    c: int
    tau: int
    equations: int
    max_residual: float

    @property
    def passed(self) -> bool:
        return self.max_residual < PENTAGON_TOLERANCE


def ty_pentagon_check(ty: TYCategory) -> PentagonReport:
    """
    Evaluates F(f,c,d,e,g,l) F(a,b,l,e,f,k) = sum_h F(a,b,c,g,f,h) F(a,h,d,e,g,k) F(b,c,d,k,h,l).

    Raises:
        BoundExceededError: m above Settings.ty_max_order.
    """
    bound = get_settings().ty_max_order
    if ty.m > bound:
        raise BoundExceededError(f"pentagon check limited to |G| <= {bound}, got {ty.m}")
    F = fsymbol_table(ty)
    labels = range(ty.m + 1)
    fuse = ty.fuse
    count, worst = 0, 0.0
    for a in labels:
        for b in labels:
            for c in labels:
                for d in labels:
                    for f in fuse(a, b):
                        for g in fuse(f, c):
                            for l in fuse(c, d):
                                for k in fuse(b, l):
                                    ak = fuse(a, k)
                                    for e in fuse(g, d):
                                        if e not in ak:
                                            continue
                                        left = F[f, c, d, e, g, l] * F[a, b, l, e, f, k]
                                        right = sum(F[a, b, c, g, f, h] * F[a, h, d, e, g, k] * F[b, c, d, k, h, l]
                                                    for h in fuse(b, c))
                                        worst = max(worst, abs(left - right))
                                        count += 1
    return PentagonReport(ty.m, ty.c, ty.tau, count, float(worst))


def ty_autgroup(ty: TYCategory) -> Tuple[int, ...]:
    """Units n of Z_m with chi(ni, nj) = chi(i, j) for all i, j."""
    m = ty.m
    if m == 1:
        return (0,)
    return tuple(n for n in range(1, m) if gcd(n, m) == 1
                 and all(ty.chi(n * i, n * j) == ty.chi(i, j) for i in range(m) for j in range(m)))


def ty_chi_inverse_map(ty: TYCategory, n: int) -> bool:
    """Whether i -> ni carries chi to chi^{-1}."""
    m = ty.m
    if m > 1 and gcd(n, m) != 1:
        raise NonUnitError(f"{n} is not a unit mod {m}")
    return all(ty.chi(n * i, n * j) == -ty.chi(i, j) for i in range(m) for j in range(m))

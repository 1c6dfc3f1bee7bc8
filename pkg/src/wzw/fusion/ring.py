"""
Fusion rings and their structural queries.

A FusionRing stores the sparse fusion tensor as products[a][b] = {c: N_ab^c}
over basis indices. The basis may hold Weights (rings built from Lie data) or
plain string labels (hand presentations).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional

import numpy as np
from tqdm import tqdm

from utils.errors import BoundExceededError, InvariantViolationError
from utils.settings import get_settings
from wzw.fusion.kac_walton import fuse
from wzw.lie.algebra import AlgebraSpec, Weight, alcove, dual_weight, inner_product

Products = Dict[int, Dict[int, Dict[int, int]]]


@dataclass(frozen=True, eq=False)
class FusionRing:
    basis: tuple
    products: Products = field(repr=False)
    unit: int
    dual: tuple
    spec: Optional[AlgebraSpec] = None
    name: str = ""

    @cached_property
    def index(self) -> dict:
        return {b: i for i, b in enumerate(self.basis)}

    @property
    def size(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def label(self, i: int) -> str:
        return str(self.basis[i])

    def pretty(self, i: int) -> str:
        item = self.basis[i]
        return item.pretty() if isinstance(item, Weight) else str(item)

    def index_of(self, item) -> int:
        if isinstance(item, (tuple, list)):
            item = Weight.of(item)
        return self.index[item]

    def product(self, a: int, b: int) -> Dict[int, int]:
        return self.products[a][b]

    def N(self, a: int, b: int, c: int) -> int:
        return self.products[a][b].get(c, 0)

    def fuse_single(self, a: int, b: int) -> int:
        """Product of two elements whose fusion is a single simple."""
        result = self.products[a][b]
        if len(result) != 1 or next(iter(result.values())) != 1:
            raise InvariantViolationError(f"{self.label(a)} x {self.label(b)} is not simple")
        return next(iter(result))

    def fusion_matrix(self, a: int) -> np.ndarray:
        """L_a with (L_a)[b, c] = N_ab^c."""
        matrix = np.zeros((self.size, self.size), dtype=np.int64)
        for b, row in self.products[a].items():
            for c, m in row.items():
                matrix[b, c] = m
        return matrix

    @cached_property
    def fp_dims(self) -> np.ndarray:
        """Frobenius-Perron dimensions, from the top eigenvector of sum_a L_a."""
        total = np.zeros((self.size, self.size), dtype=np.float64)
        for a in range(self.size):
            for b, row in self.products[a].items():
                for c, m in row.items():
                    total[b, c] += m
        _, vectors = np.linalg.eigh(total)
        top = np.abs(vectors[:, -1])
        return top / top[self.unit]

    def rows(self) -> List[dict]:
        """One row per nonzero N_ab^c with a <= b."""
        rows = []
        for a in range(self.size):
            for b in range(a, self.size):
                for c, m in sorted(self.products[a][b].items()):
                    rows.append({'a': self.label(a), 'b': self.label(b), 'c': self.label(c), 'N': m})
        return rows


def _fusion_row(spec: AlgebraSpec, lam: Weight, mu: Weight, index: dict) -> Dict[int, int]:
    row = {}
    for weight, m in fuse(spec, lam, mu).items():
        if weight not in index:
            raise InvariantViolationError(f"{weight} outside the alcove of {spec}")
        row[index[weight]] = m
    return row


def _products_by_pairs(spec: AlgebraSpec, basis: tuple, index: dict, progress: bool) -> Products:
    n = len(basis)
    products: Products = {a: {} for a in range(n)}
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    for a, b in tqdm(pairs, desc=f"Fusing {spec}", disable=not progress, leave=False):
        row = _fusion_row(spec, basis[a], basis[b], index)
        products[a][b] = row
        products[b][a] = row
    return products


def _products_by_recursion(spec: AlgebraSpec, basis: tuple, index: dict, progress: bool) -> Products:
    """
    Fusion matrices built up from the fundamental weights.

    Only Lambda_i (x) mu is computed by Kac-Walton. For lam = Lambda_i + mu
    that product is c_lam lam plus weights strictly below lam in dominance
    order, so with weights taken by increasing (lam, rho)

        L_lam = (L_mu L_{Lambda_i} - sum_{nu != lam} c_nu L_nu) / c_lam.

    Matrices are kept as coordinate arrays; a weight whose recursion is not
    available falls back to direct products.
    """
    n, rank = len(basis), spec.rank
    rho = (1,) * rank
    stored: Dict[int, tuple] = {}

    def keep(a: int, matrix: np.ndarray):
        rows, cols = np.nonzero(matrix)
        stored[a] = (rows, cols, matrix[rows, cols])

    def dense(a: int) -> np.ndarray:
        rows, cols, values = stored[a]
        matrix = np.zeros((n, n))
        matrix[rows, cols] = values
        return matrix

    def direct(a: int) -> List[Dict[int, int]]:
        rows = [_fusion_row(spec, basis[a], basis[b], index) for b in range(n)]
        matrix = np.zeros((n, n))
        for b, row in enumerate(rows):
            for c, m in row.items():
                matrix[b, c] = m
        keep(a, matrix)
        return rows

    keep(index[Weight.zero(rank)], np.eye(n))
    fundamentals, fundamental_rows = {}, {}
    for i in range(rank):
        weight = Weight.fundamental(rank, i + 1)
        if weight in index:
            fundamentals[i] = index[weight]
            fundamental_rows[i] = direct(index[weight])

    order = sorted(range(n), key=lambda a: (inner_product(spec.family, rank, basis[a].labels, rho), basis[a].labels))
    for lam in tqdm(order, desc=f"Fusing {spec}", disable=not progress, leave=False):
        if lam in stored:
            continue
        labels = basis[lam].labels
        i = next(j for j, x in enumerate(labels) if x)
        mu = index[Weight(tuple(x - 1 if j == i else x for j, x in enumerate(labels)))]
        terms = fundamental_rows[i][mu]
        top = terms.get(lam, 0)
        if not top or any(nu not in stored for nu in terms if nu != lam):
            direct(lam)
            continue
        matrix = dense(mu) @ dense(fundamentals[i])
        for nu, m in terms.items():
            if nu != lam:
                matrix -= m * dense(nu)
        matrix /= top
        exact = np.rint(matrix)
        if np.abs(matrix - exact).max() > 1e-6 or exact.min() < 0:
            raise InvariantViolationError(f"fusion recursion for {basis[lam]} at {spec} is not a nonnegative integer matrix")
        keep(lam, exact)

    products: Products = {}
    for a in range(n):
        rows, cols, values = stored[a]
        table: Dict[int, Dict[int, int]] = {b: {} for b in range(n)}
        for b, c, m in zip(rows.tolist(), cols.tolist(), values.tolist()):
            table[b][c] = int(m)
        products[a] = table
    return products


def build_ring(spec: AlgebraSpec, progress: bool = False, method: str = None) -> FusionRing:
    """
    Assembles the level-k fusion ring from Kac-Walton products.

    Args:
        spec: The algebra and level.
        progress: Show a progress bar.
        method: 'pairs' fuses every pair directly, 'recursion' only fuses the
            fundamental weights. By default alcoves up to
            Settings.direct_fusion_max use 'pairs'.

    Raises:
        BoundExceededError: alcove larger than Settings.max_alcove.
        InvariantViolationError: the assembled ring fails an axiom.
    """
    settings = get_settings()
    basis = tuple(alcove(spec))
    n = len(basis)
    if n > settings.max_alcove:
        raise BoundExceededError(f"alcove of {spec} has {n} weights, bound is {settings.max_alcove}")
    index = {w: i for i, w in enumerate(basis)}

    method = method or ('pairs' if n <= settings.direct_fusion_max else 'recursion')
    if method == 'pairs':
        products = _products_by_pairs(spec, basis, index, progress)
    elif method == 'recursion':
        products = _products_by_recursion(spec, basis, index, progress)
    else:
        raise ValueError(f"Unknown fusion method '{method}'")

    unit = index[Weight.zero(spec.rank)]
    dual = []
    for a in range(n):
        partners = [b for b in range(n) if products[a][b].get(unit, 0)]
        if len(partners) != 1:
            raise InvariantViolationError(f"{basis[a]} has {len(partners)} duals at {spec}")
        if basis[partners[0]] != dual_weight(spec, basis[a]):
            raise InvariantViolationError(f"dual of {basis[a]} disagrees with -w0 at {spec}")
        dual.append(partners[0])

    ring = FusionRing(tuple(basis), products, unit, tuple(dual), spec, name=str(spec))
    violations = verify_ring(ring)
    if violations:
        raise InvariantViolationError(f"{spec}: " + "; ".join(violations[:5]))
    return ring


def verify_ring(ring: FusionRing, seed: int = None) -> List[str]:
    """
    Checks unit, commutativity, duality, Frobenius reciprocity and associativity.

    Associativity is checked exactly up to Settings.full_associativity_max
    basis elements and by an exact randomized test on sampled pairs beyond.

    Returns:
        Descriptions of the violated invariants; empty when all hold.
    """
    settings = get_settings()
    n, unit, dual, P = ring.size, ring.unit, ring.dual, ring.products
    violations = []

    for b in range(n):
        if P[unit][b] != {b: 1}:
            violations.append(f"unit: 0 x {ring.label(b)} = {P[unit][b]}")
    for a in range(n):
        if dual[dual[a]] != a:
            violations.append(f"dual is not an involution at {ring.label(a)}")
        for b in range(n):
            if P[a][b] != P[b][a]:
                violations.append(f"commutativity fails at ({ring.label(a)}, {ring.label(b)})")
            if P[a][b].get(unit, 0) != (1 if b == dual[a] else 0):
                violations.append(f"duality fails at ({ring.label(a)}, {ring.label(b)})")
            for c, m in P[a][b].items():
                if P[a][dual[c]].get(dual[b], 0) != m:
                    violations.append(f"Frobenius reciprocity fails at ({ring.label(a)}, {ring.label(b)}, {ring.label(c)})")
    if violations:
        return violations

    if n <= settings.full_associativity_max:
        matrices = np.stack([ring.fusion_matrix(a).astype(np.float64) for a in range(n)])
        for a in range(n):
            # (L_b L_a)[x, y] against sum_d N_ab^d (L_d)[x, y]
            left = matrices @ matrices[a]
            right = np.tensordot(matrices[a], matrices, axes=([1], [0]))
            if not np.array_equal(left, right):
                bad = int(np.argwhere((left != right).any(axis=(1, 2)))[0][0])
                violations.append(f"associativity fails at ({ring.label(a)}, {ring.label(bad)})")
                break
        return violations

    rng = random.Random(settings.seed if seed is None else seed)
    x = np.array([rng.randint(1, 97) for _ in range(n)], dtype=np.int64)
    applied = np.zeros((n, n), dtype=np.int64)
    for d in range(n):
        for b, row in P[d].items():
            applied[d, b] = sum(m * x[c] for c, m in row.items())

    def apply(a, vector):
        out = np.zeros(n, dtype=np.int64)
        for b, row in P[a].items():
            out[b] = sum(m * vector[c] for c, m in row.items())
        return out

    for _ in range(settings.associativity_samples):
        a, b = rng.randrange(n), rng.randrange(n)
        left = apply(b, applied[a])
        right = np.zeros(n, dtype=np.int64)
        for d, m in P[a][b].items():
            right += m * applied[d]
        if not np.array_equal(left, right):
            violations.append(f"associativity fails at ({ring.label(a)}, {ring.label(b)})")
            break
    return violations


def invertibles(ring: FusionRing) -> List[int]:
    """Basis elements x with x (x) x* = 0."""
    return [x for x in range(ring.size) if ring.products[x][ring.dual[x]] == {ring.unit: 1}]


def element_order(ring: FusionRing, g: int) -> int:
    """Order of an invertible element under fusion."""
    power, order = g, 1
    while power != ring.unit:
        power = ring.fuse_single(power, g)
        order += 1
        if order > ring.size:
            raise InvariantViolationError(f"{ring.label(g)} is not invertible")
    return order


@dataclass(frozen=True)
class GradingGroup:
    order: int
    invariants: tuple
    grade: tuple
    table: tuple


def grading_group(ring: FusionRing) -> GradingGroup:
    """
    Universal grading group.

    Components are classes of a ~ b iff a (x) b* lies in the adjoint subring,
    which is generated by all x (x) x*.
    """
    from wzw.autoeq.groups import invariant_factors_from_orders

    n, P = ring.size, ring.products
    adjoint = set()
    for x in range(n):
        adjoint.update(P[x][ring.dual[x]])
    frontier = list(adjoint)
    while frontier:
        a = frontier.pop()
        for b in list(adjoint):
            for c in P[a][b]:
                if c not in adjoint:
                    adjoint.add(c)
                    frontier.append(c)

    grade = [-1] * n
    representatives = []
    for a in range(n):
        if grade[a] >= 0:
            continue
        component = len(representatives)
        representatives.append(a)
        for b in range(n):
            if grade[b] < 0 and set(P[a][ring.dual[b]]) <= adjoint:
                grade[b] = component

    m = len(representatives)
    table = [[grade[next(iter(P[representatives[i]][representatives[j]]))] for j in range(m)]
             for i in range(m)]
    identity = grade[ring.unit]
    orders = []
    for i in range(m):
        power, order = i, 1
        while power != identity:
            power = table[power][i]
            order += 1
        orders.append(order)
    return GradingGroup(m, tuple(invariant_factors_from_orders(orders)), tuple(grade),
                        tuple(tuple(row) for row in table))

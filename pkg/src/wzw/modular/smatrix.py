"""
Floating-point modular data: quantum dimensions, the Kac-Peterson S-matrix
and the Verlinde cross-check against Kac-Walton fusion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath
import numpy as np

from utils.errors import BoundExceededError
from utils.settings import get_settings
from wzw.fusion.ring import FusionRing
from wzw.lie.algebra import AlgebraSpec, Weight, inner_product, lie_data_for, quadratic_form
from wzw.lie.weyl import positive_roots, weyl_group
from wzw.modular.twists import pivotal_sign

SMATRIX_TOLERANCE = 1e-9
VERLINDE_TOLERANCE = 1e-6


def qdim(spec: AlgebraSpec, weight: Weight, prec: int = None):
    """Quantum dimension prod sin(pi (lambda+rho, alpha)/kappa) / sin(pi (rho, alpha)/kappa)."""
    prec = prec or get_settings().float_prec
    kappa = spec.level + lie_data_for(spec).dual_coxeter
    shifted = [x + 1 for x in weight.labels]
    rho = [1] * spec.rank
    with mpmath.workprec(prec):
        value = mpmath.mpf(1)
        for root in positive_roots(spec.family, spec.rank):
            top = inner_product(spec.family, spec.rank, shifted, root)
            bottom = inner_product(spec.family, spec.rank, rho, root)
            value *= (mpmath.sinpi(mpmath.mpf(top.numerator) / (top.denominator * kappa))
                      / mpmath.sinpi(mpmath.mpf(bottom.numerator) / (bottom.denominator * kappa)))
        return +value


@dataclass(frozen=True, eq=False)
class SMatrixOracle:
    spec: AlgebraSpec
    matrix: np.ndarray = field(repr=False)
    precision: str = "complex128"
    unitarity_error: float = 0.0
    symmetry_error: float = 0.0


def smatrix_oracle(spec: AlgebraSpec, basis=None) -> SMatrixOracle:
    """
    S_{lambda mu} proportional to sum_w eps(w) exp(-2 pi i (w(lambda+rho), mu+rho)/kappa).

    Normalized to be unitary with S_00 > 0.

    Raises:
        WeylBoundError: through weyl_group when |W| exceeds the bound.
    """
    from wzw.lie.algebra import alcove
    basis = list(basis) if basis is not None else alcove(spec)
    kappa = spec.level + lie_data_for(spec).dual_coxeter
    form = np.array([[float(x) for x in row] for row in quadratic_form(spec.family, spec.rank)])
    shifted = np.array([w.labels for w in basis], dtype=np.float64) + 1.0

    raw = np.zeros((len(basis), len(basis)), dtype=np.complex128)
    right = shifted @ form
    for element in weyl_group(spec):
        images = shifted @ element.matrix.astype(np.float64)
        raw += element.sign * np.exp(-2j * np.pi * (images @ right.T) / kappa)

    gram = raw @ raw.conj().T
    scale = np.sqrt(gram[0, 0].real)
    matrix = raw / scale
    phase = matrix[0, 0] / abs(matrix[0, 0])
    matrix = matrix / phase

    identity = np.eye(len(basis))
    return SMatrixOracle(
        spec=spec,
        matrix=matrix,
        unitarity_error=float(np.max(np.abs(matrix @ matrix.conj().T - identity))),
        symmetry_error=float(np.max(np.abs(matrix - matrix.T))),
    )


@dataclass(frozen=True)
class VerlindeReport:
    spec: AlgebraSpec
    max_deviation: float
    triples: int
    passed: bool


def verlinde_check(ring: FusionRing, oracle: SMatrixOracle) -> VerlindeReport:
    """
    Compares N_ab^c with sum_x S_ax S_bx conj(S_cx) / S_0x before rounding.

    Raises:
        BoundExceededError: ring larger than Settings.verlinde_max.
    """
    bound = get_settings().verlinde_max
    if ring.size > bound:
        raise BoundExceededError(f"Verlinde oracle limited to {bound} simples, ring has {ring.size}")
    S = oracle.matrix
    unit = ring.unit
    deviation = 0.0
    for a in range(ring.size):
        predicted = (S * (S[a] / S[unit])) @ S.conj().T
        deviation = max(deviation, float(np.max(np.abs(predicted - ring.fusion_matrix(a)))))
    return VerlindeReport(ring.spec, deviation, ring.size ** 3, deviation < VERLINDE_TOLERANCE)


def modular_check(oracle: SMatrixOracle, twists, basis) -> float:
    """
    Residual of (S'T)^3 = c S'^2 with S' = D S D and D the pivotal signs.

    Returns:
        max |(S'T)^3 - c S'^2| for the best-fitting scalar c.
    """
    signs = np.array([pivotal_sign(oracle.spec, w.labels) for w in basis], dtype=np.float64)
    S = oracle.matrix * np.outer(signs, signs)
    T = np.diag([complex(mpmath.expjpi(2 * mpmath.mpf(t.num) / t.den)) for t in twists])
    left = np.linalg.matrix_power(S @ T, 3)
    right = S @ S
    c = np.vdot(right, left) / np.vdot(right, right)
    return float(np.max(np.abs(left - c * right)))


def qdims_from_smatrix(oracle: SMatrixOracle, unit: int = 0) -> np.ndarray:
    return (oracle.matrix[unit] / oracle.matrix[unit, unit]).real

import numpy as np
import pytest

from wzw.exact.phases import RationalPhase
from wzw.lie.algebra import AlgebraSpec, Weight
from wzw.modular.smatrix import modular_check, qdims_from_smatrix, smatrix_oracle
from wzw.modular.twists import literal_sign_discrepancies, monodromy_exponent, twist


@pytest.mark.parametrize("level, labels, expected", [
    (4, (1, 0), RationalPhase(1, 4)),
    (4, (0, 1), RationalPhase(1, 2)),
    (4, (0, 2), RationalPhase(1, 4)),
    (4, (4, 0), RationalPhase(1, 2)),
    (3, (0, 1), RationalPhase(4, 7)),
    (1, (1, 0), RationalPhase(2, 5)),
])
def test_g2_twists(level, labels, expected):
    assert twist(AlgebraSpec('G2', 2, level), Weight.of(labels)) == expected


def test_so5_level2_twists():
    spec = AlgebraSpec('B', 2, 2)
    assert twist(spec, Weight.of(0, 1)) == RationalPhase(1, 4)
    assert twist(spec, Weight.of(1, 0)) == RationalPhase(2, 5)
    assert twist(spec, Weight.of(0, 0)).is_zero()


def test_dual_twists_agree_for_even_rank():
    assert literal_sign_discrepancies(AlgebraSpec('A', 3, 2)) == []
    assert literal_sign_discrepancies(AlgebraSpec('A', 2, 2))


def test_monodromy(ring_of):
    ring, twists = ring_of('A', 2, 3)
    g = ring.index_of((3, 0))
    assert monodromy_exponent(ring, twists, g, ring.index_of((1, 0))) == 2
    assert monodromy_exponent(ring, twists, g, ring.unit) == 0


def test_modular_relation(ring_of):
    ring, twists = ring_of('B', 2, 2)
    oracle = smatrix_oracle(ring.spec, ring.basis)
    assert oracle.unitarity_error < 1e-9
    assert modular_check(oracle, twists.phases, ring.basis) < 1e-8


def test_qdims_match_fp_dims(ring_of):
    ring, _ = ring_of('G2', 2, 2)
    oracle = smatrix_oracle(ring.spec, ring.basis)
    assert np.allclose(qdims_from_smatrix(oracle, ring.unit), ring.fp_dims)

import numpy as np
import pytest

from wzw.fusion.kac_walton import fuse
from wzw.fusion.ring import build_ring, element_order, grading_group, invertibles, verify_ring
from wzw.lie.algebra import AlgebraSpec, Weight
from wzw.modular.smatrix import smatrix_oracle, verlinde_check


def test_su2_truncation():
    assert fuse(AlgebraSpec('A', 1, 2), Weight.of(1), Weight.of(1)) == {Weight.of(0): 1, Weight.of(2): 1}
    assert fuse(AlgebraSpec('A', 1, 1), Weight.of(1), Weight.of(1)) == {Weight.of(0): 1}


def test_spinor_square(ring_of):
    ring, _ = ring_of('B', 2, 2)
    spinor = ring.index_of((0, 1))
    expected = {ring.index_of((0, 0)): 1, ring.index_of((1, 0)): 1, ring.index_of((0, 2)): 1}
    assert ring.product(spinor, spinor) == expected


def test_g2_level_one_is_fibonacci(ring_of):
    ring, _ = ring_of('G2', 2, 1)
    tau = ring.index_of((1, 0))
    assert ring.size == 2
    assert ring.product(tau, tau) == {ring.unit: 1, tau: 1}
    assert ring.fp_dims[tau] == pytest.approx((1 + 5 ** 0.5) / 2)


@pytest.mark.parametrize("family, rank, level", [('A', 2, 3), ('B', 2, 2), ('C', 3, 2), ('G2', 2, 4)])
def test_ring_axioms(ring_of, family, rank, level):
    ring, _ = ring_of(family, rank, level)
    assert verify_ring(ring) == []


def test_invertibles_of_su3(ring_of):
    ring, _ = ring_of('A', 2, 3)
    units = invertibles(ring)
    assert sorted(ring.label(g) for g in units) == ['[0,0]', '[0,3]', '[3,0]']
    assert element_order(ring, ring.index_of((3, 0))) == 3


def test_grading_group(ring_of):
    ring, _ = ring_of('A', 2, 3)
    assert grading_group(ring).order == 3


def test_fp_dims(ring_of):
    ring, _ = ring_of('A', 1, 2)
    assert np.allclose(ring.fp_dims, [1, 2 ** 0.5, 1])


@pytest.mark.parametrize("family, rank, level", [('A', 2, 2), ('B', 2, 2), ('G2', 2, 2)])
def test_verlinde(ring_of, family, rank, level):
    ring, _ = ring_of(family, rank, level)
    report = verlinde_check(ring, smatrix_oracle(ring.spec, ring.basis))
    assert report.passed, report.max_deviation


@pytest.mark.parametrize("family, rank, level", [('A', 2, 4), ('A', 3, 3), ('B', 3, 2), ('C', 3, 2), ('G2', 2, 4)])
def test_recursion_matches_pairwise_fusion(ring_of, family, rank, level):
    ring, _ = ring_of(family, rank, level)
    recursive = build_ring(AlgebraSpec(family, rank, level), method='recursion')
    assert recursive.basis == ring.basis
    for a in range(ring.size):
        for b in range(ring.size):
            assert recursive.product(a, b) == ring.product(a, b), (ring.label(a), ring.label(b))


def test_unknown_fusion_method():
    with pytest.raises(ValueError):
        build_ring(AlgebraSpec('A', 1, 1), method='verlinde')

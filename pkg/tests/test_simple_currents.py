import pytest

from utils.errors import UnsupportedCurrentError
from wzw.autoeq.simple_currents import braided_count_check, composition_law_check, designated_current, \
    lemma_braided_test, lemma_valid_a_set, self_braiding_exponent, simple_current_params, simple_current_perm, \
    simple_current_table, valid_a_set
from wzw.exact.phases import RationalPhase
from wzw.lie.algebra import AlgebraSpec


@pytest.mark.parametrize("family, rank, level, expected", [
    ('A', 2, 3, [0, 1, 2]),
    ('A', 3, 2, [0, 1, 2, 3]),
    ('A', 3, 1, [0, 2]),
    ('B', 3, 4, [0, 1]),
    ('C', 3, 1, [0]),
    ('C', 3, 2, [0, 1]),
])
def test_admissible_labels(family, rank, level, expected):
    assert valid_a_set(AlgebraSpec(family, rank, level)) == expected


def test_current_image_of_fundamental(ring_of):
    ring, twists = ring_of('A', 2, 3)
    auto = simple_current_perm(ring, twists, 1)
    assert auto(ring.index_of((1, 0))) == ring.index_of((2, 1))
    assert auto(ring.unit) == ring.unit
    assert simple_current_perm(ring, twists, 0).is_identity()


@pytest.mark.parametrize("family, rank, level", [('A', 2, 3), ('A', 3, 2), ('A', 3, 3)])
def test_composition_law(ring_of, family, rank, level):
    ring, twists = ring_of(family, rank, level)
    report = composition_law_check(ring, twists)
    assert report.passed, report.counterexample


def test_braided_count(ring_of):
    ring, twists = ring_of('A', 2, 3)
    result = braided_count_check(ring, twists)
    assert result['twist_preserving'] == result['expected'] == 1
    assert result['match']


def test_lemma_parameters(ring_of):
    ring, _ = ring_of('A', 2, 3)
    params = simple_current_params(ring)
    assert params.M == 3
    assert params.integral
    assert lemma_valid_a_set(params) == valid_a_set(ring.spec)
    assert lemma_braided_test(params, 0)


def test_lemma_needs_integral_q(ring_of):
    ring, _ = ring_of('A', 1, 1)
    params = simple_current_params(ring)
    assert not params.integral
    assert lemma_valid_a_set(params) is None
    assert lemma_braided_test(params, 1) is None


def test_self_braiding():
    assert self_braiding_exponent(AlgebraSpec('A', 2, 3)) == RationalPhase(1, 2)
    assert self_braiding_exponent(AlgebraSpec('B', 2, 3)) == RationalPhase(1, 2)
    assert self_braiding_exponent(AlgebraSpec('C', 2, 1)) == RationalPhase(1, 2)
    with pytest.raises(UnsupportedCurrentError):
        self_braiding_exponent(AlgebraSpec('A', 2, 3), (1, 1))


def test_g2_has_no_designated_current(ring_of):
    ring, _ = ring_of('G2', 2, 2)
    with pytest.raises(UnsupportedCurrentError):
        designated_current(ring)
    with pytest.raises(UnsupportedCurrentError):
        valid_a_set(ring.spec)


def test_current_table_is_consistent(ring_of):
    ring, twists = ring_of('B', 2, 3)
    rows = simple_current_table(ring, twists)
    assert [row['a'] for row in rows] == [0, 1]
    assert all(row['consistent'] for row in rows)

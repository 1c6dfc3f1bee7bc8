import pytest

from utils.errors import InvalidSpecError, WeylBoundError
from wzw.lie.algebra import AlgebraSpec, Weight, alcove, dual_weight, weight_level, weyl_group_order
from wzw.lie.characters import dominant_multiplicities, weyl_dimension
from wzw.lie.weyl import weyl_group


@pytest.mark.parametrize("family, rank, level, size", [
    ('A', 1, 3, 4),
    ('A', 2, 3, 10),
    ('B', 2, 2, 6),
    ('C', 2, 1, 3),
    ('G2', 2, 1, 2),
    ('G2', 2, 4, 9),
])
def test_alcove_sizes(family, rank, level, size):
    assert len(alcove(AlgebraSpec(family, rank, level))) == size


@pytest.mark.parametrize("family, rank, highest, dim", [
    ('A', 2, (1, 0), 3),
    ('A', 2, (1, 1), 8),
    ('B', 2, (1, 0), 5),
    ('B', 2, (0, 1), 4),
    ('C', 2, (1, 0), 4),
    ('G2', 2, (1, 0), 7),
    ('G2', 2, (0, 1), 14),
])
def test_weyl_dimension(family, rank, highest, dim):
    assert weyl_dimension(family, rank, highest) == dim


def test_adjoint_zero_weight_multiplicity():
    mults = dominant_multiplicities('A', 2, (1, 1))
    assert mults[(1, 1)] == 1
    assert mults[(0, 0)] == 2


def test_weyl_group_enumeration():
    spec = AlgebraSpec('C', 3, 1)
    group = weyl_group(spec)
    assert len(group) == weyl_group_order('C', 3) == 48
    assert sum(element.sign for element in group) == 0


def test_weyl_bound():
    with pytest.raises(WeylBoundError):
        weyl_group(AlgebraSpec('C', 3, 1), bound=10)


def test_duals():
    spec = AlgebraSpec('A', 2, 3)
    assert dual_weight(spec, Weight.of(1, 0)) == Weight.of(0, 1)
    assert dual_weight(AlgebraSpec('B', 2, 2), Weight.of(0, 1)) == Weight.of(0, 1)


def test_invalid_specs():
    with pytest.raises(InvalidSpecError):
        AlgebraSpec('G2', 3, 1)
    with pytest.raises(InvalidSpecError):
        AlgebraSpec('A', 2, 0)
    with pytest.raises(InvalidSpecError):
        AlgebraSpec('E', 6, 1)


def test_weight_formatting():
    weight = Weight.of(2, 0, 1)
    assert str(weight) == "[2,0,1]"
    assert weight.pretty() == "2Λ1+Λ3"
    assert Weight.zero(2).pretty() == "0"


@pytest.mark.parametrize("family, rank, level", [('A', 3, 2), ('B', 3, 2), ('C', 2, 3), ('G2', 2, 4)])
def test_alcove_levels(family, rank, level):
    spec = AlgebraSpec(family, rank, level)
    levels = [weight_level(spec, w.labels) for w in alcove(spec)]
    assert max(levels) == level
    assert min(levels) == 0

import pytest

from utils.errors import InvariantViolationError
from wzw.autoeq.groups import PermGroup, abelian_invariants, cycles, invariant_factors_from_orders, \
    twist_preserving_subgroup
from wzw.autoeq.search import automorphism_from_map, enumerate_fusion_autos, find_isomorphisms, invariant_keys, \
    verify_automorphism, verify_isomorphism


@pytest.mark.parametrize("family, rank, level, order", [
    ('A', 2, 3, 6),
    ('B', 2, 2, 4),
    ('B', 3, 3, 2),
    ('G2', 2, 2, 1),
    ('G2', 2, 3, 3),
    ('G2', 2, 4, 2),
])
def test_fusion_automorphism_orders(ring_of, family, rank, level, order):
    ring, _ = ring_of(family, rank, level)
    assert enumerate_fusion_autos(ring).order == order


def test_braided_part_of_g2_level4(ring_of):
    ring, twists = ring_of('G2', 2, 4)
    group = enumerate_fusion_autos(ring)
    assert twist_preserving_subgroup(group, twists).order == 2


def test_su3_level3_structure(ring_of):
    ring, _ = ring_of('A', 2, 3)
    structure = abelian_invariants(enumerate_fusion_autos(ring))
    assert structure.abelian
    assert structure.invariants == (6,)
    assert structure.describe() == "Z6"


def test_verify_isomorphism_rejects_non_permutations(ring_of):
    ring, _ = ring_of('A', 1, 2)
    assert verify_isomorphism(ring, ring, (0, 0, 2)) == ["not a bijection"]
    assert verify_isomorphism(ring, ring, (0, 1, 2)) == []


def test_verify_automorphism(ring_of):
    ring, _ = ring_of('A', 2, 2)
    flip = list(range(ring.size))
    a, b = ring.index_of((1, 0)), ring.index_of((0, 1))
    flip[a], flip[b] = b, a
    assert not verify_automorphism(ring, flip)
    c, d = ring.index_of((2, 0)), ring.index_of((0, 2))
    flip[c], flip[d] = d, c
    assert verify_automorphism(ring, flip)


def test_twist_keys_select_braided_automorphisms(ring_of):
    ring, twists = ring_of('B', 2, 2)
    keys = invariant_keys(ring, list(twists.phases))
    assert find_isomorphisms(ring, ring, keys, keys) == [tuple(range(ring.size))]


def test_automorphism_from_map(ring_of):
    ring, _ = ring_of('A', 2, 2)
    auto = automorphism_from_map(ring, {(1, 0): (0, 1), (0, 1): (1, 0), (2, 0): (0, 2), (0, 2): (2, 0)}, "C")
    assert not auto.is_identity()
    assert auto.compose(auto).is_identity()
    with pytest.raises(InvariantViolationError):
        automorphism_from_map(ring, {(1, 0): (1, 1), (1, 1): (1, 0)})


def test_invariant_factors():
    assert invariant_factors_from_orders([1, 2, 2, 2]) == [2, 2]
    assert invariant_factors_from_orders([1, 2, 4, 4]) == [4]
    assert invariant_factors_from_orders([1, 2, 3, 6]) == [6]
    assert invariant_factors_from_orders([1]) == []


def test_perm_group_closure():
    group = PermGroup.from_generators([(1, 2, 0), (1, 0, 2)], 3)
    assert group.order == 6
    assert not abelian_invariants(group).abelian
    assert (0, 2, 1) in group
    assert PermGroup.trivial(3).is_subgroup_of(group)


def test_cycle_notation():
    assert cycles((1, 0, 2), lambda i: "xyz"[i]) == "(x y)"

import pytest

from utils.errors import BoundExceededError, InvalidSpecError, NonUnitError
from wzw.autoeq.search import enumerate_fusion_autos
from wzw.constructions.g2_algebras import g2_decompose, g2_exceptional_automorphism, g2_full_algebra, \
    search_space_size
from wzw.constructions.lie_symmetries import charge_conjugation, sp_levelrank_transpose, transpose_weight
from wzw.constructions.so_level2 import galois_twist_row, presentation_twists, so_level2_galois, \
    so_level2_presentation, so_level2_ring, x_swap
from wzw.constructions.tambara_yamagami import TYCategory, level2_category, ty_autgroup, ty_chi_inverse_map, \
    ty_pentagon_check
from wzw.exact.phases import RationalPhase
from wzw.fusion.ring import verify_ring
from wzw.lie.algebra import Weight


class TestLieSymmetries:
    def test_charge_conjugation(self, ring_of):
        ring, _ = ring_of('A', 2, 2)
        auto = charge_conjugation(ring)
        assert auto(ring.index_of((1, 0))) == ring.index_of((0, 1))
        assert auto(ring.index_of((1, 1))) == ring.index_of((1, 1))

    def test_charge_conjugation_rank3(self, ring_of):
        ring, _ = ring_of('A', 3, 2)
        auto = charge_conjugation(ring)
        assert auto(ring.index_of((1, 0, 0))) == ring.index_of((0, 0, 1))
        assert auto(ring.index_of((0, 1, 0))) == ring.index_of((0, 1, 0))
        assert auto.perm in enumerate_fusion_autos(ring)

    def test_transpose_weight(self):
        assert transpose_weight(Weight.of(1, 0), 2) == Weight.of(1, 0)
        assert transpose_weight(Weight.of(0, 1), 2) == Weight.of(2, 0)
        assert transpose_weight(Weight.of(3, 0), 2) is None

    def test_sp_transpose(self, ring_of):
        ring, _ = ring_of('C', 2, 2)
        auto = sp_levelrank_transpose(ring)
        lam1 = ring.index_of((1, 0))
        assert auto(lam1) == lam1
        assert not auto.is_identity()
        assert auto.compose(auto).is_identity()
        assert auto.perm in enumerate_fusion_autos(ring)


class TestSoLevel2:
    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_presentation_is_a_ring(self, r):
        assert verify_ring(so_level2_ring(r)) == []

    def test_rank_one_rejected(self):
        with pytest.raises(InvalidSpecError):
            so_level2_ring(1)

    def test_twists(self):
        twists = presentation_twists(3)
        assert twists[2] == RationalPhase(3, 8)
        for j in range(1, 4):
            assert twists[3 + j] == RationalPhase(j * j * 3, 7)

    def test_labeling_matches_kac_walton(self):
        pres = so_level2_presentation(2)
        dictionary = pres.dictionary()
        assert len(dictionary) == 6
        assert dictionary['1'] == '[0,0]'
        assert dictionary['Z'] == '[2,0]'

    def test_galois_maps(self):
        pres = so_level2_presentation(2)
        g2 = so_level2_galois(pres, 2)
        assert g2(4) == 5 and g2(5) == 4
        assert so_level2_galois(pres, 4).is_identity()
        assert pres.transport(x_swap(pres)).perm in enumerate_fusion_autos(pres.kw_ring)

    def test_galois_twist_rows(self):
        pres = so_level2_presentation(2)
        row = galois_twist_row(pres, 2)
        assert row['square_is_minus_one'] and not row['twist_preserving']
        row = galois_twist_row(pres, 4)
        assert row['square_is_one'] and row['twist_preserving']

    def test_non_unit(self):
        pres = so_level2_presentation(4)
        with pytest.raises(NonUnitError):
            so_level2_galois(pres, 3)


class TestTambaraYamagami:
    @pytest.mark.parametrize("m", [1, 2, 3, 5])
    @pytest.mark.parametrize("tau", [1, -1])
    def test_pentagon(self, m, tau):
        report = ty_pentagon_check(TYCategory(m, 1, tau))
        assert report.equations > 0
        assert report.passed, report.max_residual

    def test_level2_pentagon(self):
        assert ty_pentagon_check(level2_category(2)).passed

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            ty_pentagon_check(TYCategory(11))

    def test_degenerate_character(self):
        with pytest.raises(InvalidSpecError):
            TYCategory(6, 2)

    def test_automorphisms(self):
        assert ty_autgroup(TYCategory(7)) == (1, 6)
        assert ty_autgroup(level2_category(2)) == (1, 4)
        assert ty_chi_inverse_map(level2_category(2), 2)
        assert not ty_chi_inverse_map(level2_category(2), 4)


class TestG2Algebras:
    def test_exceptional_automorphism(self, ring_of):
        ring, twists = ring_of('G2', 2, 4)
        auto = g2_exceptional_automorphism(ring)
        assert auto(ring.index_of((1, 0))) == ring.index_of((0, 2))
        assert all(twists[auto(i)] == twists[i] for i in range(ring.size))

    def test_unique_decomposition(self, ring_of):
        ring, _ = ring_of('G2', 2, 4)
        target = g2_full_algebra(ring, g2_exceptional_automorphism(ring))
        assert target == (5, 4, 8, 9, 5, 5, 12, 10, 4)
        assert g2_decompose(target) == [('A3', 'A4', 'A4', 'A5', 'A5')]

    def test_trivial_targets(self):
        assert g2_decompose((5, 0, 0, 5, 5, 5, 0, 0, 0)) == [('A1',) * 5]
        assert g2_decompose((0,) * 9) == []

    def test_search_space(self):
        assert search_space_size() == 1287

import sympy
import pytest

from utils.errors import InvalidSpecError
from wzw.skein.systems import SYSTEMS, bmw_system, g2_system, ph_system, phi2_values, solution_families
from wzw.skein.verify import family_table, locus_condition, locus_scan, specialize_to_category, \
    verify_family, verify_radical_family, verify_solution


def _family(system, name):
    return next(f for f in solution_families(system) if f.name == name)


class TestBMW:
    def setup_method(self):
        self.system = bmw_system()

    def test_identity(self):
        report = verify_family(self.system, _family('BMW', 'identity'))
        assert report.passed

    def test_negative_crossing_breaks_only_the_kink(self):
        family = _family('BMW', 'negative-crossing')
        report = verify_family(self.system, family)
        assert report.failing() == ['kink']
        assert report.displayed_passed
        r = sympy.Symbol('r')
        assert sympy.expand(locus_condition(self.system, family) - (r ** 2 + 1)) == 0

    def test_arbitrary_assignment_fails(self):
        report = verify_solution(self.system, {'alpha': 1, 'beta': 1, 'gamma': 1})
        assert not report.passed


class TestPH:
    def setup_method(self):
        self.system = ph_system()

    def test_equation_count(self):
        assert len(self.system.equations) == 11
        assert sum(eq.displayed for eq in self.system.equations) == 7

    @pytest.mark.parametrize("name", ['phi1++', 'phi1--'])
    def test_diagonal_signs_hold_identically(self, name):
        family = _family('PH', name)
        assert verify_family(self.system, family).passed
        assert locus_condition(self.system, family) == 1

    def test_mixed_signs_need_gamma_one(self):
        family = _family('PH', 'phi1+-')
        report = verify_family(self.system, family)
        assert report.displayed_passed
        assert not report.passed
        gamma = sympy.Symbol('gamma')
        assert sympy.expand(locus_condition(self.system, family) - (gamma - 1)) == 0

    def test_swap_family_lives_on_gamma_one(self):
        family = _family('PH', 'phi3++')
        assert verify_family(self.system, family).passed
        gamma = sympy.Symbol('gamma')
        assert sympy.expand(locus_condition(self.system, family) - (gamma - 1)) == 0

    @pytest.mark.parametrize("name", ['phi2++', 'phi2--'])
    def test_radical_family_same_signs(self, name):
        report = verify_radical_family(self.system, _family('PH', name), samples=3)
        assert report.samples == 3
        assert report.passed
        assert locus_condition(self.system, _family('PH', name)) is None

    @pytest.mark.parametrize("name", ['phi2+-', 'phi2-+'])
    def test_radical_family_mixed_signs_fails(self, name):
        report = verify_radical_family(self.system, _family('PH', name), samples=2)
        assert report.displayed_passed
        assert not report.passed
        assert all(label[:3] in ('TSS', 'SSS') for label in report.failing())

    def test_radical_family_negation_flips_both_signs(self):
        sqrt = lambda x: x ** 0.5
        plus = phi2_values(3.0, 2.0, (1, 1), sqrt)
        minus = phi2_values(3.0, 2.0, (-1, -1), sqrt)
        assert all(minus[c] == pytest.approx(-plus[c]) for c in plus)
        mixed = phi2_values(3.0, 2.0, (-1, 1), sqrt)
        assert mixed['c3'] == pytest.approx(plus['c3'])


class TestG2:
    def test_sign_flips(self):
        system = g2_system()
        assert verify_family(system, _family('G2', 'alpha=1')).passed
        assert verify_family(system, _family('G2', 'alpha=-1')).passed
        assert not verify_family(system, _family('G2', 'alpha=2')).passed


@pytest.mark.slow
@pytest.mark.parametrize("system", list(SYSTEMS))
def test_every_family_behaves_as_claimed(system):
    rows = family_table(system)
    assert rows
    assert all(row['consistent'] for row in rows), [row for row in rows if not row['consistent']]


class TestSpecialization:
    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_symplectic_rank_equals_level(self, r):
        params = specialize_to_category('C', r, r)
        assert params.on_locus
        assert params.exact_on_locus

    def test_symplectic_off_locus(self):
        params = specialize_to_category('C', 2, 3)
        assert not params.on_locus
        assert params.exact_on_locus is False

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_orthogonal(self, r):
        assert specialize_to_category('B', r, 2 * r + 1).exact_on_locus
        assert not specialize_to_category('B', r, 2 * r).exact_on_locus

    def test_type_a(self):
        assert specialize_to_category('A', 2, 3).on_locus
        assert not specialize_to_category('A', 2, 2).on_locus
        with pytest.raises(InvalidSpecError):
            specialize_to_category('A', 1, 2)

    def test_scan(self):
        rows = locus_scan(max_rank=3, max_level=8)
        found = {(row['family'], row['rank'], row['level']) for row in rows}
        assert {('C', 1, 1), ('C', 2, 2), ('C', 3, 3)} <= found
        assert {('B', 1, 3), ('B', 2, 5), ('B', 3, 7)} <= found
        assert ('A', 2, 3) in found
        assert not {(f, r, k) for f, r, k in found if f == 'C' and r != k}
        assert not {(f, r, k) for f, r, k in found if f == 'B' and k != 2 * r + 1}

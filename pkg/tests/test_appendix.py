from math import gcd

import pytest

from wzw.appendix.theorem_table import fuseq_closed_form, omega, predicted_invariants, smooth_part, \
    theorem_order, type_a_parameters
from wzw.appendix.unit_groups import appendix_grid, appendix_group, gnd_subgroup, iso_check, \
    local_structure_check, regular_structure


class TestUnitGroups:
    def test_appendix_group(self):
        group = appendix_group(4, 2)
        assert group.elements == (0, 1, 2, 3)
        assert group.d == 2
        assert group.multiply(1, 1) == 0
        assert group.invariants() == [2, 2]

    def test_gnd_subgroup(self):
        units = gnd_subgroup(8, 2)
        assert units.order == 8
        assert units.invariants() == [2, 4]

    @pytest.mark.parametrize("n, k", [(4, 2), (6, 4), (9, 3), (12, 6), (8, 4), (15, 5)])
    def test_iso_check(self, n, k):
        report = iso_check(n, k)
        assert report.passed
        assert report.appendix_invariants == report.unit_invariants

    @pytest.mark.parametrize("n, k", [(4, 2), (12, 8), (15, 5), (30, 12)])
    def test_multiplier_is_a_unit(self, n, k):
        report = iso_check(n, k)
        assert type(report.ell) is int
        assert gcd(report.ell, n) == 1
        assert report.ell * k % n == report.d == gcd(n, k)

    def test_regular_representation_agrees(self):
        assert list(regular_structure(12, 2).invariants) == appendix_group(12, 2).invariants()

    def test_local_structure(self):
        rows = local_structure_check(32)
        assert rows
        assert all(row['match'] for row in rows)

    def test_small_grid(self):
        assert all(row['match'] for row in appendix_grid(12, 6))


class TestTheoremTable:
    def test_smooth_part(self):
        assert smooth_part(12, 2) == 4
        assert smooth_part(12, 6) == 12
        assert smooth_part(9, 2) == 1
        assert omega(15) == 2

    def test_type_a_parameters(self):
        params = type_a_parameters(2, 3)
        assert (params.n, params.n_prime, params.n_dprime) == (3, 1, 3)
        assert (params.c, params.p, params.t) == (1, 0, 0)

    @pytest.mark.parametrize("family, rank, level, ten_aut, br_aut", [
        ('A', 1, 2, 1, 1),
        ('A', 2, 3, 6, 2),
        ('B', 7, 2, 4, 2),
        ('B', 4, 2, 2, 1),
        ('C', 2, 2, 4, 1),
        ('C', 2, 1, 1, 1),
        ('G2', 2, 4, 2, 2),
        ('G2', 2, 5, 1, 1),
    ])
    def test_predicted_orders(self, family, rank, level, ten_aut, br_aut):
        prediction = theorem_order(family, rank, level)
        assert (prediction.ten_aut, prediction.br_aut) == (ten_aut, br_aut)

    def test_predicted_invariants(self):
        assert predicted_invariants(2, 3) == [6]
        assert predicted_invariants(3, 2) == [2, 2]

    def test_fuseq_closed_form(self):
        assert fuseq_closed_form('B', 2, 2) == 4
        assert fuseq_closed_form('B', 4, 2) == 6
        assert fuseq_closed_form('G2', 2, 3) == 3
        assert fuseq_closed_form('A', 2, 3) == 6

import pytest

from wzw.lie.algebra import AlgebraSpec
from wzw.theorem_check.harness import ERROR, EXPECTED_GAP, FAIL, PASS, GridReport, VerificationRow, \
    constructed_group, grid_specs, is_expected_gap, load_config, named_autoequivalences, verify_grid, verify_spec


@pytest.mark.parametrize("family, rank, level, ten_aut, br_aut", [
    ('A', 2, 3, 6, 2),
    ('B', 2, 1, 1, 1),
    ('B', 2, 2, 4, 1),
    ('C', 2, 1, 1, 1),
    ('C', 2, 2, 4, 1),
    ('G2', 2, 4, 2, 2),
    ('G2', 2, 5, 1, 1),
])
def test_grid_points_pass(family, rank, level, ten_aut, br_aut):
    row = verify_spec(AlgebraSpec(family, rank, level))
    assert row.verdict == PASS, row.notes
    assert (row.constructed, row.constructed_braided) == (ten_aut, br_aut)
    assert row.fuseq == row.fuseq_closed_form
    assert row.subgroup


@pytest.mark.parametrize("family, rank, level", [('B', 3, 2), ('G2', 2, 3)])
def test_documented_gaps(family, rank, level):
    spec = AlgebraSpec(family, rank, level)
    assert is_expected_gap(spec)
    row = verify_spec(spec)
    assert row.verdict == EXPECTED_GAP
    assert row.fuseq > row.constructed == row.ten_aut


@pytest.mark.slow
def test_so15_level2():
    row = verify_spec(AlgebraSpec('B', 7, 2))
    assert row.verdict == EXPECTED_GAP, row.notes
    assert (row.constructed, row.constructed_braided) == (4, 2)
    assert row.fuseq == row.fuseq_closed_form == 8


def test_so5_level2_generators(ring_of):
    ring, twists = ring_of('B', 2, 2)
    names = [auto.name for auto in named_autoequivalences(ring, twists)]
    assert names[0] == 'F_1'
    assert 'S' in names and 'G2' in names
    group, _ = constructed_group(ring, twists)
    assert group.order == 4


def test_gap_not_listed_is_a_failure():
    config = load_config()
    config = {**config, 'expected_gaps': []}
    row = verify_spec(AlgebraSpec('G2', 2, 3), config)
    assert row.verdict == FAIL


def test_grid_specs():
    specs = grid_specs(families=['C', 'G2'], max_rank=3, max_level=2, g2_max_level=3)
    assert [str(s) for s in specs] == [
        '(C, 2, 1)', '(C, 2, 2)', '(C, 3, 1)', '(C, 3, 2)', '(G2, 2, 1)', '(G2, 2, 2)', '(G2, 2, 3)']


def test_grid_report_counts():
    report = GridReport([VerificationRow('A', 2, 3, verdict=PASS), VerificationRow('G2', 2, 3, verdict=EXPECTED_GAP),
                         VerificationRow('B', 2, 9, verdict=ERROR)])
    assert report.counts() == {PASS: 1, EXPECTED_GAP: 1, FAIL: 0, ERROR: 1}
    assert not report.passed
    assert report.summary()['failures'] == ['B2_9']


def test_small_grid():
    report = verify_grid(families=['G2'], g2_max_level=4, progress=False)
    assert report.passed
    assert [row.verdict for row in report.rows] == [PASS, PASS, EXPECTED_GAP, PASS]


@pytest.mark.slow
def test_default_grid():
    report = verify_grid(progress=False)
    assert report.passed, report.summary()
    specs = {row.spec for row in report.rows}
    assert {'A5_6', 'B5_6', 'C5_6', 'G22_8'} <= specs
    assert len(report.rows) == 5 * 6 + 2 * 4 * 6 + 8
    assert sorted(report.summary()['expected_gaps']) == ['B3_2', 'B4_2', 'B5_2', 'G22_3']

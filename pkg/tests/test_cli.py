import json

import pytest

from main import build_parser, main


@pytest.fixture
def run(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    log = str(tmp_path / 'logs' / 'run.log')

    def invoke(*argv):
        return main([*argv, '--log', log, '--quiet'])
    return invoke


def test_fusion_json(run, capsys):
    assert run('fusion', '--family', 'B', '--rank', '2', '--level', '2', '--json') == 0
    document = json.loads(capsys.readouterr().out)
    assert document['spec'] == '(B, 2, 2)'
    assert len(document['basis']) == 6


def test_autos_braided(run, capsys):
    assert run('autos', '--family', 'g2', '--level', '4', '--braided', '--json') == 0
    document = json.loads(capsys.readouterr().out)
    assert document['order'] == 2
    assert document['structure'] == 'Z2'


def test_tsv_output(run, capsys):
    assert run('modular-dump', '-f', 'A', '-r', '1', '-k', '2', '--tsv') == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split('\t')[:3] == ['weight', 'name', 'twist']
    assert len(lines) == 4


def test_results_file(run, tmp_path):
    out = tmp_path / 'g2.json'
    assert run('g2-algebras', '--out', str(out)) == 0
    document = json.loads(out.read_text(encoding='utf-8'))
    assert document['decompositions'] == [['A3', 'A4', 'A4', 'A5', 'A5']]


def test_invalid_family_exits_2(run, capsys):
    assert run('fusion', '--family', 'E', '--rank', '6', '--level', '1') == 2
    assert '--family' in capsys.readouterr().err


def test_invalid_level_exits_2(run):
    assert run('autos', '--family', 'A', '--rank', '2', '--level', '0') == 2


def test_weyl_bound_exits_1(run, capsys):
    assert run('modular-dump', '-f', 'C', '-r', '3', '-k', '1', '--verlinde', '--max-weyl', '10') == 1
    assert 'WeylBoundError' in capsys.readouterr().err


def test_theorem_check_writes_report(run, tmp_path):
    assert run('theorem-check', '--family', 'G2', '--g2-max-level', '3') == 0
    report = tmp_path / 'data' / 'processed' / 'theorem_check.tsv'
    assert report.exists()
    assert 'EXPECTED-GAP' in report.read_text(encoding='utf-8')


def test_log_file_receives_status(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    log = tmp_path / 'status.log'
    assert main(['ty', '--order', '3', '--log', str(log)]) == 0
    assert log.read_text(encoding='utf-8')


def test_parser_requires_a_verb():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])

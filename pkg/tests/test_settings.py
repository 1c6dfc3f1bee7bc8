import pytest

from utils.errors import InvalidSpecError
from utils.settings import Settings, get_settings, load_settings
from utils.validation_utils import normalize_family, validate_spec, validate_spec_flags


@pytest.fixture(autouse=True)
def restore_defaults(tmp_path):
    yield
    load_settings(str(tmp_path / 'absent.cfg'))


def test_defaults(tmp_path):
    settings = load_settings(str(tmp_path / 'absent.cfg'))
    assert settings == Settings()
    assert get_settings() is settings


def test_precedence(tmp_path, monkeypatch):
    config = tmp_path / 'wzw.cfg'
    config.write_text("MAX_WEYL=500\nSEED=7\nFLOAT_PREC=64\n", encoding='utf-8')
    monkeypatch.setenv('WZW_SEED', '11')
    settings = load_settings(str(config), {'float_prec': 200, 'max_alcove': None})
    assert settings.max_weyl == 500
    assert settings.seed == 11
    assert settings.float_prec == 200
    assert settings.max_alcove == Settings().max_alcove


def test_bad_values(tmp_path):
    config = tmp_path / 'wzw.cfg'
    config.write_text("MAX_WEYL=lots\n", encoding='utf-8')
    with pytest.raises(ValueError):
        load_settings(str(config))
    with pytest.raises(ValueError):
        load_settings(str(tmp_path / 'absent.cfg'), {'no_such_bound': 3})


def test_spec_flags():
    assert validate_spec_flags('g2', None, 3) == ('G2', 2, 3)
    assert normalize_family(' b ') == 'B'
    assert validate_spec('A', 1, 1)
    assert not validate_spec('A', 0, 1)
    with pytest.raises(InvalidSpecError) as info:
        validate_spec_flags('A', 2, 0)
    assert info.value.flag == '--level'

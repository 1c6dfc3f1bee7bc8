import os
import sys

import pytest

# Add src directory to Python path
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
sys.path.insert(0, os.path.join(project_root, 'src'))

from utils.settings import load_settings  # noqa: E402
from wzw.fusion.ring import build_ring  # noqa: E402
from wzw.lie.algebra import AlgebraSpec  # noqa: E402
from wzw.modular.twists import twist_table  # noqa: E402


@pytest.fixture(autouse=True, scope='session')
def default_settings(tmp_path_factory):
    """Settings from defaults only, whatever .env or wzw.cfg the machine has."""
    missing = tmp_path_factory.mktemp('cfg') / 'absent.cfg'
    for name in ('WZW_MAX_WEYL', 'WZW_MAX_ALCOVE', 'WZW_FLOAT_PREC', 'WZW_SEED'):
        os.environ.pop(name, None)
    return load_settings(str(missing))


@pytest.fixture(scope='module')
def ring_of():
    cache = {}

    def build(family, rank, level):
        key = (family, rank, level)
        if key not in cache:
            ring = build_ring(AlgebraSpec(family, rank, level))
            cache[key] = (ring, twist_table(ring))
        return cache[key]
    return build

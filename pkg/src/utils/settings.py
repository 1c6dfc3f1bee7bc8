import os
from dataclasses import dataclass, fields, replace
from dotenv import load_dotenv, dotenv_values
from utils.logging_utils import status

# Load environment variables from a .env file so bounds can be tuned per machine.
load_dotenv()

# --- Constants ---
CONFIG_PATH = os.getenv('WZW_CONFIG_PATH', 'wzw.cfg')

# Environment variables that override the matching Settings field.
ENV_OVERRIDES = {
    'WZW_MAX_WEYL': 'max_weyl',
    'WZW_MAX_ALCOVE': 'max_alcove',
    'WZW_FLOAT_PREC': 'float_prec',
    'WZW_SEED': 'seed',
}


@dataclass(frozen=True)
class Settings:
    max_weyl: int = 1_000_000
    max_alcove: int = 2000
    direct_fusion_max: int = 120
    full_associativity_max: int = 80
    associativity_samples: int = 64
    max_search_nodes: int = 200_000
    verlinde_max: int = 250
    ty_max_order: int = 9
    float_prec: int = 128
    skein_prec: int = 256
    skein_samples: int = 20
    skein_height: int = 10_000
    seed: int = 20240601


_current = None


def _coerce(name: str, raw):
    """Converts a raw config/env string to the type of the Settings field."""
    try:
        return int(str(raw).strip())
    except ValueError:
        raise ValueError(f"Setting '{name}' expects an integer, got '{raw}'")


def load_settings(config_path: str = None, overrides: dict = None) -> Settings:
    """
    Builds the effective Settings.

    Precedence from lowest to highest: dataclass defaults, the key=value config
    file, environment variables, explicit overrides (CLI flags).

    Args:
        config_path: Optional path to a key=value config file. Falls back to
            WZW_CONFIG_PATH; a missing file is not an error.
        overrides: Mapping of field name to value; None values are ignored.

    Returns:
        The Settings instance, also installed as the process-wide current one.
    """
    global _current
    known = {f.name for f in fields(Settings)}
    values = {}

    path = config_path or CONFIG_PATH
    if path and os.path.isfile(path):
        for key, raw in dotenv_values(path).items():
            name = key.strip().lower()
            if name not in known:
                status(f"⚠️ Warning: Unknown setting '{key}' in {path} ignored.")
                continue
            if raw is not None:
                values[name] = _coerce(name, raw)

    for env_name, field_name in ENV_OVERRIDES.items():
        raw = os.getenv(env_name)
        if raw:
            values[field_name] = _coerce(env_name, raw)

    for name, value in (overrides or {}).items():
        if value is not None:
            if name not in known:
                raise ValueError(f"Unknown setting '{name}'")
            values[name] = int(value)

    _current = replace(Settings(), **values)
    return _current


def get_settings() -> Settings:
    """Returns the current Settings, loading them on first use."""
    if _current is None:
        return load_settings()
    return _current

import os
import copy
import yaml
import logging
import pathlib as pl

from .errors import ConfigurationError

logger = logging.getLogger(__name__)

# Environment variable naming a user settings file
CONFIG_ENVIRONMENT_VARIABLE = 'METRICKIT_CONFIG'

DEFAULTS_FILEPATH = pl.Path(__file__).parent.joinpath('defaults.yml')

def _read_yaml(filepath):
    """
    Read a YAML mapping from disk
    """

    try:
        with open(filepath, 'r') as stream:
            data = yaml.safe_load(stream)
    except OSError as error:
        raise ConfigurationError(f'Failed to read settings file {filepath}: {error}') from None
    except yaml.YAMLError as error:
        raise ConfigurationError(f'Settings file {filepath} is not valid YAML: {error}') from None

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f'Settings file {filepath} must contain a mapping')

    return data

def _merge(base, override, prefix=''):
    """
    Deep-merge the override mapping into a copy of base
    """

    merged = copy.deepcopy(base)
    for key, value in override.items():
        if key not in base:
            raise ConfigurationError(f'Unknown setting: {prefix}{key}')
        if isinstance(base[key], dict):
            if not isinstance(value, dict):
                raise ConfigurationError(f'Setting {prefix}{key} must be a mapping')
            merged[key] = _merge(base[key], value, prefix=f'{prefix}{key}.')
        else:
            merged[key] = value

    return merged

def load_settings(filepath=None):
    """
    Load the package defaults and overlay a user settings file

    Keywords
    --------
    filepath : str or None
        Path to a YAML file; falls back to the METRICKIT_CONFIG environment
        variable, then to the defaults alone
    """

    settings = _read_yaml(DEFAULTS_FILEPATH)

    if filepath is None:
        filepath = os.environ.get(CONFIG_ENVIRONMENT_VARIABLE)

    if filepath is not None:
        logger.debug(f'Loading settings from {filepath}')
        settings = _merge(settings, _read_yaml(filepath))

    return settings

def apply_settings(filepath):
    """
    Replace the module-level settings in place (used by the CLI --config flag)
    """

    updated = load_settings(filepath)
    SETTINGS.clear()
    SETTINGS.update(updated)

    return SETTINGS

SETTINGS = load_settings()

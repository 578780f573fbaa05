#!/usr/bin/env python3
'''
Caps and budgets shared by every builder and check

The settings are read from the packaged `default_settings.yaml`, and any key
can be overridden from a user YAML or JSON file.

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'Settings',
    'load_settings',
    'get_settings',
    'set_settings',
    'override',
]

import json
import yaml
import typing
import logging
import contextlib
import dataclasses

from .errors import ConfigurationError
from .resources import get_path_to_settings


@dataclasses.dataclass(frozen=True)
class Settings:
    '''the caps and budgets, see `default_settings.yaml` for their meaning'''
    field_cap: int = 2**20
    element_cap: int = 10**5
    cayley_cap: int = 2048
    permutation_degree_cap: int = 64
    exhaustive_check_cap: int = 5000
    bound_digit_budget: int = 10**4
    desk_scale: int = 10**9
    search_budget: int = 2 * 10**5
    workers: int = 1

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigurationError(
                    f"setting '{field.name}' must be a positive integer, not {value!r}")


def _read_file(filename: str) -> 'dict[str, typing.Any]':
    with open(filename) as f:
        if filename.lower().endswith('json'):
            content = json.load(f)
        elif filename.lower().endswith(('yaml', 'yml')):
            content = yaml.safe_load(f)
        else:
            raise ConfigurationError(
                f"settings file `{filename}` must be JSON or YAML")
    if content is None:
        return {}
    if not isinstance(content, dict):
        raise ConfigurationError(
            f"settings file `{filename}` must contain a mapping")
    return content


def load_settings(filename: typing.Optional[str] = None) -> Settings:
    '''
    load the packaged defaults, then override them with the keys of `filename`

    @parameters :
    * `filename`    :   (optional) a YAML or JSON file with a subset of the keys

    @returns :
    * the resulting `Settings`
    '''
    values = _read_file(get_path_to_settings('default_settings.yaml'))
    if filename is not None:
        overrides = _read_file(filename)
        known = {field.name for field in dataclasses.fields(Settings)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise ConfigurationError(
                f"unknown settings in `{filename}`: {', '.join(unknown)}")
        values.update(overrides)
        logging.getLogger(__name__).debug(
            f"settings overridden from {filename}: {sorted(overrides)}")
    return Settings(**values)


_current = Settings()


def get_settings() -> Settings:
    '''the settings currently in effect'''
    return _current


def set_settings(settings: Settings) -> None:
    '''replace the settings currently in effect'''
    global _current
    if not isinstance(settings, Settings):
        raise TypeError(f"expected Settings, not {settings.__class__}")
    _current = settings


@contextlib.contextmanager
def override(**changes) -> typing.Iterator[Settings]:
    '''temporarily change some settings, e.g. `with override(element_cap=10):`'''
    previous = get_settings()
    try:
        set_settings(dataclasses.replace(previous, **changes))
    except TypeError as e:
        raise ConfigurationError(str(e)) from None
    try:
        yield get_settings()
    finally:
        set_settings(previous)

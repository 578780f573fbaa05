#!/usr/bin/env python3
'''
Tests of the settings layer

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

import json

import pytest

from FitBound.config import Settings, get_settings, load_settings, override, set_settings
from FitBound.errors import ConfigurationError


def test_packaged_defaults_match_the_dataclass():
    assert load_settings() == Settings()


def test_yaml_and_json_overrides(tmp_path):
    as_yaml = tmp_path / 'settings.yaml'
    as_yaml.write_text('element_cap: 5000\nworkers: 4\n')
    settings = load_settings(str(as_yaml))
    assert settings.element_cap == 5000
    assert settings.workers == 4
    assert settings.cayley_cap == Settings().cayley_cap

    as_json = tmp_path / 'settings.json'
    as_json.write_text(json.dumps({'search_budget': 12}))
    assert load_settings(str(as_json)).search_budget == 12


def test_empty_override_file(tmp_path):
    empty = tmp_path / 'settings.yaml'
    empty.write_text('# nothing\n')
    assert load_settings(str(empty)) == Settings()


@pytest.mark.parametrize('name, text', [
    ('unknown.yaml', 'colour: red\n'),
    ('negative.yaml', 'element_cap: -3\n'),
    ('float.yaml', 'element_cap: 2.5\n'),
    ('list.yaml', '- 1\n- 2\n'),
    ('settings.ini', 'element_cap = 3\n'),
])
def test_bad_settings_files(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    with pytest.raises(ConfigurationError):
        load_settings(str(path))


def test_set_settings_checks_its_type():
    with pytest.raises(TypeError):
        set_settings({'element_cap': 10})


def test_override_restores():
    before = get_settings()
    with override(element_cap=10) as settings:
        assert settings.element_cap == 10
        assert get_settings().element_cap == 10
    assert get_settings() is before


def test_override_restores_after_an_error():
    before = get_settings()
    with pytest.raises(RuntimeError):
        with override(workers=3):
            raise RuntimeError('boom')
    assert get_settings() is before


def test_override_rejects_unknown_names():
    with pytest.raises(ConfigurationError):
        with override(colour='red'):
            pass

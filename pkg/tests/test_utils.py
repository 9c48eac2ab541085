"""Tests for configuration loading and run settings."""

from argparse import Namespace

import pytest

from src.utils import (
    CACHE_ENV_VAR,
    DEFAULT_CONFIG,
    ConfigurationError,
    build_run_config,
    load_config,
    merge_defaults,
    resolve_cache_dir,
)


def test_merge_defaults_keeps_overrides():
    merged = merge_defaults({'computation': {'jobs': 4}, 'extra': {'x': 1}})
    assert merged['computation']['jobs'] == 4
    assert merged['computation']['seed'] == DEFAULT_CONFIG['computation']['seed']
    assert merged['extra'] == {'x': 1}
    assert merged['cache'] == DEFAULT_CONFIG['cache']


def test_load_config(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text("computation:\n  weight_bound: 4\noutput:\n  format: json\n", encoding='utf-8')
    config = load_config(str(path))
    assert config['computation']['weight_bound'] == 4
    assert config['output']['format'] == 'json'
    assert config['logging']['level'] == 'WARNING'


def test_load_config_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(str(tmp_path / 'missing.yaml'))
    path = tmp_path / 'list.yaml'
    path.write_text("- 1\n- 2\n", encoding='utf-8')
    with pytest.raises(ConfigurationError):
        load_config(str(path))


def test_cache_dir_precedence(config, monkeypatch):
    monkeypatch.delenv(CACHE_ENV_VAR, raising=False)
    assert resolve_cache_dir(config) == 'cache'
    monkeypatch.setenv(CACHE_ENV_VAR, '/tmp/env-cache')
    assert resolve_cache_dir(config) == '/tmp/env-cache'
    assert resolve_cache_dir(config, 'flag-cache') == 'flag-cache'


def test_run_config_flags_win(config):
    run = build_run_config(config, Namespace(genus=2, weight=3, format='json', jobs=2,
                                             cache_dir='here', seed=7))
    assert run.model == 'symplectic'
    assert run.genus == 2
    assert run.weight_bound == 3
    assert run.output_format == 'json'
    assert run.jobs == 2
    assert run.cache_dir == 'here'
    assert run.seed == 7


def test_run_config_defaults(config, monkeypatch):
    monkeypatch.delenv(CACHE_ENV_VAR, raising=False)
    run = build_run_config(config, Namespace(punctures=4))
    assert run.model == 'boundary'
    assert run.punctures == 4
    assert run.weight_bound == DEFAULT_CONFIG['computation']['weight_bound']
    assert run.cache_dir == 'cache'


def test_disabled_cache(config):
    config['cache']['enabled'] = False
    assert build_run_config(config, Namespace(genus=1)).cache_dir is None


@pytest.mark.parametrize('flags', [
    {'genus': 0},
    {'punctures': 2},
    {'weight': 0},
    {'jobs': 0},
    {'format': 'xml'},
    {'genus': 1, 'punctures': 3},
])
def test_run_config_rejects_bad_values(config, flags):
    with pytest.raises(ConfigurationError):
        build_run_config(config, Namespace(**flags))

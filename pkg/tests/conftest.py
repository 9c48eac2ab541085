"""Shared fixtures for the Johnson Lab test suite."""

import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.algebra.alphabet import Alphabet  # noqa: E402
from src.algebra.sampling import make_rng  # noqa: E402
from src.utils import DEFAULT_CONFIG, merge_defaults  # noqa: E402


@pytest.fixture
def g1():
    return Alphabet.symplectic(1)


@pytest.fixture
def g2():
    return Alphabet.symplectic(2)


@pytest.fixture
def three_punctured():
    return Alphabet.three_punctured()


@pytest.fixture
def rng():
    return make_rng(DEFAULT_CONFIG['computation']['seed'])


@pytest.fixture
def config():
    return merge_defaults({})


@pytest.fixture
def cache_dir(tmp_path):
    path = tmp_path / 'cache'
    path.mkdir()
    return str(path)

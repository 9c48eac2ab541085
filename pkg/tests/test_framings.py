"""Tests for the Arf invariant and orbit classification of framings."""

import pytest

from src.framings import (
    FramingData,
    OrbitKind,
    SccSample,
    arf,
    classify_orbit,
    quadratic_form,
)
from src.utils.errors import InsufficientData, ParseError


def test_odd_rotations_have_arf_zero():
    assert arf(FramingData(1, [1], [3])) == 0
    assert arf(FramingData(2, [1, -1], [3, 5])) == 0


def test_even_rotations():
    assert arf(FramingData(1, [0], [2])) == 1
    # two handles each contribute 1
    assert arf(FramingData(2, [0, 2], [4, 0])) == 0


def test_quadratic_form():
    framing = FramingData(1, [0], [1])
    assert quadratic_form(framing, [1, 0]) == 1
    assert quadratic_form(framing, [0, 1]) == 0
    # f(a + b) = f(a) + f(b) + 1
    assert quadratic_form(framing, [1, 1]) == 0
    with pytest.raises(ValueError):
        quadratic_form(framing, [1])


def test_higher_genus_orbit_is_arf():
    descriptor = classify_orbit(FramingData(2, [0, 1], [0, 1]))
    assert descriptor.kind is OrbitKind.ARF
    assert descriptor.arf == 1
    assert descriptor.describe() == "Arf 1"


def test_genus_one_gcd():
    framing = FramingData(1, [0], [2], scc=[SccSample(2), SccSample(4)])
    descriptor = classify_orbit(framing)
    assert descriptor.kind is OrbitKind.GCD
    assert descriptor.gcd == 2
    assert descriptor.arf == 1
    assert descriptor.parity_consistent


def test_genus_one_parity_mismatch():
    framing = FramingData(1, [0], [2], scc=[SccSample(3)])
    descriptor = classify_orbit(framing)
    assert not descriptor.parity_consistent
    assert "parity inconsistent" in descriptor.describe()


def test_sample_with_wrong_homology_parity():
    # rot 1 on class a has f = 0 but the basis gives f(a) = 1
    framing = FramingData(1, [0], [2], scc=[SccSample(2), SccSample(1, [1, 0])])
    descriptor = classify_orbit(framing)
    assert descriptor.inconsistent_samples == [1]
    assert not descriptor.parity_consistent


def test_genus_one_needs_samples():
    with pytest.raises(InsufficientData):
        classify_orbit(FramingData(1, [1], [1]))


def test_framing_dict_round_trip():
    framing = FramingData(1, [0], [2], scc=[SccSample(2), SccSample(4, [1, 1])])
    assert FramingData.from_dict(framing.to_dict()) == framing


def test_framing_validation():
    with pytest.raises(ValueError):
        FramingData(2, [1], [1, 1])
    with pytest.raises(ParseError):
        FramingData.from_dict({'genus': 1, 'rot_a': [0], 'rot_b': [2.5]})
    with pytest.raises(ParseError) as excinfo:
        FramingData.from_dict({'genus': 1, 'rot_a': [0], 'rot_b': [2], 'scc': ['x']})
    assert excinfo.value.location == '$.scc[0]'
    with pytest.raises(ParseError):
        FramingData.from_dict({'genus': 1, 'rot_a': [0, 1], 'rot_b': [2]})

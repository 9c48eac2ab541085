"""Tests for Sp characters, lambda operations and Moebius inversion."""

from math import comb

import pytest

from src.repring import (
    GradedSeries,
    RepElement,
    SpCharacter,
    adams,
    apply_operation,
    decompose,
    euler_series,
    exterior_power,
    irr_character,
    mobius_invert,
    normalize_partition,
    symmetric_power,
    weyl_dimension,
)
from src.utils.errors import InvariantViolation, ParseError


# ----------------------------------------------------------------------
# Irreducibles

@pytest.mark.parametrize('genus', [1, 2, 3])
def test_defining_representation(genus):
    assert irr_character([1], genus) == SpCharacter.defining(genus)
    assert irr_character([1], genus).dimension == 2 * genus


@pytest.mark.parametrize('partition, genus, dim', [
    ([2], 1, 3),
    ([1, 1], 2, 5),
    ([2, 2], 2, 14),
    ([1, 1, 1], 3, 14),
    ([2], 3, 21),
])
def test_weyl_dimension(partition, genus, dim):
    assert weyl_dimension(partition, genus) == dim
    assert irr_character(partition, genus).dimension == dim


def test_normalize_partition():
    assert normalize_partition([2, 1], 3) == (2, 1, 0)
    with pytest.raises(ValueError):
        normalize_partition([1, 2], 2)
    with pytest.raises(ValueError):
        normalize_partition([1, 1, 1], 2)


def test_decompose_requires_invariance():
    with pytest.raises(InvariantViolation):
        decompose(SpCharacter(1, {(1,): 1}))


def test_decompose_irreducible_round_trip():
    character = irr_character([2, 1], 2)
    assert decompose(character) == RepElement(2, {(2, 1): 1})
    assert decompose(character).character() == character


# ----------------------------------------------------------------------
# Lambda operations

def test_exterior_square_of_defining():
    h = SpCharacter.defining(2)
    assert decompose(exterior_power(h, 2)) == RepElement(2, {(1, 1): 1, (): 1})
    assert decompose(symmetric_power(h, 2)) == RepElement(2, {(2,): 1})


def test_exterior_cube_genus_three():
    h = SpCharacter.defining(3)
    assert decompose(exterior_power(h, 3)) == RepElement(3, {(1, 1, 1): 1, (1,): 1})


def test_exterior_square_of_u():
    u = irr_character([1, 1, 1], 3)
    assert decompose(exterior_power(u, 2)) == RepElement(3, {(): 1, (2, 2): 1})


@pytest.mark.parametrize('genus', [1, 2, 3])
def test_exterior_power_dimensions(genus):
    h = SpCharacter.defining(genus)
    for k in range(2 * genus + 1):
        assert exterior_power(h, k).dimension == comb(2 * genus, k)
    difference = symmetric_power(h, 2) - exterior_power(h, 2)
    assert difference.dimension == 2 * genus


def test_adams_square_is_sym_minus_lambda():
    h = SpCharacter.defining(1)
    assert adams(h, 2) == symmetric_power(h, 2) - exterior_power(h, 2)
    assert decompose(adams(h, 2)) == RepElement(1, {(2,): 1, (): -1})


def test_operations_on_dimensions():
    assert apply_operation(4, 'lambda', 2) == 6
    assert apply_operation(4, 'sym', 2) == 10
    assert apply_operation(4, 'psi', 3) == 4
    with pytest.raises(ValueError):
        apply_operation(4, 'wedge', 2)


def test_rep_element_arithmetic():
    x = RepElement(2, {(1,): 2, (): 1})
    assert x.dimension == 9
    assert (x - x) == RepElement(2)
    assert x.multiplicity([1, 0]) == 2


def test_rep_element_parsing():
    assert RepElement.from_dict({'[1]': 2, '[]': 1}, 2) == RepElement(2, {(1,): 2, (): 1})
    with pytest.raises(ParseError):
        RepElement.from_dict({'1': 2}, 2)
    with pytest.raises(ParseError):
        RepElement.from_dict({'[1,1,1]': 1}, 2)
    with pytest.raises(ParseError):
        RepElement.from_dict({'[1]': 'two'}, 2)


# ----------------------------------------------------------------------
# Moebius inversion

def test_free_lie_algebra_dimensions():
    h = mobius_invert(GradedSeries([1, -2]), 6)
    assert h.entries == [0, 2, 1, 2, 3, 6, 9]


def test_free_abelian_series():
    h = mobius_invert(GradedSeries([1, -2, 1]), 5)
    assert h.entries == [0, 2, 0, 0, 0, 0]


def test_trivial_series():
    assert mobius_invert(GradedSeries([1]), 4).entries == [0] * 5


def test_euler_series_inverts_mobius():
    phi = GradedSeries([1, -3, 1])
    h = mobius_invert(phi, 5)
    assert euler_series(h, 5).entries == [1, -3, 1, 0, 0, 0]


def test_character_mode_free_lie_algebra():
    phi = GradedSeries.from_list([1, {'[1]': -1}], genus=1)
    h = mobius_invert(phi, 3)
    assert h[1] == RepElement(1, {(1,): 1})
    assert h[2] == RepElement(1, {(): 1})
    assert h[3] == RepElement(1, {(1,): 1})
    assert h.dimensions() == [0, 2, 1, 2]


def test_series_needs_invertible_constant():
    with pytest.raises(ValueError):
        mobius_invert(GradedSeries([2, 1]), 3)
    with pytest.raises(ValueError):
        mobius_invert(GradedSeries([1, -2]), 0)


def test_series_parsing_errors():
    with pytest.raises(ParseError):
        GradedSeries.from_list({'0': 1})
    with pytest.raises(ParseError) as excinfo:
        GradedSeries.from_list([1, {'[1]': -1}])
    assert excinfo.value.location == '$[1]'
    with pytest.raises(ParseError):
        GradedSeries.from_list([1, True])
    with pytest.raises(ParseError) as excinfo:
        GradedSeries.from_list([2, 1])
    assert excinfo.value.location == '$[0]'
    with pytest.raises(ParseError):
        GradedSeries.from_list([])
    with pytest.raises(ParseError):
        GradedSeries.from_list([{'[1]': 1}], genus=1)

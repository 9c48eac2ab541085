"""Tests for alphabets, words, sparse polynomials, serialization and linear algebra."""

import pytest
from sympy import QQ

from src.algebra.alphabet import Alphabet
from src.algebra.linalg import RowReducer, map_blocks, nullspace_rows, rank, solve_unique
from src.algebra.poly import (
    CyclicPoly,
    LiePoly,
    TensorPoly,
    boundary_power,
    change_eliminated,
    cyclic_project,
    is_lie_element,
    letter_degree,
    pbw_symmetrize,
    tensor_to_lie,
)
from src.algebra.sampling import random_lie, random_tensor
from src.algebra.serialization import (
    dumps,
    loads_json,
    loads_poly,
    parse_coefficient,
    parse_compact_word,
    poly_from_dict,
)
from src.algebra.sym import power_operation, sym_component_project, sym_dimensions
from src.algebra.words import (
    canonical_rotation,
    lyndon_words,
    necklace_count,
    necklaces,
    period,
    standard_factorization,
    witt_dimension,
)
from src.utils.errors import InvariantViolation, ModelMismatch, NotALieElement, ParseError


# ----------------------------------------------------------------------
# Alphabets

def test_symplectic_pairing(g1):
    assert g1.names == ('a1', 'b1')
    assert g1.pairing(0, 1) == 1
    assert g1.pairing(1, 0) == -1
    assert g1.pairing(0, 0) == 0


def test_pairing_of_linear_forms(g2):
    # <a1 + a2, b1 - b2> = 1 - 1
    assert g2.pairing({0: 1, 2: 1}, {1: 1, 3: -1}) == 0
    assert g2.pairing({0: 2}, {1: 3}) == 6


def test_boundary_model_has_no_pairing():
    alphabet = Alphabet.boundary(4)
    with pytest.raises(ModelMismatch):
        alphabet.pairing(0, 1)


def test_boundary_letters_and_elimination():
    alphabet = Alphabet.boundary(4)
    assert alphabet.names == ('e1', 'e2', 'e3')
    assert alphabet.expand('e0') == {0: -1, 1: -1, 2: -1}
    with pytest.raises(ParseError, match='eliminated'):
        alphabet.index('e0')
    with pytest.raises(ParseError):
        alphabet.index('e7')


def test_three_punctured_labels(three_punctured):
    assert three_punctured.names == ('e0', 'einf')
    assert three_punctured.puncture_index('inf') == 2
    assert three_punctured.puncture_index('e1') == 1
    assert three_punctured.letter_of_puncture(1) is None


def test_alphabet_dict_round_trip(three_punctured, g2):
    for alphabet in (three_punctured, g2):
        assert Alphabet.from_dict(alphabet.to_dict()) == alphabet


def test_word_weight(g2):
    # a1 b2 b2 -> (+1, -2)
    assert g2.word_weight((0, 3, 3)) == (1, -2)


# ----------------------------------------------------------------------
# Words

def test_lyndon_words_two_letters():
    assert list(lyndon_words(2, 3)) == [(0, 0, 1), (0, 1, 1)]


def test_witt_dimensions_genus_one():
    assert [witt_dimension(2, n) for n in range(1, 7)] == [2, 1, 2, 3, 6, 9]
    for n in range(1, 7):
        assert len(list(lyndon_words(2, n))) == witt_dimension(2, n)


def test_necklace_count():
    assert necklace_count(2, 4) == 6
    assert len(necklaces(2, 4)) == 6
    assert necklace_count(4, 3) == len(necklaces(4, 3)) == 24


def test_standard_factorization():
    assert standard_factorization((0, 0, 1)) == ((0,), (0, 1))
    with pytest.raises(ValueError):
        standard_factorization((1, 0))


def test_rotations_and_period():
    assert canonical_rotation((1, 0, 0)) == (0, 0, 1)
    assert period((0, 1, 0, 1)) == 2
    assert period((0, 0, 1)) == 3


# ----------------------------------------------------------------------
# Polynomials

def test_pbw_symmetrize_two_letters(g1):
    u, v = TensorPoly.letter(g1, 0), TensorPoly.letter(g1, 1)
    expected = TensorPoly(g1, {(0, 1): QQ(1, 2), (1, 0): QQ(1, 2)})
    assert pbw_symmetrize([u, v]) == expected
    assert pbw_symmetrize([], g1) == TensorPoly.one(g1)


def test_tensor_to_lie(g1):
    a, b = TensorPoly.letter(g1, 0), TensorPoly.letter(g1, 1)
    assert tensor_to_lie(a.bracket(b)) == LiePoly.lyndon(g1, (0, 1))
    assert is_lie_element(a.bracket(b))
    assert not is_lie_element(a * b)
    with pytest.raises(NotALieElement):
        tensor_to_lie(a * b)


def test_lie_jacobi_on_random_elements(g2, rng):
    for _ in range(3):
        x, y, z = (random_lie(g2, d, rng) for d in (1, 1, 2))
        residual = x.bracket(y.bracket(z)) + y.bracket(z.bracket(x)) + z.bracket(x.bracket(y))
        assert residual.is_zero()


def test_lie_tensor_round_trip(g2, rng):
    u = random_lie(g2, 3, rng)
    assert tensor_to_lie(u.tensor) == u


def test_cyclic_words(g1):
    assert CyclicPoly.word(g1, (1, 0)) == CyclicPoly.word(g1, (0, 1))
    a, b = TensorPoly.letter(g1, 0), TensorPoly.letter(g1, 1)
    assert cyclic_project(a.bracket(b)).is_zero()
    assert boundary_power(g1, 1).is_zero()
    assert not boundary_power(g1, 2).is_zero()


def test_linear_structure(g1, rng):
    t = random_tensor(g1, 3, rng)
    assert (t - t).is_zero()
    assert t + 0 is t
    assert (t.scale(QQ(1, 3)) * 3) == t


def test_change_eliminated_round_trip(rng):
    alphabet = Alphabet.boundary(4)
    t = random_tensor(alphabet, 3, rng)
    moved = change_eliminated(t, 2)
    assert moved.alphabet.eliminated == 2
    assert change_eliminated(moved, 0) == t


def test_letter_degree_of_eliminated_puncture():
    alphabet = Alphabet.boundary(3)
    e1 = TensorPoly.letter(alphabet, 0)
    # e0 = -(e1 + e2) carries no e0 in any word of e1 e1
    assert letter_degree(e1 * e1, 1) == 2
    assert letter_degree(e1 * e1, 0) == 0
    assert letter_degree(TensorPoly.zero(alphabet), 1) is None


# ----------------------------------------------------------------------
# Serialization

def test_parse_coefficient():
    assert parse_coefficient('-3/2') == QQ(-3, 2)
    assert parse_coefficient('7') == QQ(7)
    assert parse_coefficient(4) == QQ(4)


def test_unicode_minus_is_rejected():
    with pytest.raises(ParseError) as excinfo:
        parse_coefficient('−1', '$.terms[0].coef')
    assert excinfo.value.offset == 0
    assert excinfo.value.location == '$.terms[0].coef'


@pytest.mark.parametrize('text', ['1/0', '1.5', '', '2/'])
def test_malformed_coefficients(text):
    with pytest.raises(ParseError):
        parse_coefficient(text)


def test_serialization_round_trip(g2, rng):
    values = [random_tensor(g2, 3, rng), cyclic_project(random_tensor(g2, 4, rng)), random_lie(g2, 3, rng)]
    for p in values:
        assert loads_poly(dumps(p)) == p


def test_eliminated_letter_is_expanded_on_input():
    data = {'model': 'boundary', 'punctures': 3, 'type': 'tensor',
            'terms': [{'coef': '1', 'word': ['e0']}]}
    alphabet = Alphabet.boundary(3)
    assert poly_from_dict(data) == TensorPoly(alphabet, {(0,): -1, (1,): -1})


def test_lie_terms_must_be_lyndon():
    data = {'model': 'symplectic', 'genus': 1, 'type': 'lie',
            'terms': [{'coef': '1', 'word': ['b1', 'a1']}]}
    with pytest.raises(ParseError) as excinfo:
        poly_from_dict(data)
    assert excinfo.value.location == '$.terms[0]'


def test_compact_words(g1):
    assert parse_compact_word(g1, 'a1.b1') == TensorPoly.word(g1, (0, 1))
    assert parse_compact_word(g1, '1') == TensorPoly.one(g1)


def test_bad_json():
    with pytest.raises(ParseError):
        loads_json('{"terms": ')


# ----------------------------------------------------------------------
# Symmetric power decomposition

def test_sym_component_of_a_letter(g1):
    a = CyclicPoly.word(g1, (0,))
    assert sym_component_project(a, 1) == a
    assert sym_component_project(a, 2).is_zero()


def test_power_operation_on_weight_two(g1):
    ab = CyclicPoly.word(g1, (0, 1))
    assert power_operation(ab, 2) == ab.scale(4)


def test_sym_dimensions_small_weights(g1):
    assert sym_dimensions(g1, 2) == {1: 0, 2: 3}
    assert sym_dimensions(g1, 3) == {1: 0, 2: 0, 3: 4}
    assert sum(sym_dimensions(g1, 4).values()) == necklace_count(2, 4)


def test_sym_components_sum_to_element(g1, rng):
    c = cyclic_project(random_tensor(g1, 4, rng))
    total = CyclicPoly.zero(g1)
    for n in range(1, 5):
        total = total + sym_component_project(c, n)
    assert total == c


# ----------------------------------------------------------------------
# Linear algebra

def test_nullspace_and_rank():
    assert len(nullspace_rows([{0: 1}, {0: 1}])) == 1
    assert rank([{0: 1}, {1: 1}, {0: 1, 1: 1}]) == 2
    assert rank([]) == 0


def test_solve_unique():
    assert solve_unique([{0: 1}, {1: 1}], {0: 2, 1: 3}) == {0: 2, 1: 3}
    with pytest.raises(InvariantViolation):
        solve_unique([{0: 1}, {0: 1}], {0: 1})


def test_row_reducer():
    reducer = RowReducer()
    assert reducer.add({'x': 1, 'y': 2})
    assert reducer.add({'y': 1})
    assert not reducer.add({'x': 3})
    assert reducer.rank == 2
    assert reducer.contains({'x': 1})


def test_map_blocks_keeps_order():
    assert map_blocks(lambda x: x * x, range(5), jobs=3) == [0, 1, 4, 9, 16]

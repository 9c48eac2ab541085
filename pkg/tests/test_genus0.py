"""Tests for genus-0 special derivations, divergence, depth and the polylog identity."""

import itertools

import pytest
from sympy import QQ

from src.algebra.alphabet import Alphabet
from src.algebra.poly import CyclicPoly, TensorPoly, cyclic_project, letter_degree
from src.genus0 import (
    RotationData,
    SpecialDer0,
    appendix_a_check,
    binomial_expansion,
    cocycle_defect,
    depth,
    depth_reduce,
    divergence,
    edge_map,
    ejk_generator,
    framing_change,
    in_depth,
    letter_degrees,
    mutated_relation,
    puncture_element,
    relations_check,
    sder_correspondence_rank,
    sder_from_sym2,
    sigma_polylog,
    sigma_special_residual,
    special_der_basis,
    sym2_framing_change,
)
from src.utils.errors import ModelMismatch, ParseError, Unsupported


@pytest.fixture
def five():
    return Alphabet.boundary(5)


def raw_ejk(alphabet, j, k):
    """e_{j,k} without normal form: u_j = -e_k, u_k = -e_j."""
    components = {j: -puncture_element(alphabet, k), k: -puncture_element(alphabet, j)}
    return SpecialDer0(alphabet, components, degree=1, normalize=False)


# ----------------------------------------------------------------------
# Pure braid generators

def test_ejk_on_its_own_punctures(five):
    d = raw_ejk(five, 1, 2)
    e1, e2, e3 = (puncture_element(five, p) for p in (1, 2, 3))
    assert d.apply(e1) == e1.bracket(e2)
    assert d.apply(e3).is_zero()
    assert d.is_special()


def test_normal_form_differs_by_an_inner_derivation(five):
    raw = raw_ejk(five, 1, 2)
    normal = ejk_generator(five, 1, 2)
    e0 = puncture_element(five, 0)
    for letter in five.letters:
        x = TensorPoly.letter(five, letter)
        assert raw.apply(x) - normal.apply(x) == e0.bracket(x)


def test_ejk_vanishes_on_three_punctures():
    assert ejk_generator(Alphabet.boundary(3), 1, 2).is_zero()
    assert ejk_generator(Alphabet.boundary(4), 2, 2).is_zero()


@pytest.mark.parametrize('n', [3, 4])
def test_pure_braid_relations(n):
    report = relations_check(n)
    assert report.holds, report.failures
    assert report.punctures == n + 1


def test_relation_count_on_four_punctures():
    # 4 sums, 3 disjoint pairs, 12 triangle relations
    assert relations_check(3).checked == 19


def test_disjoint_generators_commute(five):
    assert ejk_generator(five, 1, 2).bracket(ejk_generator(five, 3, 4)).is_zero()


def test_mutated_relation_does_not_vanish():
    assert not mutated_relation(3).is_zero()


def test_relations_need_three_punctures():
    with pytest.raises(ValueError):
        relations_check(1)


# ----------------------------------------------------------------------
# Special derivations

def test_special_derivations_live_on_boundary_model(g1):
    with pytest.raises(ModelMismatch):
        SpecialDer0(g1, {}, degree=1)


def test_base_component_is_subtracted():
    alphabet = Alphabet.boundary(4)
    e1, e2, e3 = (puncture_element(alphabet, p) for p in (1, 2, 3))
    w, v = e1.bracket(e2), e2.bracket(e3)
    shifted = SpecialDer0(alphabet, {0: w, 1: w + v, 3: w})
    assert shifted.degree == 2
    assert shifted == SpecialDer0(alphabet, {1: v, 2: -w}, degree=2)


def test_bracket_is_antisymmetric():
    alphabet = Alphabet.boundary(4)
    d1, d2 = ejk_generator(alphabet, 1, 2), ejk_generator(alphabet, 1, 3)
    assert (d1.bracket(d2) + d2.bracket(d1)).is_zero()


@pytest.mark.parametrize('degree, expected', [(1, 0), (2, 0), (3, 1)])
def test_three_punctured_dimensions(three_punctured, degree, expected):
    assert len(special_der_basis(three_punctured, degree)) == expected


@pytest.mark.parametrize('punctures, degree', [(3, 3), (4, 2)])
def test_cyclic_correspondence_is_injective(punctures, degree):
    alphabet = Alphabet.three_punctured() if punctures == 3 else Alphabet.boundary(punctures)
    result = sder_correspondence_rank(alphabet, degree)
    assert result['rank'] == result['dimension']


def test_special_derivation_dict_round_trip():
    d = ejk_generator(Alphabet.boundary(4), 1, 3)
    assert SpecialDer0.from_dict(d.to_dict()) == d


def test_special_derivation_parse_errors():
    with pytest.raises(ParseError):
        SpecialDer0.from_dict([])
    data = ejk_generator(Alphabet.boundary(4), 1, 3).to_dict()
    data['components'] = {'e9': data['components']['e1']}
    with pytest.raises(ParseError) as excinfo:
        SpecialDer0.from_dict(data)
    assert excinfo.value.location == '$.components.e9'


# ----------------------------------------------------------------------
# Divergence and edge map

def test_divergence_of_pure_braid_generator(five):
    # u_1 = -e_2 has no e_1 component, and likewise for u_2
    assert divergence(ejk_generator(five, 1, 2)).is_zero()
    assert divergence(raw_ejk(five, 1, 2)).is_zero()


def test_divergence_reads_own_letter_coefficients():
    alphabet = Alphabet.boundary(4)
    e1 = puncture_element(alphabet, 1)
    e2 = puncture_element(alphabet, 2)
    d = SpecialDer0(alphabet, {1: e1 * e2}, degree=2, normalize=False)
    assert divergence(d) == cyclic_project(e1 * e2)


def test_divergence_cocycle():
    alphabet = Alphabet.boundary(4)
    spanning = special_der_basis(alphabet, 1) + [mutated_relation(3)]
    for d1, d2 in itertools.product(spanning, repeat=2):
        assert cocycle_defect(d1, d2).is_zero()


def test_sym2_framing_change():
    alphabet = Alphabet.boundary(4)
    e1, e2, e3 = (puncture_element(alphabet, p) for p in (1, 2, 3))
    u, v = e1 + e2.scale(2), e3
    phi = RotationData({1: 1, 2: -1, 3: 2})
    expected = cyclic_project(u) - cyclic_project(v).scale(QQ(1, 2))
    assert sym2_framing_change(u, v, phi) == expected
    assert framing_change(sder_from_sym2(u, v), phi) == expected


def test_edge_map_adds_framing_correction():
    alphabet = Alphabet.boundary(4)
    d = SpecialDer0(alphabet, {1: puncture_element(alphabet, 2)}, degree=1, normalize=False)
    edge = edge_map(d, {1: 3})
    assert edge == divergence(d) + cyclic_project(puncture_element(alphabet, 2)).scale(3)
    assert edge_map(d, {}) == divergence(d)


def test_framing_change_counts_higher_degree_components():
    alphabet = Alphabet.boundary(4)
    e1, e2 = puncture_element(alphabet, 1), puncture_element(alphabet, 2)
    d = SpecialDer0(alphabet, {1: e1 * e2}, degree=2, normalize=False)
    phi = RotationData({1: 2, 3: 5})
    assert framing_change(d, phi) == cyclic_project(e1 * e2).scale(2)
    assert not framing_change(d, phi).is_zero()


def test_rotation_data_parsing():
    alphabet = Alphabet.boundary(4)
    phi = RotationData.from_dict({'e1': 1, '2': -1}, alphabet)
    assert phi.rotations == {1: 1, 2: -1}
    assert phi(3) == 0
    with pytest.raises(ParseError):
        RotationData.from_dict({'e1': 1.5}, alphabet)
    with pytest.raises(ParseError):
        RotationData.from_dict({'e8': 1}, alphabet)


def test_rotation_difference():
    phi = RotationData({1: 2})
    psi = RotationData({1: 1, 2: 1})
    assert (phi - psi).rotations == {1: 1, 2: -1}


# ----------------------------------------------------------------------
# Depth filtration

def test_depth_counts_all_three_letters(three_punctured):
    # [e0, einf] rewritten with e0 eliminated is e1.einf - einf.e1
    bracket = TensorPoly(three_punctured, {(0, 1): 1, (1, 0): -1})
    assert letter_degrees(bracket) == (1, 1, 1)
    assert depth(bracket) == 1
    assert in_depth(bracket, 1)
    assert not in_depth(bracket, 2)


def test_word_without_e1_has_depth_zero(three_punctured):
    c = CyclicPoly.word(three_punctured, (0, 0, 1, 1))
    assert letter_degrees(c) == (2, 0, 2)
    assert depth(c) == 0
    assert depth_reduce(c, 2) == c
    assert depth(TensorPoly.word(three_punctured, (0, 0))) == 0


def test_zero_lies_in_every_depth(three_punctured):
    zero = TensorPoly.zero(three_punctured)
    assert depth(zero) is None
    assert in_depth(zero, 5)


def test_depth_reduce_filters_term_by_term(three_punctured):
    bracket = TensorPoly(three_punctured, {(0, 1): 1, (1, 0): -1})
    # each word alone has e1-degree 0, only the combination lies in depth 1
    assert depth_reduce(bracket, 1) == bracket
    c = CyclicPoly(three_punctured, {(0, 1, 0, 1): 1, (0, 0, 0, 1): 1})
    pieces = [CyclicPoly.word(three_punctured, w) for w in ((0, 1, 0, 1), (0, 0, 0, 1))]
    assert depth_reduce(c, 2) == depth_reduce(pieces[0], 2) + depth_reduce(pieces[1], 2)
    assert depth_reduce(c, 2) == c


def test_depth_needs_three_punctures(g1):
    with pytest.raises(Unsupported):
        depth(TensorPoly.letter(g1, 0))
    with pytest.raises(Unsupported):
        depth_reduce(TensorPoly.letter(Alphabet.boundary(4), 0), 2)


def test_depth_bound_must_be_positive(three_punctured):
    with pytest.raises(ValueError):
        depth_reduce(TensorPoly.letter(three_punctured, 0), 0)


# ----------------------------------------------------------------------
# Polylogarithm derivation

@pytest.mark.parametrize('m', [1, 2, 3])
def test_polylog_divergence_identity(m):
    result = appendix_a_check(m)
    assert result.binomial_ok
    assert in_depth(result.residual, 2)
    assert result.holds


def test_binomial_expansion_for_m_one(three_punctured):
    # -(-2 e0 einf e0 + e0 e0 einf)
    expected = TensorPoly(three_punctured, {(0, 1, 0): 2, (0, 0, 1): -1})
    assert binomial_expansion(1) == expected


@pytest.mark.parametrize('m', [1, 2])
def test_sigma_is_special_modulo_high_e1_degree(m):
    residual = sigma_special_residual(m)
    assert residual.is_zero() or letter_degree(residual, '1') >= 2


def test_sigma_components_have_depth_one():
    sigma = sigma_polylog(2)
    assert sigma.degree == 5
    assert depth(sigma.component('0')) == 1
    assert depth(sigma.component('inf')) == 1


def test_sigma_needs_positive_m():
    with pytest.raises(ValueError):
        sigma_polylog(0)

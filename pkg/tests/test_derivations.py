"""Tests for theta-derivations, Johnson images, genus-one epsilons and mu."""

import pytest

from src.algebra.alphabet import Alphabet
from src.algebra.poly import TensorPoly, theta_tensor
from src.derivations import (
    PERTURBED_RELATION,
    cobracket_on_image,
    DerivationKind,
    ThetaDerivation,
    epsilon,
    epsilon_solution_dimension,
    es_trace,
    invariant_line_dimension,
    johnson_image,
    mu_odd,
    mu_squared,
    pollack_check,
    quadratic_relations,
    tau1,
    theta_der_basis,
    trace_rank,
    weight_table,
)
from src.derivations.genus_one import ad_b_power
from src.derivations.nakamura import sym_monomials
from src.repring import RepElement
from src.utils.errors import ModelMismatch, Unsupported


def test_degree_zero_is_sp():
    space = theta_der_basis(1, 0)
    assert space.dim == 3
    assert all(d.satisfies_theta() for d in space.basis)


def test_degree_one_genus_two():
    space = theta_der_basis(2, 1, DerivationKind.LIE)
    assert space.dim == 4


def test_tensor_kind_degree_minus_one():
    # constant values commute with every letter
    assert theta_der_basis(1, -1, DerivationKind.TENSOR).dim == 2
    assert theta_der_basis(2, -1, DerivationKind.TENSOR).dim == 4


def test_basis_is_independent_of_job_count():
    serial = theta_der_basis(2, 1, DerivationKind.LIE, jobs=1)
    threaded = theta_der_basis(2, 1, DerivationKind.LIE, jobs=4)
    assert serial.block_dimensions() == threaded.block_dimensions()
    assert all(threaded.contains(d) for d in serial.basis)


def test_weight_table_decomposes_into_irreducibles():
    table = dict(weight_table(1, 1))
    assert table[0] == RepElement(1, {(2,): 1})
    assert table[1].dimension == theta_der_basis(1, 1).dim


def test_tau1_kills_theta(g2):
    assert tau1(g2, 0, 1, 2).satisfies_theta()


def test_tau1_value():
    g3 = Alphabet.symplectic(3)
    d = tau1(g3, 'a1', 'a2', 'a3')
    a2, a3 = TensorPoly.letter(g3, 2), TensorPoly.letter(g3, 4)
    assert d.value(1) == -a2.bracket(a3)
    assert d.value(0).is_zero()


def test_johnson_image_degree_one_genus_three():
    assert johnson_image(3, 1).dim == 20


@pytest.mark.parametrize('genus', [2, 3])
def test_cobracket_rank_on_degree_one_image(genus):
    image = johnson_image(genus, 1)
    assert cobracket_on_image(image) == 2 * genus
    assert cobracket_on_image([]) == 0


@pytest.mark.parametrize('m', [2, pytest.param(3, marks=pytest.mark.slow)])
def test_trace_vanishes_on_johnson_image(m):
    image = johnson_image(3, m)
    assert image.dim > 0
    assert all(es_trace(d).is_zero() for d in image.basis)
    assert trace_rank(image.basis) == 0


@pytest.mark.parametrize('m', [2, pytest.param(3, marks=pytest.mark.slow)])
def test_cobracket_vanishes_on_johnson_image(m):
    assert cobracket_on_image(johnson_image(3, m)) == 0


def test_bracket_of_theta_derivations_kills_theta(g2):
    d1, d2 = tau1(g2, 0, 1, 2), tau1(g2, 1, 2, 3)
    bracket = d1.bracket(d2)
    assert bracket.degree == 2
    assert bracket.satisfies_theta()
    assert (bracket + d2.bracket(d1)).is_zero()


def test_derivation_apply_matches_values(g2):
    d = tau1(g2, 0, 1, 2)
    assert d.apply(TensorPoly.letter(g2, 1)) == d.value(1)
    assert d.apply(theta_tensor(g2)).is_zero()


def test_derivation_dict_round_trip(g2):
    d = tau1(g2, 0, 2, 3)
    assert ThetaDerivation.from_dict(d.to_dict()) == d


def test_split_by_weight(g2):
    d = tau1(g2, 0, 1, 2) + tau1(g2, 0, 2, 3)
    parts = d.split_by_weight()
    assert sum(parts.values(), ThetaDerivation.zero(g2, 1, DerivationKind.LIE)) == d
    assert all(part.weight == weight for weight, part in parts.items())


def test_mixing_kinds_is_rejected():
    lie = theta_der_basis(1, 0).basis[0]
    with pytest.raises(ModelMismatch):
        lie + lie.as_kind(DerivationKind.TENSOR)


# ----------------------------------------------------------------------
# Genus one

def test_epsilon_zero(g1):
    e0 = epsilon(0)
    assert e0.value(1) == TensorPoly.letter(g1, 0)
    assert e0.value(0).is_zero()


def test_epsilon_two(g1):
    a, b = TensorPoly.letter(g1, 0), TensorPoly.letter(g1, 1)
    assert epsilon(1).value(1) == b.bracket(b.bracket(a))
    assert ad_b_power(1) == b.bracket(b.bracket(a))


@pytest.mark.parametrize('n', [1, 2, 3])
def test_epsilon_is_unique_theta_derivation(n):
    assert epsilon_solution_dimension(n) == 1
    assert epsilon(n).satisfies_theta()
    assert epsilon(n).degree == 2 * n


def test_first_cusp_form_relation():
    result = pollack_check(1)
    assert result.holds
    assert result.describe() == "1[eps4, eps10] - 3[eps6, eps8]"


def test_perturbed_relation_fails():
    assert not pollack_check(coefficients=PERTURBED_RELATION).holds


def test_pollack_rejects_odd_indices():
    with pytest.raises(ValueError):
        pollack_check(coefficients=[(1, 3, 5)])
    with pytest.raises(ValueError):
        pollack_check(7)


@pytest.mark.slow
def test_second_cusp_form_relation():
    assert pollack_check(2).holds


# ----------------------------------------------------------------------
# Odd symmetric powers and trace

def test_mu_needs_genus_two():
    with pytest.raises(Unsupported):
        mu_odd(1, 1, ['a1', 'a1', 'b1'])


def test_mu_odd_is_a_theta_derivation():
    d = mu_odd(2, 1, ['a1', 'a1', 'b2'])
    assert d.degree == 3
    assert d.kind is DerivationKind.LIE
    assert d.satisfies_theta()
    assert mu_odd(2, 1, ['b2', 'a1', 'a1']) == d


def test_invariant_line_and_mu_squared():
    assert invariant_line_dimension(2, 1) == 1
    square = mu_squared(2, 1)
    assert square.degree == 6
    assert square.satisfies_theta()


def test_es_trace_degree(g2):
    d = mu_odd(2, 1, ['a1', 'a2', 'b1'])
    trace = es_trace(d)
    assert trace.is_zero() or trace.degree == 3


@pytest.mark.slow
def test_es_trace_is_injective_on_mu():
    monomials = sym_monomials(Alphabet.symplectic(2), 3)
    assert len(monomials) == 20
    assert trace_rank(mu_odd(2, 1, list(m)) for m in monomials) == 20


@pytest.mark.slow
def test_quadratic_relations_genus_three():
    assert quadratic_relations(3).dimension == 85

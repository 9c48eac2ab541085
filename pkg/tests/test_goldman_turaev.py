"""Tests for the Goldman bracket, Turaev cobracket and Kawazumi-Kuno action."""

import itertools

import pytest

from src.algebra.alphabet import Alphabet
from src.algebra.poly import CyclicPoly, TensorPoly, boundary_power
from src.algebra.sampling import random_cyclic
from src.algebra.sym import cyclic_basis
from src.goldman_turaev import (
    antisymmetry_residual,
    cojacobi_residual,
    compatibility_residual,
    goldman_bracket,
    involutivity_residual,
    jacobi_residual,
    kappa_derivation,
    kappa_inverse,
    kk_action,
    reduced_cobracket,
    turaev_cobracket,
)
from src.utils.errors import InvariantViolation, ModelMismatch


def word(alphabet, *letters):
    return CyclicPoly.word(alphabet, letters)


def small_basis(alphabet, max_weight):
    basis = []
    for n in range(1, max_weight + 1):
        basis.extend(cyclic_basis(alphabet, n))
    return basis


def test_bracket_of_dual_letters(g1):
    assert goldman_bracket(word(g1, 0), word(g1, 1)) == CyclicPoly.empty(g1)
    assert goldman_bracket(word(g1, 1), word(g1, 0)) == CyclicPoly.empty(g1, -1)


def test_bracket_of_unpaired_letters(g2):
    assert goldman_bracket(word(g2, 0), word(g2, 2)).is_zero()


def test_bracket_of_a1b1_with_a1(g1):
    assert goldman_bracket(word(g1, 0, 1), word(g1, 0)) == -word(g1, 0)


def test_bracket_rejects_boundary_model(three_punctured):
    c = CyclicPoly.word(three_punctured, (0, 1))
    with pytest.raises(ModelMismatch):
        goldman_bracket(c, c)


def test_cobracket_of_short_words(g1):
    assert turaev_cobracket(word(g1, 0)).is_zero()
    assert turaev_cobracket(word(g1, 0, 1)).is_zero()


def test_cobracket_is_antisymmetric(g2, rng):
    x = random_cyclic(g2, 5, rng)
    delta = turaev_cobracket(x)
    assert (delta + delta.swap()).is_zero()
    assert all(left and right for left, right in reduced_cobracket(x).terms)


def test_antisymmetry_and_jacobi_on_basis(g1):
    basis = small_basis(g1, 3)
    for x, y in itertools.product(basis, repeat=2):
        assert antisymmetry_residual(x, y).is_zero()
    for x, y, z in itertools.combinations(basis, 3):
        assert jacobi_residual(x, y, z).is_zero()


def test_jacobi_on_random_elements(g2, rng):
    for _ in range(3):
        x, y, z = (random_cyclic(g2, d, rng) for d in (2, 3, 3))
        assert jacobi_residual(x, y, z).is_zero()


def test_cojacobi_and_involutivity(g2):
    for c in small_basis(g2, 4):
        assert cojacobi_residual(c) == {}
        assert involutivity_residual(c).is_zero()


def test_compatibility(g1):
    basis = small_basis(g1, 3)
    for x, y in itertools.product(basis, repeat=2):
        assert compatibility_residual(x, y).is_zero()


def test_boundary_power_is_central(g2):
    theta_sq = boundary_power(g2, 2)
    for c in small_basis(g2, 3):
        assert goldman_bracket(theta_sq, c).is_zero()


def test_kk_action_on_letters(g1):
    a1 = TensorPoly.letter(g1, 0)
    b1 = TensorPoly.letter(g1, 1)
    assert kk_action(word(g1, 0), b1) == TensorPoly.one(g1)
    assert kk_action(word(g1, 0), a1).is_zero()
    assert kk_action(word(g1, 0, 0), b1) == a1.scale(2)


def test_kk_action_is_a_derivation(g2, rng):
    x = random_cyclic(g2, 3, rng)
    u = TensorPoly.word(g2, (0, 3))
    v = TensorPoly.word(g2, (1,))
    lhs = kk_action(x, u * v)
    rhs = kk_action(x, u) * v + u * kk_action(x, v)
    assert lhs == rhs


def test_kappa_inverse_round_trip(g2, rng):
    for weight in (2, 3, 4):
        x = random_cyclic(g2, weight, rng)
        assert kappa_inverse(kappa_derivation(x)) == x


def test_kappa_derivations_kill_theta(g2, rng):
    assert kappa_derivation(random_cyclic(g2, 4, rng)).satisfies_theta()


def test_kappa_inverse_rejects_non_image(g1):
    from src.derivations import DerivationKind, ThetaDerivation

    a1 = TensorPoly.letter(g1, 0)
    not_hamiltonian = ThetaDerivation(g1, 0, DerivationKind.TENSOR, {0: a1})
    with pytest.raises(InvariantViolation):
        kappa_inverse(not_hamiltonian)

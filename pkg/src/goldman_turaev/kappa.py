"""
Johnson Lab - Kawazumi-Kuno Action
Graded action of cyclic words on the tensor algebra by derivations.

kappa(|x|)(y) = sum_j <x_j, y> x_{j+1}...x_{j-1} on a letter y, extended
to words by the Leibniz rule.
"""

import logging
from typing import Dict

from sympy import QQ

from src.algebra.alphabet import letter_pairing
from src.algebra.poly import CyclicPoly, TensorPoly, cyclic_project
from src.algebra.words import canonical_rotation, period
from src.utils.errors import InvariantViolation

logger = logging.getLogger('johnsonlab.goldman_turaev.kappa')


def kappa_letter_values(x: CyclicPoly) -> Dict[int, TensorPoly]:
    """Values kappa(x)(letter) for every letter of the alphabet."""
    alphabet = x.alphabet
    alphabet.require_symplectic('kk_action')
    values: Dict[int, Dict[tuple, object]] = {letter: {} for letter in alphabet.letters}
    for word, coef in x.terms.items():
        for j, letter in enumerate(word):
            target = letter ^ 1
            sign = letter_pairing(letter, target)
            rest = word[j + 1:] + word[:j]
            bucket = values[target]
            bucket[rest] = bucket.get(rest, QQ(0)) + sign * coef
    return {letter: TensorPoly._wrap(alphabet, {w: c for w, c in terms.items() if c})
            for letter, terms in values.items()}


def apply_letter_derivation(values: Dict[int, TensorPoly], t: TensorPoly) -> TensorPoly:
    """Extend letter values to a derivation of T(H) and apply it to ``t``."""
    out: Dict[tuple, object] = {}
    for word, coef in t.terms.items():
        for k, letter in enumerate(word):
            image = values.get(letter)
            if image is None or not image.terms:
                continue
            prefix, suffix = word[:k], word[k + 1:]
            for w, c in image.terms.items():
                key = prefix + w + suffix
                out[key] = out.get(key, QQ(0)) + coef * c
    return TensorPoly._wrap(t.alphabet, {w: c for w, c in out.items() if c})


def kk_action(x: CyclicPoly, w: TensorPoly) -> TensorPoly:
    """
    Apply the derivation kappa(x) to a tensor polynomial.

    Raises:
        ModelMismatch: Boundary model or different alphabets
    """
    x.alphabet.check_same(w.alphabet)
    return apply_letter_derivation(kappa_letter_values(x), w)


def kappa_derivation(x: CyclicPoly):
    """
    kappa(x) as a tensor-kind derivation of degree weight(x) - 2.

    Raises:
        ValueError: If x is not homogeneous of positive weight
    """
    from src.derivations.derivation import DerivationKind, ThetaDerivation

    weight = x.degree
    if weight is None or weight < 1:
        raise ValueError("kappa_derivation needs a nonzero homogeneous element of weight >= 1")
    return ThetaDerivation(x.alphabet, weight - 2, DerivationKind.TENSOR, kappa_letter_values(x))


def kappa_inverse(derivation) -> CyclicPoly:
    """
    Cyclic preimage of a theta-derivation under kappa.

    The tensor X = sum_i a_i (x) D(b_i) - b_i (x) D(a_i) is the sum of all
    rotations of the preimage, so the coefficient of |w| is
    X[w] * period(w) / len(w).

    Raises:
        InvariantViolation: If X is not rotation invariant (D not in the image)
    """
    alphabet = derivation.alphabet
    alphabet.require_symplectic('kappa_inverse')
    rotated: Dict[tuple, object] = {}
    for letter in alphabet.letters:
        sign = letter_pairing(letter ^ 1, letter)
        first = letter ^ 1
        for w, c in derivation.value(letter).terms.items():
            key = (first,) + w
            rotated[key] = rotated.get(key, QQ(0)) + sign * c
    rotated = {k: c for k, c in rotated.items() if c}

    preimage: Dict[tuple, object] = {}
    for word, coef in rotated.items():
        key = canonical_rotation(word)
        if key not in preimage:
            preimage[key] = rotated.get(key, QQ(0)) * period(key) / len(key)
    result = CyclicPoly._wrap(alphabet, {k: c for k, c in preimage.items() if c})

    check: Dict[tuple, object] = {}
    for key, coef in result.terms.items():
        for j in range(len(key)):
            w = key[j:] + key[:j]
            check[w] = check.get(w, QQ(0)) + coef
    if {k: c for k, c in check.items() if c} != rotated:
        raise InvariantViolation("derivation is not in the image of kappa")
    return result


def der_on_cyclic(derivation, c: CyclicPoly) -> CyclicPoly:
    """Apply a derivation to a representative of ``c`` and project back."""
    derivation.alphabet.check_same(c.alphabet)
    return cyclic_project(derivation.apply(c.representatives()))

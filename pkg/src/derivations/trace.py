"""
Johnson Lab - Trace
Contraction of a symplectic derivation to cyclic words.
"""

from typing import Dict, Iterable

from sympy import QQ

from src.algebra.linalg import rank
from src.algebra.poly import CyclicPoly
from src.algebra.words import canonical_rotation
from .derivation import ThetaDerivation


def es_trace(derivation: ThetaDerivation) -> CyclicPoly:
    """
    Contract sum_i a_i (x) D(b_i) - b_i (x) D(a_i) along the pairing.

    Only <a_i, b_i> and <b_i, a_i> pair nontrivially, so for each letter x
    and each word w of D(x), every position k with w_k = x contributes
    |w_{k+1} ... w_{k-1}| with sign +1. A degree-m derivation maps to
    weight m.

    Raises:
        ModelMismatch: Boundary model
    """
    alphabet = derivation.alphabet
    alphabet.require_symplectic('es_trace')
    out: Dict[tuple, object] = {}
    for letter in alphabet.letters:
        for word, coef in derivation.value(letter).terms.items():
            for k, x in enumerate(word):
                if x != letter:
                    continue
                key = canonical_rotation(word[k + 1:] + word[:k])
                out[key] = out.get(key, QQ(0)) + coef
    return CyclicPoly._wrap(alphabet, {k: c for k, c in out.items() if c})


def trace_rank(derivations: Iterable[ThetaDerivation]) -> int:
    """Rank of es_trace on the span of ``derivations``."""
    return rank([es_trace(d).terms for d in derivations])

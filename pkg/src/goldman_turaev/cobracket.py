"""
Johnson Lab - Turaev Cobracket
Graded Turaev cobracket and the Lie bialgebra residual checks.

delta|x| = sum_{j<k} <x_j, x_k> (|inner| (x) |outer| - |outer| (x) |inner|)
with inner = x_{j+1}...x_{k-1} and outer = x_{k+1}...x_n x_1...x_{j-1}.
"""

import logging
from typing import Dict, Tuple

from sympy import QQ

from src.algebra.alphabet import letter_pairing
from src.algebra.poly import CyclicPair, CyclicPoly
from src.algebra.words import canonical_rotation
from .bracket import goldman_bracket

logger = logging.getLogger('johnsonlab.goldman_turaev.cobracket')

Triple = Tuple[tuple, tuple, tuple]


def turaev_cobracket(x: CyclicPoly) -> CyclicPair:
    """
    Cobracket of a cyclic polynomial; antisymmetric as a tensor.

    Raises:
        ModelMismatch: Boundary model
    """
    x.alphabet.require_symplectic('turaev_cobracket')
    out: Dict[tuple, object] = {}
    for word, coef in x.terms.items():
        n = len(word)
        for j in range(n):
            for k in range(j + 1, n):
                sign = letter_pairing(word[j], word[k])
                if not sign:
                    continue
                inner = canonical_rotation(word[j + 1:k])
                outer = canonical_rotation(word[k + 1:] + word[:j])
                value = sign * coef
                out[(inner, outer)] = out.get((inner, outer), QQ(0)) + value
                out[(outer, inner)] = out.get((outer, inner), QQ(0)) - value
    return CyclicPair._wrap(x.alphabet, {key: c for key, c in out.items() if c})


def reduced_cobracket(x: CyclicPoly) -> CyclicPair:
    """Cobracket with every empty-factor term removed."""
    return turaev_cobracket(x).reduced()


def _single(x: CyclicPoly, key: tuple) -> CyclicPoly:
    return CyclicPoly._wrap(x.alphabet, {key: QQ(1)})


def cojacobi_residual(x: CyclicPoly) -> Dict[Triple, object]:
    """
    (1 + tau + tau^2)(delta (x) 1) delta(x) with tau the cyclic shift.

    Returns:
        Nonzero terms of the residual as (left, middle, right) -> coefficient
    """
    first = turaev_cobracket(x)
    partial: Dict[Triple, object] = {}
    for (left, right), coef in first.terms.items():
        for (l2, r2), c2 in turaev_cobracket(_single(x, left)).terms.items():
            key = (l2, r2, right)
            partial[key] = partial.get(key, QQ(0)) + coef * c2
    residual: Dict[Triple, object] = {}
    for (p, q, r), coef in partial.items():
        for key in ((p, q, r), (r, p, q), (q, r, p)):
            residual[key] = residual.get(key, QQ(0)) + coef
    return {key: c for key, c in residual.items() if c}


def involutivity_residual(x: CyclicPoly) -> CyclicPoly:
    """Bracket applied to the cobracket: sum c {|p|, |q|} over delta(x)."""
    total = CyclicPoly.zero(x.alphabet)
    for (left, right), coef in turaev_cobracket(x).terms.items():
        total = total + goldman_bracket(_single(x, left), _single(x, right)).scale(coef)
    return total


def act_on_pair(x: CyclicPoly, pair: CyclicPair) -> CyclicPair:
    """x . (p (x) q) = {x, p} (x) q + p (x) {x, q}."""
    out: Dict[tuple, object] = {}
    for (left, right), coef in pair.terms.items():
        for key, c in goldman_bracket(x, _single(x, left)).terms.items():
            out[(key, right)] = out.get((key, right), QQ(0)) + coef * c
        for key, c in goldman_bracket(x, _single(x, right)).terms.items():
            out[(left, key)] = out.get((left, key), QQ(0)) + coef * c
    return CyclicPair._wrap(x.alphabet, {k: c for k, c in out.items() if c})


def compatibility_residual(x: CyclicPoly, y: CyclicPoly) -> CyclicPair:
    """delta{x, y} - x.delta(y) + y.delta(x)."""
    return (turaev_cobracket(goldman_bracket(x, y))
            - act_on_pair(x, turaev_cobracket(y))
            + act_on_pair(y, turaev_cobracket(x)))

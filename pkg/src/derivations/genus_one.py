"""
Johnson Lab - Genus One
The Eisenstein derivations eps_2n of L(a, b) and the quadratic relations
among their brackets coming from cusp forms.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ, binomial

from src.algebra.alphabet import Alphabet
from src.algebra.linalg import solution_dimension, solve_unique
from src.algebra.poly import TensorPoly, lyndon_tensor
from src.algebra.words import lyndon_words
from .derivation import DerivationKind, ThetaDerivation

logger = logging.getLogger('johnsonlab.derivations.genus_one')

A, B = 0, 1

# (coefficient, 2n, 2n') triples: sum of c * [eps_2n, eps_2n']
RELATIONS: Dict[int, List[Tuple[int, int, int]]] = {
    1: [(1, 4, 10), (-3, 6, 8)],
    2: [(2, 4, 14), (-7, 6, 12), (11, 8, 10)],
}

PERTURBED_RELATION: List[Tuple[int, int, int]] = [(1, 4, 10), (-2, 6, 8)]


def _genus_one() -> Alphabet:
    return Alphabet.symplectic(1)


def ad_b_power(n: int) -> TensorPoly:
    """ad_b^{2n}(a) = sum_j (-1)^j C(2n, j) b^{2n-j} a b^j."""
    alphabet = _genus_one()
    k = 2 * n
    terms = {}
    for j in range(k + 1):
        word = (B,) * (k - j) + (A,) + (B,) * j
        terms[word] = QQ((-1) ** j * int(binomial(k, j)))
    return TensorPoly(alphabet, terms)


def _epsilon_system(n: int):
    """Unknown Lie values for eps(a) and the theta-condition they must meet."""
    alphabet = _genus_one()
    b = TensorPoly.letter(alphabet, B)
    a = TensorPoly.letter(alphabet, A)
    # eps(a) has torus weight of two a's in degree 2n + 1
    unknowns = [w for w in lyndon_words(2, 2 * n + 1) if w.count(A) == 2]
    values = [TensorPoly(alphabet, dict(lyndon_tensor(w))) for w in unknowns]
    images = [v.bracket(b).terms for v in values]
    # [eps(a), b] + [a, eps(b)] = 0
    rhs = ad_b_power(n).bracket(a).terms
    return alphabet, values, images, rhs


@lru_cache(maxsize=None)
def epsilon(n: int) -> ThetaDerivation:
    """
    The degree-2n theta-derivation eps_2n with eps_2n(b) = ad_b^{2n}(a).

    eps_2n(a) is the unique Lie element making eps_2n kill theta.

    Raises:
        InvariantViolation: If the solve for eps_2n(a) is not unique
    """
    if n < 0:
        raise ValueError(f"eps_2n needs n >= 0, got {n}")
    alphabet, values, images, rhs = _epsilon_system(n)
    solution = solve_unique(images, rhs)
    value_a = TensorPoly.zero(alphabet)
    for j, c in solution.items():
        value_a = value_a + values[j].scale(c)
    logger.debug(f"eps_{2 * n}: {len(values)} unknowns, {len(value_a)} terms in eps(a)")
    return ThetaDerivation(alphabet, 2 * n, DerivationKind.LIE, {A: value_a, B: ad_b_power(n)})


def epsilon_solution_dimension(n: int) -> int:
    """Dimension of the augmented kernel of the eps_2n(a) system (1 when unique)."""
    _, _, images, rhs = _epsilon_system(n)
    return solution_dimension(images, rhs)


@dataclass
class PollackResult:
    """Outcome of one quadratic relation check."""
    which: Optional[int]
    terms: List[Tuple[int, int, int]]
    residual: ThetaDerivation
    holds: bool = field(init=False)

    def __post_init__(self):
        self.holds = self.residual.is_zero()

    def describe(self) -> str:
        parts = []
        for c, i, j in self.terms:
            sign = '-' if c < 0 else '+'
            parts.append(f"{sign} {abs(c)}[eps{i}, eps{j}]")
        text = ' '.join(parts)
        return text[2:] if text.startswith('+ ') else text


def pollack_check(which: Optional[int] = None,
                  coefficients: Optional[Sequence[Tuple[int, int, int]]] = None) -> PollackResult:
    """
    Evaluate sum c [eps_i, eps_j] exactly.

    Args:
        which: 1 or 2 for the two cusp-form relations
        coefficients: Explicit (c, i, j) triples instead of ``which``
    """
    if coefficients is None:
        if which not in RELATIONS:
            raise ValueError(f"unknown relation {which!r}; expected one of {sorted(RELATIONS)}")
        coefficients = RELATIONS[which]
    terms = [tuple(int(v) for v in t) for t in coefficients]
    for _, i, j in terms:
        if i % 2 or j % 2:
            raise ValueError(f"eps indices must be even, got {i} and {j}")

    residual: Optional[ThetaDerivation] = None
    for c, i, j in terms:
        term = epsilon(i // 2).bracket(epsilon(j // 2)).scale(c)
        residual = term if residual is None else residual + term
    if residual is None:
        residual = ThetaDerivation.zero(_genus_one(), 0, DerivationKind.LIE)
    result = PollackResult(which, terms, residual)
    if result.holds:
        logger.info(f"relation {result.describe()} holds")
    else:
        logger.warning(f"relation {result.describe()} fails: residual has "
                       f"{len(residual.coordinates())} terms")
    return result

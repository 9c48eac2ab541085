"""
Johnson Lab - Random Elements
Seeded random exact elements for property checks.

All randomness comes from a numpy Generator; coefficients are small
nonzero integers so the elements stay exact.
"""

from typing import List, Optional

import numpy as np
from sympy import QQ

from .alphabet import Alphabet
from .poly import CyclicPoly, LiePoly, TensorPoly
from .words import Word, lyndon_words


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_coefficient(rng: np.random.Generator, bound: int = 5) -> object:
    value = 0
    while value == 0:
        value = int(rng.integers(-bound, bound + 1))
    return QQ(value)


def random_word(alphabet: Alphabet, degree: int, rng: np.random.Generator) -> Word:
    return tuple(int(x) for x in rng.integers(0, alphabet.size, size=degree))


def random_tensor(alphabet: Alphabet, degree: int, rng: np.random.Generator,
                  terms: int = 4) -> TensorPoly:
    """Homogeneous random tensor polynomial with up to ``terms`` words."""
    return TensorPoly(alphabet, [(random_word(alphabet, degree, rng), random_coefficient(rng))
                                 for _ in range(terms)])


def random_cyclic(alphabet: Alphabet, degree: int, rng: np.random.Generator,
                  terms: int = 4) -> CyclicPoly:
    return CyclicPoly(alphabet, [(random_word(alphabet, degree, rng), random_coefficient(rng))
                                 for _ in range(terms)])


def random_lie(alphabet: Alphabet, degree: int, rng: np.random.Generator,
               terms: int = 3) -> LiePoly:
    """Random combination of Lyndon basis elements of one degree."""
    words: List[Word] = list(lyndon_words(alphabet.size, degree))
    if not words:
        return LiePoly.zero(alphabet)
    picks = rng.choice(len(words), size=min(terms, len(words)), replace=False)
    return LiePoly(alphabet, [(words[int(i)], random_coefficient(rng)) for i in picks])

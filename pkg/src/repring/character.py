"""
Johnson Lab - Sp Characters
Weyl-invariant Laurent polynomials in x_1..x_g with integer coefficients.

A monomial is stored as its exponent tuple of length g; the letter a_i has
torus weight +e_i and b_i has -e_i.
"""

import itertools
from collections import Counter, defaultdict
from math import factorial
from typing import Dict, Iterable, Mapping, Tuple, Union

from src.utils.errors import InvariantViolation, ModelMismatch

Exponent = Tuple[int, ...]


def dominant_representative(exponent: Exponent) -> Exponent:
    """The dominant element of the hyperoctahedral orbit: sorted |e_i|, decreasing."""
    return tuple(sorted((abs(e) for e in exponent), reverse=True))


def orbit_size(exponent: Exponent) -> int:
    """Number of distinct signed permutations of ``exponent``."""
    counts = Counter(abs(e) for e in exponent)
    size = factorial(len(exponent))
    for value, count in counts.items():
        size //= factorial(count)
        if value:
            size *= 2 ** count
    return size


def weyl_orbit(exponent: Exponent) -> Iterable[Exponent]:
    """Every signed permutation of ``exponent``, each once."""
    magnitudes = [abs(e) for e in exponent]
    for perm in set(itertools.permutations(magnitudes)):
        nonzero = [i for i, e in enumerate(perm) if e]
        for signs in itertools.product((1, -1), repeat=len(nonzero)):
            image = list(perm)
            for i, s in zip(nonzero, signs):
                image[i] *= s
            yield tuple(image)


class SpCharacter:
    """Character of a (virtual) Sp(2g)-module."""

    def __init__(self, genus: int, terms: Mapping[Exponent, int] = None):
        self.genus = genus
        clean: Dict[Exponent, int] = {}
        for exponent, c in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != genus:
                raise ValueError(f"exponent {exponent} does not have {genus} entries")
            if c:
                clean[exponent] = clean.get(exponent, 0) + int(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def zero(cls, genus: int) -> 'SpCharacter':
        return cls(genus)

    @classmethod
    def trivial(cls, genus: int) -> 'SpCharacter':
        return cls(genus, {(0,) * genus: 1})

    @classmethod
    def defining(cls, genus: int) -> 'SpCharacter':
        """Character of H: sum of x_i + x_i^{-1}."""
        terms = {}
        for i in range(genus):
            for sign in (1, -1):
                exponent = [0] * genus
                exponent[i] = sign
                terms[tuple(exponent)] = 1
        return cls(genus, terms)

    @classmethod
    def from_weights(cls, genus: int, weights: Union[Mapping[Exponent, int], Iterable[Exponent]]) -> 'SpCharacter':
        """Character from a weight -> multiplicity map or a list of weights."""
        if isinstance(weights, Mapping):
            return cls(genus, weights)
        return cls(genus, Counter(tuple(w) for w in weights))

    def _check(self, other: 'SpCharacter') -> None:
        if self.genus != other.genus:
            raise ModelMismatch(f"characters of genus {self.genus} and {other.genus}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return SpCharacter(self.genus, terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n: int) -> 'SpCharacter':
        return SpCharacter(self.genus, {k: n * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        terms: Dict[Exponent, int] = defaultdict(int)
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                terms[tuple(a + b for a, b in zip(k1, k2))] += c1 * c2
        return SpCharacter(self.genus, terms)

    __rmul__ = __mul__

    def exact_divide(self, n: int) -> 'SpCharacter':
        """Divide every coefficient by n, which must divide it."""
        if any(c % n for c in self.terms.values()):
            raise InvariantViolation(f"character is not divisible by {n}")
        return SpCharacter(self.genus, {k: c // n for k, c in self.terms.items()})

    def adams(self, d: int) -> 'SpCharacter':
        """psi^d: x_i -> x_i^d."""
        if d < 1:
            raise ValueError(f"Adams operations need d >= 1, got {d}")
        return SpCharacter(self.genus, {tuple(d * e for e in k): c for k, c in self.terms.items()})

    @property
    def dimension(self) -> int:
        return sum(self.terms.values())

    def dominant_terms(self) -> Dict[Exponent, int]:
        return {k: c for k, c in self.terms.items() if k == dominant_representative(k)}

    def is_weyl_invariant(self) -> bool:
        groups: Dict[Exponent, list] = defaultdict(list)
        for k, c in self.terms.items():
            groups[dominant_representative(k)].append(c)
        for dominant, coefficients in groups.items():
            if len(coefficients) != orbit_size(dominant) or len(set(coefficients)) != 1:
                return False
        return True

    def require_invariant(self) -> None:
        if not self.is_weyl_invariant():
            raise InvariantViolation("character is not invariant under the Weyl group")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, SpCharacter):
            return NotImplemented
        return self.genus == other.genus and self.terms == other.terms

    def __hash__(self):
        return hash((self.genus, frozenset(self.terms.items())))

    def __repr__(self):
        return f"SpCharacter(genus={self.genus}, dim={self.dimension}, terms={len(self.terms)})"

"""
Johnson Lab - Divergence and Edge Map
Non-commutative divergence of special derivations and its framed
correction by rotation numbers of the puncture loops.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Union

from sympy import QQ

from src.algebra.poly import CyclicPoly, TensorPoly, change_eliminated, cyclic_project
from src.utils.errors import ParseError
from .special import SpecialDer0

logger = logging.getLogger('johnsonlab.genus0.divergence')


@dataclass
class RotationData:
    """Rotation numbers of the boundary loops, keyed by puncture index."""
    rotations: Dict[int, int] = field(default_factory=dict)

    def __call__(self, puncture: int) -> int:
        return self.rotations.get(puncture, 0)

    def __sub__(self, other: 'RotationData') -> 'RotationData':
        keys = set(self.rotations) | set(other.rotations)
        return RotationData({p: self(p) - other(p) for p in keys})

    def on_linear(self, u: TensorPoly) -> object:
        """Extend to degree-1 elements: phi(sum c_x x) = sum c_x phi(puncture of x)."""
        alphabet = u.alphabet
        value = QQ(0)
        for word, c in u.terms.items():
            if len(word) != 1:
                raise ValueError(f"rotation numbers only evaluate degree-1 elements, got word {word}")
            value += c * self(alphabet.puncture_of_letter(word[0]))
        return value

    @classmethod
    def from_dict(cls, data: Any, alphabet, location: str = '$') -> 'RotationData':
        """Parse {"e1": 1, "e2": -1, ...}; labels are puncture names or labels."""
        if not isinstance(data, Mapping):
            raise ParseError("rotation data must be an object of puncture -> integer", location)
        rotations = {}
        for name, value in data.items():
            where = f"{location}.{name}"
            if isinstance(value, bool) or not isinstance(value, int):
                raise ParseError(f"rotation number must be an integer, got {value!r}", where)
            try:
                rotations[alphabet.puncture_index(str(name))] = value
            except ParseError as e:
                raise ParseError(e.message, where) from e
        return cls(rotations)


def divergence(derivation: SpecialDer0) -> CyclicPoly:
    """
    div(D) = sum_{j != base} |e_j u_j^(j)|, where u_j = sum_k e_k u_j^(k).

    Left coefficients are taken with the base puncture eliminated; the
    result is written back in the derivation's own alphabet.
    """
    alphabet = derivation.alphabet
    if alphabet.eliminated != derivation.base:
        rebased = derivation.rebased(derivation.base)
        return change_eliminated(divergence(rebased), alphabet.eliminated)
    total = CyclicPoly.zero(alphabet)
    for p, u in derivation.components.items():
        letter = alphabet.letter_of_puncture(p)
        own = TensorPoly.letter(alphabet, letter)
        total = total + cyclic_project(own * u.left_coefficient(letter))
    return total


def framing_change(derivation: SpecialDer0, phi: RotationData) -> CyclicPoly:
    """sum_j phi(e_j) |u_j| over every component, whatever the degree."""
    total = CyclicPoly.zero(derivation.alphabet)
    for p, u in derivation.components.items():
        if phi(p):
            total = total + cyclic_project(u).scale(phi(p))
    return total


def edge_map(derivation: SpecialDer0, rotations: Union[RotationData, Mapping[int, int]]) -> CyclicPoly:
    """Framed divergence: div(D) + sum_j rot(e_j) |u_j|."""
    if not isinstance(rotations, RotationData):
        rotations = RotationData(dict(rotations))
    return divergence(derivation) + framing_change(derivation, rotations)


def sym2_framing_change(u: TensorPoly, v: TensorPoly, phi: RotationData) -> CyclicPoly:
    """
    Framing change on the symmetric square of degree 1.

    For the special derivation attached to |u v| the edge maps of two
    framings differ by (phi(u)|v| + phi(v)|u|) / 2.
    """
    u.alphabet.check_same(v.alphabet)
    total = cyclic_project(v).scale(phi.on_linear(u)) + cyclic_project(u).scale(phi.on_linear(v))
    return total.scale(QQ(1, 2))


def sder_from_sym2(u: TensorPoly, v: TensorPoly) -> SpecialDer0:
    """
    The degree-1 special derivation attached to |u v|, kept unnormalized.

    With u = sum u_j e_j and v = sum v_j e_j over the non-base punctures the
    components are (u_j v + v_j u) / 2; the base is the eliminated puncture.
    """
    alphabet = u.alphabet
    u.alphabet.check_same(v.alphabet)
    components = {}
    for letter in alphabet.letters:
        p = alphabet.puncture_of_letter(letter)
        value = v.scale(u.coefficient((letter,))) + u.scale(v.coefficient((letter,)))
        if value.terms:
            components[p] = value.scale(QQ(1, 2))
    return SpecialDer0(alphabet, components, degree=1, normalize=False)


def cocycle_defect(d1: SpecialDer0, d2: SpecialDer0) -> CyclicPoly:
    """div([D1, D2]) - D1 div(D2) + D2 div(D1); zero for every pair."""
    return (divergence(d1.bracket(d2))
            - d1.act_on_cyclic(divergence(d2))
            + d2.act_on_cyclic(divergence(d1)))

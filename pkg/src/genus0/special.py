"""
Johnson Lab - Special Derivations
Genus-0 tangential derivations D_u with D(e_j) = [u_j, e_j], stored by
their components u_j on the non-base punctures (u_base = 0).
"""

import logging
from typing import Any, Dict, List, Mapping, Optional, Union

from sympy import QQ

from src.algebra.alphabet import Alphabet
from src.algebra.linalg import RowReducer, nullspace_rows, rank
from src.algebra.poly import (
    CyclicPoly,
    LiePoly,
    TensorPoly,
    change_eliminated,
    cyclic_project,
    lyndon_tensor,
)
from src.algebra.serialization import poly_from_dict, poly_to_dict
from src.algebra.words import lyndon_words
from src.goldman_turaev.kappa import apply_letter_derivation
from src.utils.errors import ModelMismatch, ParseError

logger = logging.getLogger('johnsonlab.genus0.special')

Component = Union[TensorPoly, LiePoly, Mapping[int, object]]


def puncture_element(alphabet: Alphabet, puncture: int) -> TensorPoly:
    """e_p as a degree-1 tensor over the free letters."""
    return TensorPoly.from_linear_form(alphabet, alphabet.puncture_class(puncture))


def _as_tensor(alphabet: Alphabet, value: Component) -> TensorPoly:
    if isinstance(value, LiePoly):
        value = value.tensor
    elif isinstance(value, Mapping):
        value = TensorPoly.from_linear_form(alphabet, value)
    alphabet.check_same(value.alphabet)
    return value


def _drop_own(alphabet: Alphabet, puncture: int, u: TensorPoly, degree: int) -> TensorPoly:
    """Remove the part of u_p along e_p^degree (monomial inner product)."""
    letter = alphabet.letter_of_puncture(puncture)
    if letter is not None:
        own = (letter,) * degree
        if own not in u.terms:
            return u
        return TensorPoly._wrap(alphabet, {w: c for w, c in u.terms.items() if w != own})
    if degree != 1:
        return u
    # eliminated puncture: e_p = -(sum of letters), project onto its complement
    mean = sum((u.coefficient((x,)) for x in alphabet.letters), QQ(0)) / alphabet.size
    return u - TensorPoly(alphabet, {(x,): mean for x in alphabet.letters})


def _normalize(alphabet: Alphabet, base: int, components: Dict[int, TensorPoly],
               degree: int) -> Dict[int, TensorPoly]:
    """Canonical representative modulo inner derivations and own-letter parts."""
    others = [p for p in range(alphabet.punctures) if p != base]
    zero = TensorPoly.zero(alphabet)
    u_base = components.get(base)
    comps = {p: components.get(p, zero) for p in others}
    if u_base is not None and u_base.terms:
        comps = {p: u - u_base for p, u in comps.items()}
    comps = {p: _drop_own(alphabet, p, u, degree) for p, u in comps.items()}
    if degree == 1:
        e_base = puncture_element(alphabet, base)
        direction = {p: _drop_own(alphabet, p, e_base, 1) for p in others}
        pivot = next(((p, w) for p in others for w in sorted(direction[p].terms)), None)
        if pivot is not None:
            p, w = pivot
            c = comps[p].coefficient(w) / direction[p].coefficient(w)
            if c:
                comps = {q: comps[q] - direction[q].scale(c) for q in others}
    return {p: u for p, u in comps.items() if u.terms}


class SpecialDer0:
    """
    Genus-0 derivation e_j -> [u_j, e_j] in normal form.

    Components live on the punctures other than ``base``; construction
    subtracts any supplied u_base from the others and, unless
    ``normalize`` is False, removes the parts that act trivially.
    """

    def __init__(self, alphabet: Alphabet, components: Mapping[Union[int, str], Component],
                 degree: Optional[int] = None, base: Optional[int] = None,
                 normalize: bool = True):
        if alphabet.is_symplectic:
            raise ModelMismatch("special derivations live on the boundary model")
        self.alphabet = alphabet
        self.base = alphabet.eliminated if base is None else alphabet.puncture_index(base)
        tensors = {alphabet.puncture_index(p): _as_tensor(alphabet, u) for p, u in components.items()}
        degrees = {d for u in tensors.values() for d in u.degrees()}
        if degree is None:
            if len(degrees) != 1:
                raise ValueError("components must be nonzero and homogeneous of one degree "
                                 "(or pass the degree)")
            degree = degrees.pop()
        elif degrees - {degree}:
            raise ValueError(f"components are not all of degree {degree}")
        if degree < 1:
            raise ValueError(f"special derivations need degree >= 1, got {degree}")
        self.degree = degree
        if normalize:
            self.components = _normalize(alphabet, self.base, tensors, degree)
        else:
            if self.base in tensors and tensors[self.base].terms:
                raise ValueError("unnormalized components must leave the base puncture empty")
            self.components = {p: u for p, u in tensors.items() if u.terms and p != self.base}

    @classmethod
    def zero(cls, alphabet: Alphabet, degree: int, base: Optional[int] = None) -> 'SpecialDer0':
        return cls(alphabet, {}, degree=degree, base=base)

    @property
    def weight(self) -> int:
        """Weight in the boundary grading (twice the length shift)."""
        return 2 * self.degree

    def component(self, puncture: Union[int, str]) -> TensorPoly:
        p = self.alphabet.puncture_index(puncture)
        return self.components.get(p) or TensorPoly.zero(self.alphabet)

    # ------------------------------------------------------------------
    # Action

    def letter_values(self) -> Dict[int, TensorPoly]:
        """D(x) for every free letter x."""
        values = {}
        for letter in self.alphabet.letters:
            p = self.alphabet.puncture_of_letter(letter)
            u = self.components.get(p)
            if u is not None:
                values[letter] = u.bracket(TensorPoly.letter(self.alphabet, letter))
        return values

    def apply(self, t: TensorPoly) -> TensorPoly:
        self.alphabet.check_same(t.alphabet)
        return apply_letter_derivation(self.letter_values(), t)

    def act_on_cyclic(self, c: CyclicPoly) -> CyclicPoly:
        self.alphabet.check_same(c.alphabet)
        return cyclic_project(self.apply(c.representatives()))

    def special_residual(self) -> TensorPoly:
        """sum_j [u_j, e_j]; zero exactly when D kills the boundary relation."""
        total = TensorPoly.zero(self.alphabet)
        for p, u in self.components.items():
            total = total + u.bracket(puncture_element(self.alphabet, p))
        return total

    def is_special(self) -> bool:
        return not self.special_residual().terms

    def bracket(self, other: 'SpecialDer0') -> 'SpecialDer0':
        """Components D1(u2_j) - D2(u1_j) - [u1_j, u2_j]."""
        self._check(other)
        zero = TensorPoly.zero(self.alphabet)
        components = {}
        for p in set(self.components) | set(other.components):
            u1, u2 = self.components.get(p, zero), other.components.get(p, zero)
            components[p] = self.apply(u2) - other.apply(u1) - u1.bracket(u2)
        return SpecialDer0(self.alphabet, components, degree=self.degree + other.degree,
                           base=self.base)

    def rebased(self, eliminated: int) -> 'SpecialDer0':
        """The same derivation written over another eliminated puncture."""
        if eliminated == self.alphabet.eliminated:
            return self
        components = {p: change_eliminated(u, eliminated) for p, u in self.components.items()}
        alphabet = Alphabet.boundary(self.alphabet.punctures, eliminated, self.alphabet.labels)
        return SpecialDer0(alphabet, components, degree=self.degree, base=self.base)

    # ------------------------------------------------------------------
    # Linear structure

    def _check(self, other: 'SpecialDer0') -> None:
        self.alphabet.check_same(other.alphabet)
        if self.base != other.base:
            raise ModelMismatch(f"base punctures differ: {self.base} vs {other.base}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        if self.degree != other.degree and self.components and other.components:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        degree = self.degree if self.components else other.degree
        zero = TensorPoly.zero(self.alphabet)
        components = {p: self.components.get(p, zero) + other.components.get(p, zero)
                      for p in set(self.components) | set(other.components)}
        return SpecialDer0(self.alphabet, components, degree=degree, base=self.base)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar) -> 'SpecialDer0':
        return SpecialDer0(self.alphabet, {p: u.scale(scalar) for p, u in self.components.items()},
                           degree=self.degree, base=self.base)

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self):
        return bool(self.components)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, SpecialDer0):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.alphabet == other.alphabet
        return (self.alphabet == other.alphabet and self.base == other.base
                and self.degree == other.degree and self.components == other.components)

    def __hash__(self):
        return hash((self.alphabet, self.base, self.degree, frozenset(self.components.items())))

    def coordinates(self) -> Dict[tuple, object]:
        return {(p, w): c for p, u in self.components.items() for w, c in u.terms.items()}

    # ------------------------------------------------------------------

    def to_dict(self, with_alphabet: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = dict(self.alphabet.to_dict()) if with_alphabet else {}
        data['base'] = self.base
        data['degree'] = self.degree
        data['components'] = {
            self.alphabet.puncture_names[p]: poly_to_dict(u, with_alphabet=False)
            for p, u in sorted(self.components.items())
        }
        return data

    @classmethod
    def from_dict(cls, data: Any, location: str = '$') -> 'SpecialDer0':
        if not isinstance(data, Mapping):
            raise ParseError("special derivation must be a JSON object", location)
        alphabet = Alphabet.from_dict(data, location)
        raw = data.get('components', {})
        if not isinstance(raw, Mapping):
            raise ParseError("components must be an object", f"{location}.components")
        components = {}
        for name, poly_data in raw.items():
            where = f"{location}.components.{name}"
            try:
                p = alphabet.puncture_index(name)
            except ParseError as e:
                raise ParseError(e.message, where) from e
            components[p] = poly_from_dict(poly_data, where, alphabet)
        try:
            return cls(alphabet, components, degree=data.get('degree'), base=data.get('base'))
        except ValueError as e:
            raise ParseError(str(e), location) from e

    def __repr__(self):
        names = self.alphabet.puncture_names
        parts = [f"u_{names[p]} = {u!r}" for p, u in sorted(self.components.items())]
        return f"SpecialDer0(degree={self.degree}, base={names[self.base]}, {{{', '.join(parts)}}})"


def special_der_basis(alphabet: Alphabet, degree: int, base: Optional[int] = None) -> List[SpecialDer0]:
    """
    Basis of the special derivations of a given degree with Lie components.

    Solves sum_j [u_j, e_j] = 0 over Lyndon-basis components and keeps
    the normal forms that are independent.
    """
    if alphabet.is_symplectic:
        raise ModelMismatch("special derivations live on the boundary model")
    base = alphabet.eliminated if base is None else alphabet.puncture_index(base)
    words = list(lyndon_words(alphabet.size, degree))
    unknowns = [(p, w) for p in range(alphabet.punctures) if p != base for w in words]
    images = []
    for p, w in unknowns:
        value = TensorPoly(alphabet, dict(lyndon_tensor(w)))
        images.append(value.bracket(puncture_element(alphabet, p)).terms)
    reducer = RowReducer()
    basis = []
    for vector in nullspace_rows(images):
        components: Dict[int, TensorPoly] = {}
        for j, c in vector.items():
            p, w = unknowns[j]
            value = TensorPoly(alphabet, dict(lyndon_tensor(w))).scale(c)
            components[p] = components[p] + value if p in components else value
        derivation = SpecialDer0(alphabet, components, degree=degree, base=base)
        if derivation.components and reducer.add(derivation.coordinates()):
            basis.append(derivation)
    logger.debug(f"SDer_{degree} on {alphabet.describe()}: {len(unknowns)} unknowns, dimension {len(basis)}")
    return basis


def sder_to_cyclic(derivation: SpecialDer0) -> CyclicPoly:
    """D_u -> sum_j |e_j u_j|."""
    total = CyclicPoly.zero(derivation.alphabet)
    for p, u in derivation.components.items():
        total = total + cyclic_project(puncture_element(derivation.alphabet, p) * u)
    return total


def sder_correspondence_rank(alphabet: Alphabet, degree: int,
                             base: Optional[int] = None) -> Dict[str, int]:
    """Dimension of SDer in one degree against the rank of its cyclic image."""
    basis = special_der_basis(alphabet, degree, base)
    image_rank = rank([sder_to_cyclic(d).terms for d in basis])
    return {'degree': degree, 'dimension': len(basis), 'rank': image_rank}

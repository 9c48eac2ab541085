"""
Johnson Lab - Theta Derivations
Degree-homogeneous derivations of the free Lie or tensor algebra,
stored by their values on the generators.
"""

import logging
from enum import Enum
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from sympy import QQ

from src.algebra.alphabet import Alphabet, Weight
from src.algebra.poly import LiePoly, TensorPoly, tensor_to_lie, theta_tensor, to_coefficient
from src.algebra.serialization import poly_from_dict, poly_to_dict
from src.goldman_turaev.kappa import apply_letter_derivation
from src.utils.errors import ModelMismatch, ParseError

logger = logging.getLogger('johnsonlab.derivations.derivation')

Coordinate = Tuple[int, tuple]


class DerivationKind(Enum):
    """Where the generator values live."""
    LIE = "lie"          # values in L(H), degree >= 0
    TENSOR = "tensor"    # values in T(H), degree >= -1


class ThetaDerivation:
    """
    Derivation D of degree m, given by D(x) for every letter x.

    Values are kept as tensor polynomials of degree m + 1 whatever the
    kind; the Lie kind only records that they are Lie elements. The
    theta-condition is a property checked on demand, not at construction.
    """

    def __init__(self, alphabet: Alphabet, degree: int, kind: DerivationKind,
                 values: Mapping[int, Union[TensorPoly, LiePoly]]):
        minimum = 0 if kind is DerivationKind.LIE else -1
        if degree < minimum:
            raise ValueError(f"{kind.value} derivations need degree >= {minimum}, got {degree}")
        self.alphabet = alphabet
        self.degree = degree
        self.kind = kind
        clean: Dict[int, TensorPoly] = {}
        for letter, value in values.items():
            tensor = value.tensor if isinstance(value, LiePoly) else value
            alphabet.check_same(tensor.alphabet)
            if tensor.terms:
                if tensor.degrees() != [degree + 1]:
                    raise ValueError(f"value on {alphabet.name(letter)} is not of degree {degree + 1}")
                clean[letter] = tensor
        self.values = clean

    @classmethod
    def zero(cls, alphabet: Alphabet, degree: int, kind: DerivationKind) -> 'ThetaDerivation':
        return cls(alphabet, degree, kind, {})

    def value(self, letter: int) -> TensorPoly:
        return self.values.get(letter) or TensorPoly.zero(self.alphabet)

    def lie_value(self, letter: int) -> LiePoly:
        return tensor_to_lie(self.value(letter))

    # ------------------------------------------------------------------
    # Action

    def apply(self, t: TensorPoly) -> TensorPoly:
        """Apply D to a tensor polynomial by the Leibniz rule."""
        self.alphabet.check_same(t.alphabet)
        return apply_letter_derivation(self.values, t)

    def apply_lie(self, u: LiePoly) -> LiePoly:
        return tensor_to_lie(self.apply(u.tensor))

    def theta_residual(self) -> TensorPoly:
        """D(theta) for the tensor theta; zero for a theta-derivation."""
        return self.apply(theta_tensor(self.alphabet))

    def satisfies_theta(self) -> bool:
        return not self.theta_residual().terms

    def bracket(self, other: 'ThetaDerivation') -> 'ThetaDerivation':
        """
        [D1, D2] = D1 o D2 - D2 o D1, evaluated on generators.

        Raises:
            ModelMismatch: Different alphabets or kinds
        """
        self._check(other)
        values = {}
        for letter in self.alphabet.letters:
            values[letter] = self.apply(other.value(letter)) - other.apply(self.value(letter))
        return ThetaDerivation(self.alphabet, self.degree + other.degree, self.kind, values)

    # ------------------------------------------------------------------
    # Linear structure

    def _check(self, other: 'ThetaDerivation') -> None:
        self.alphabet.check_same(other.alphabet)
        if self.kind is not other.kind:
            raise ModelMismatch(f"cannot combine {self.kind.value} and {other.kind.value} derivations")

    def _combine(self, other: 'ThetaDerivation', sign: int) -> 'ThetaDerivation':
        self._check(other)
        if self.degree != other.degree and self.values and other.values:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        degree = self.degree if self.values else other.degree
        letters = set(self.values) | set(other.values)
        values = {x: self.value(x) + other.value(x).scale(sign) for x in letters}
        return ThetaDerivation(self.alphabet, degree, self.kind, values)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, scalar) -> 'ThetaDerivation':
        c = to_coefficient(scalar)
        return ThetaDerivation(self.alphabet, self.degree, self.kind,
                               {x: v.scale(c) for x, v in self.values.items()})

    def __mul__(self, scalar):
        return self.scale(scalar)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.values

    def __bool__(self):
        return bool(self.values)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, ThetaDerivation):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.alphabet == other.alphabet
        return (self.alphabet == other.alphabet and self.degree == other.degree
                and self.kind is other.kind and self.values == other.values)

    def __hash__(self):
        return hash((self.alphabet, self.degree, self.kind,
                     frozenset((x, v) for x, v in self.values.items())))

    # ------------------------------------------------------------------
    # Coordinates and torus weights

    def coordinates(self) -> Dict[Coordinate, object]:
        """Sparse vector (letter, word) -> coefficient."""
        return {(x, w): c for x, v in self.values.items() for w, c in v.terms.items()}

    @classmethod
    def from_coordinates(cls, alphabet: Alphabet, degree: int, kind: DerivationKind,
                         coordinates: Mapping[Coordinate, object]) -> 'ThetaDerivation':
        values: Dict[int, Dict[tuple, object]] = {}
        for (x, w), c in coordinates.items():
            values.setdefault(x, {})[w] = c
        return cls(alphabet, degree, kind, {x: TensorPoly(alphabet, t) for x, t in values.items()})

    def coordinate_weight(self, coordinate: Coordinate) -> Weight:
        x, w = coordinate
        word_weight = self.alphabet.word_weight(w)
        letter_weight = self.alphabet.letter_weight(x)
        return tuple(a - b for a, b in zip(word_weight, letter_weight))

    def split_by_weight(self) -> Dict[Weight, 'ThetaDerivation']:
        """Torus-weight components (each again a derivation of the same degree)."""
        parts: Dict[Weight, Dict[Coordinate, object]] = {}
        for coordinate, c in self.coordinates().items():
            parts.setdefault(self.coordinate_weight(coordinate), {})[coordinate] = c
        return {weight: ThetaDerivation.from_coordinates(self.alphabet, self.degree, self.kind, coords)
                for weight, coords in sorted(parts.items())}

    @property
    def weight(self) -> Optional[Weight]:
        """Torus weight of a weight-homogeneous derivation (None for zero)."""
        weights = {self.coordinate_weight(c) for c in self.coordinates()}
        if not weights:
            return None
        if len(weights) > 1:
            raise ValueError("derivation is not torus-weight homogeneous")
        return weights.pop()

    def as_kind(self, kind: DerivationKind) -> 'ThetaDerivation':
        return ThetaDerivation(self.alphabet, self.degree, kind, self.values)

    # ------------------------------------------------------------------

    def to_dict(self, with_alphabet: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = dict(self.alphabet.to_dict()) if with_alphabet else {}
        data['degree'] = self.degree
        data['kind'] = self.kind.value
        values = {}
        for letter in self.alphabet.letters:
            value = self.value(letter)
            poly = tensor_to_lie(value) if self.kind is DerivationKind.LIE else value
            values[self.alphabet.name(letter)] = poly_to_dict(poly, with_alphabet=False)
        data['values'] = values
        return data

    @classmethod
    def from_dict(cls, data: Any, location: str = '$',
                  alphabet: Optional[Alphabet] = None) -> 'ThetaDerivation':
        if not isinstance(data, Mapping):
            raise ParseError("derivation must be a JSON object", location)
        if 'model' in data:
            alphabet = Alphabet.from_dict(data, location)
        if alphabet is None:
            raise ParseError("missing model description", location)
        try:
            degree = int(data['degree'])
            kind = DerivationKind(data.get('kind', 'tensor'))
        except KeyError as e:
            raise ParseError(f"missing field {e.args[0]!r}", location) from e
        except (TypeError, ValueError) as e:
            raise ParseError(str(e), location) from e
        raw_values = data.get('values', {})
        if not isinstance(raw_values, Mapping):
            raise ParseError("values must be an object", f"{location}.values")
        values = {}
        for name, poly_data in raw_values.items():
            where = f"{location}.values.{name}"
            try:
                letter = alphabet.index(name)
            except ParseError as e:
                raise ParseError(e.message, where) from e
            values[letter] = poly_from_dict(poly_data, where, alphabet)
        try:
            return cls(alphabet, degree, kind, values)
        except ValueError as e:
            raise ParseError(str(e), location) from e

    def __repr__(self):
        parts = [f"{self.alphabet.name(x)} -> {v!r}" for x, v in sorted(self.values.items())]
        return f"ThetaDerivation(degree={self.degree}, kind={self.kind.value}, {{{', '.join(parts)}}})"

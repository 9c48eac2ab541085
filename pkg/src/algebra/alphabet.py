"""
Johnson Lab - Alphabets
Letter sets of the two surface models and the intersection pairing.

Symplectic model: letters a1 < b1 < a2 < ... < bg stored as indices
0, 1, 2, ..., 2g-1 (a_i at 2(i-1), b_i at 2(i-1)+1).

Boundary model: punctures 0..n with classes e_j subject to sum e_j = 0.
One puncture is eliminated by the substitution e_elim = -(sum of the
others); the remaining punctures, in increasing order, are the letters.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ

from src.utils.errors import ModelMismatch, ParseError

logger = logging.getLogger('johnsonlab.algebra.alphabet')

Letter = int
Weight = Tuple[int, ...]
LinearForm = Dict[int, object]


class SurfaceModel(Enum):
    """Surface models supported by the library."""
    SYMPLECTIC = "symplectic"    # genus g, one boundary component
    BOUNDARY = "boundary"        # sphere with n+1 punctures


@dataclass(frozen=True)
class Alphabet:
    """
    Ordered alphabet of one surface model.

    Instances are immutable and hashable; two polynomials can only be
    combined when their alphabets compare equal.
    """
    model: SurfaceModel
    genus: int = 0
    punctures: int = 0
    eliminated: int = 0
    labels: Tuple[str, ...] = ()

    @classmethod
    def symplectic(cls, genus: int) -> 'Alphabet':
        if genus < 1:
            raise ValueError(f"symplectic alphabet needs genus >= 1, got {genus}")
        return cls(SurfaceModel.SYMPLECTIC, genus=genus)

    @classmethod
    def boundary(cls, punctures: int, eliminated: int = 0,
                 labels: Optional[Sequence[str]] = None) -> 'Alphabet':
        """
        Boundary alphabet for a sphere with ``punctures`` punctures.

        Args:
            punctures: Number of punctures n+1 (at least 3)
            eliminated: Puncture whose class is expressed through the others
            labels: Optional puncture labels; letters are named ``e<label>``
        """
        if punctures < 3:
            raise ValueError(f"boundary alphabet needs >= 3 punctures, got {punctures}")
        if not 0 <= eliminated < punctures:
            raise ValueError(f"eliminated puncture {eliminated} out of range")
        if labels is None:
            labels = tuple(str(p) for p in range(punctures))
        labels = tuple(str(label) for label in labels)
        if len(labels) != punctures or len(set(labels)) != punctures:
            raise ValueError("labels must be distinct, one per puncture")
        return cls(SurfaceModel.BOUNDARY, punctures=punctures,
                   eliminated=eliminated, labels=labels)

    @classmethod
    def three_punctured(cls) -> 'Alphabet':
        """Punctures 0, 1, inf with e1 eliminated (free letters e0 < einf)."""
        return cls.boundary(3, eliminated=1, labels=('0', '1', 'inf'))

    # ------------------------------------------------------------------
    # Letters

    @property
    def is_symplectic(self) -> bool:
        return self.model is SurfaceModel.SYMPLECTIC

    @property
    def size(self) -> int:
        """Number of free letters."""
        if self.is_symplectic:
            return 2 * self.genus
        return self.punctures - 1

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return tuple(range(self.size))

    @property
    def free_punctures(self) -> Tuple[int, ...]:
        """Puncture indices carried by the free letters, in letter order."""
        self._require_boundary('free_punctures')
        return tuple(p for p in range(self.punctures) if p != self.eliminated)

    @property
    def names(self) -> Tuple[str, ...]:
        if self.is_symplectic:
            names = []
            for i in range(1, self.genus + 1):
                names.extend((f"a{i}", f"b{i}"))
            return tuple(names)
        return tuple(f"e{self.labels[p]}" for p in self.free_punctures)

    @property
    def puncture_names(self) -> Tuple[str, ...]:
        self._require_boundary('puncture_names')
        return tuple(f"e{label}" for label in self.labels)

    def name(self, letter: Letter) -> str:
        return self.names[letter]

    def index(self, name: str) -> Letter:
        """
        Free-letter index of a letter name.

        Raises:
            ParseError: Unknown name, or the eliminated boundary letter
        """
        try:
            return self.names.index(name)
        except ValueError:
            pass
        if not self.is_symplectic and name in self.puncture_names:
            raise ParseError(f"letter {name!r} is eliminated in this alphabet; "
                             f"use expand() for linear combinations")
        raise ParseError(f"unknown letter {name!r}")

    def letter_of_puncture(self, puncture: int) -> Optional[Letter]:
        """Letter index of a puncture class, or None for the eliminated one."""
        self._require_boundary('letter_of_puncture')
        if puncture == self.eliminated:
            return None
        return puncture if puncture < self.eliminated else puncture - 1

    def puncture_of_letter(self, letter: Letter) -> int:
        self._require_boundary('puncture_of_letter')
        return self.free_punctures[letter]

    def puncture_index(self, label: Union[str, int]) -> int:
        """Puncture index from a label such as ``'inf'`` or ``'e2'`` or an int."""
        self._require_boundary('puncture_index')
        if isinstance(label, int):
            if not 0 <= label < self.punctures:
                raise ParseError(f"puncture {label} out of range")
            return label
        text = label[1:] if label.startswith('e') and label[1:] in self.labels else label
        if text not in self.labels:
            raise ParseError(f"unknown puncture {label!r}")
        return self.labels.index(text)

    def puncture_class(self, puncture: int) -> LinearForm:
        """e_p as a linear form over the free letters."""
        letter = self.letter_of_puncture(puncture)
        if letter is not None:
            return {letter: QQ(1)}
        return {k: QQ(-1) for k in self.letters}

    def expand(self, name: str) -> LinearForm:
        """Linear form of any letter name, including the eliminated one."""
        if not self.is_symplectic and name in self.puncture_names:
            return self.puncture_class(self.puncture_names.index(name))
        return {self.index(name): QQ(1)}

    # ------------------------------------------------------------------
    # Pairing and torus weights

    def pairing(self, x: Union[Letter, Mapping[int, object]],
                y: Union[Letter, Mapping[int, object]]) -> object:
        """
        Intersection pairing <x, y> of letters or linear forms.

        <a_i, b_i> = 1, <b_i, a_i> = -1, all other pairs of letters 0.

        Raises:
            ModelMismatch: For the boundary model
        """
        if not self.is_symplectic:
            raise ModelMismatch("the intersection pairing is only defined on the symplectic model")
        if isinstance(x, int) and isinstance(y, int):
            return QQ(letter_pairing(x, y))
        xs = {x: QQ(1)} if isinstance(x, int) else x
        ys = {y: QQ(1)} if isinstance(y, int) else y
        total = QQ(0)
        for i, ci in xs.items():
            j = partner(i)
            cj = ys.get(j)
            if cj:
                total += letter_pairing(i, j) * QQ(ci) * QQ(cj)
        return total

    def letter_weight(self, letter: Letter) -> Weight:
        """
        Torus multidegree of a letter.

        Symplectic: a_i -> +e_i, b_i -> -e_i (length g).
        Boundary: unit vector of the letter (letter content).
        """
        if self.is_symplectic:
            weight = [0] * self.genus
            weight[letter // 2] = 1 if letter % 2 == 0 else -1
            return tuple(weight)
        weight = [0] * self.size
        weight[letter] = 1
        return tuple(weight)

    def word_weight(self, word: Sequence[Letter]) -> Weight:
        if self.is_symplectic:
            weight = [0] * self.genus
            for letter in word:
                weight[letter >> 1] += -1 if letter & 1 else 1
            return tuple(weight)
        weight = [0] * self.size
        for letter in word:
            weight[letter] += 1
        return tuple(weight)

    # ------------------------------------------------------------------

    def check_same(self, other: 'Alphabet') -> None:
        if self != other:
            raise ModelMismatch(f"alphabet mismatch: {self.describe()} vs {other.describe()}")

    def require_symplectic(self, operation: str) -> None:
        if not self.is_symplectic:
            raise ModelMismatch(f"{operation} requires the symplectic model")

    def _require_boundary(self, operation: str) -> None:
        if self.is_symplectic:
            raise ModelMismatch(f"{operation} requires the boundary model")

    def describe(self) -> str:
        if self.is_symplectic:
            return f"symplectic(g={self.genus})"
        return (f"boundary(punctures={self.punctures}, "
                f"eliminated=e{self.labels[self.eliminated]})")

    def to_dict(self) -> Dict[str, object]:
        if self.is_symplectic:
            return {'model': self.model.value, 'genus': self.genus}
        return {
            'model': self.model.value,
            'punctures': self.punctures,
            'eliminated': self.eliminated,
            'labels': list(self.labels),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, object], location: str = '$') -> 'Alphabet':
        model = data.get('model')
        try:
            if model == SurfaceModel.SYMPLECTIC.value:
                return cls.symplectic(int(data['genus']))
            if model == SurfaceModel.BOUNDARY.value:
                return cls.boundary(int(data['punctures']),
                                    eliminated=int(data.get('eliminated', 0)),
                                    labels=data.get('labels'))
        except KeyError as e:
            raise ParseError(f"missing field {e.args[0]!r}", location) from e
        except (TypeError, ValueError) as e:
            raise ParseError(str(e), location) from e
        raise ParseError(f"unknown model {model!r}", f"{location}.model")


def partner(letter: Letter) -> Letter:
    """Symplectic partner: a_i <-> b_i."""
    return letter ^ 1


def letter_pairing(x: Letter, y: Letter) -> int:
    """<x, y> on symplectic letter indices."""
    if y != x ^ 1:
        return 0
    return -1 if x & 1 else 1


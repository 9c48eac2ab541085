"""
Johnson Lab - Derivation Bases
Subspaces of derivations and the exact solve for theta-derivation bases.
"""

import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Tuple, Union

from sympy import QQ

from src.algebra.alphabet import Alphabet, Weight
from src.algebra.linalg import RowReducer, map_blocks, nullspace_rows
from src.algebra.poly import concat_terms, lyndon_tensor
from src.algebra.words import all_words, lyndon_words
from src.repring import char_of_subspace, decompose
from .derivation import Coordinate, DerivationKind, ThetaDerivation

logger = logging.getLogger('johnsonlab.derivations.basis')


class Subspace:
    """
    Span of derivations of one degree and kind, reduced per torus weight.

    Vectors are split into torus-weight components before reduction, so
    the span is that of all components; every subspace built here is
    stable under the torus.
    """

    def __init__(self, alphabet: Alphabet, degree: int, kind: DerivationKind,
                 vectors: Iterable[ThetaDerivation] = ()):
        self.alphabet = alphabet
        self.degree = degree
        self.kind = kind
        self._reducers: Dict[Weight, RowReducer] = defaultdict(RowReducer)
        self._basis: List[ThetaDerivation] = []
        for vector in vectors:
            self.add(vector)

    def add(self, vector: ThetaDerivation) -> int:
        """
        Add every weight component of ``vector``.

        Returns:
            Number of new independent components
        """
        added = 0
        for weight, part in vector.split_by_weight().items():
            if self._reducers[weight].add(part.coordinates()):
                self._basis.append(part)
                added += 1
        return added

    @property
    def dim(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> List[ThetaDerivation]:
        return list(self._basis)

    def contains(self, vector: ThetaDerivation) -> bool:
        for weight, part in vector.split_by_weight().items():
            reducer = self._reducers.get(weight)
            coordinates = part.coordinates()
            if reducer is None:
                if coordinates:
                    return False
            elif not reducer.contains(coordinates):
                return False
        return True

    def block_dimensions(self) -> Dict[Weight, int]:
        """Rank per torus weight (the multidegree character data)."""
        return {weight: r.rank for weight, r in sorted(self._reducers.items()) if r.rank}

    def __len__(self):
        return self.dim

    def __repr__(self):
        return (f"Subspace({self.alphabet.describe()}, degree={self.degree}, "
                f"kind={self.kind.value}, dim={self.dim})")


def _as_alphabet(genus_or_alphabet: Union[int, Alphabet]) -> Alphabet:
    if isinstance(genus_or_alphabet, Alphabet):
        genus_or_alphabet.require_symplectic('theta-derivation bases')
        return genus_or_alphabet
    return Alphabet.symplectic(int(genus_or_alphabet))


def _candidate_values(alphabet: Alphabet, m: int, kind: DerivationKind) -> List[Tuple[tuple, Dict]]:
    """(key word, tensor terms) for every admissible value of degree m + 1."""
    if kind is DerivationKind.LIE:
        return [(w, dict(lyndon_tensor(w))) for w in lyndon_words(alphabet.size, m + 1)]
    return [(tuple(w), {tuple(w): QQ(1)}) for w in all_words(alphabet.size, m + 1)]


def _theta_image(alphabet: Alphabet, letter: int, value: Dict) -> Dict:
    """Contribution of D(letter) = value to D(theta)."""
    partner = letter ^ 1
    single = {(partner,): 1}
    if letter % 2 == 0:
        # D(a_j) = V contributes [V, b_j]
        left, right = concat_terms(value, single), concat_terms(single, value)
    else:
        # D(b_j) = V contributes [a_j, V]
        left, right = concat_terms(single, value), concat_terms(value, single)
    out = dict(left)
    for w, c in right.items():
        out[w] = out.get(w, 0) - c
    return {w: c for w, c in out.items() if c}


def theta_der_basis(genus: Union[int, Alphabet], m: int,
                    kind: Union[DerivationKind, str] = DerivationKind.LIE,
                    jobs: int = 1, cache=None) -> Subspace:
    """
    Basis of the degree-m derivations that kill theta.

    Args:
        genus: Genus (or a symplectic alphabet)
        m: Degree (>= 0 for the Lie kind, >= -1 for the tensor kind)
        kind: Lie- or tensor-valued derivations
        jobs: Worker threads for the per-weight solves
        cache: Optional basis cache with ``load``/``save``

    Returns:
        Subspace spanned by the solution
    """
    alphabet = _as_alphabet(genus)
    kind = DerivationKind(kind)
    if cache is not None:
        cached = cache.load(alphabet, m, kind)
        if cached is not None:
            return Subspace(alphabet, m, kind, cached)

    candidates = _candidate_values(alphabet, m, kind)
    blocks: Dict[Weight, List[Tuple[int, tuple, Dict]]] = defaultdict(list)
    for letter in alphabet.letters:
        letter_weight = alphabet.letter_weight(letter)
        for key, value in candidates:
            weight = tuple(a - b for a, b in zip(alphabet.word_weight(key), letter_weight))
            blocks[weight].append((letter, key, value))

    def solve(block: List[Tuple[int, tuple, Dict]]) -> List[ThetaDerivation]:
        images = [_theta_image(alphabet, letter, value) for letter, _, value in block]
        solutions = []
        for vector in nullspace_rows(images):
            coordinates: Dict[Coordinate, object] = {}
            for j, c in vector.items():
                letter, _, value = block[j]
                for w, cw in value.items():
                    coordinates[(letter, w)] = coordinates.get((letter, w), 0) + c * cw
            solutions.append(ThetaDerivation.from_coordinates(alphabet, m, kind, coordinates))
        return solutions

    ordered = [blocks[weight] for weight in sorted(blocks)]
    subspace = Subspace(alphabet, m, kind)
    for solutions in map_blocks(solve, ordered, jobs):
        for derivation in solutions:
            subspace.add(derivation)
    logger.info(f"Der^theta_{m} ({kind.value}) over {alphabet.describe()}: "
                f"{len(ordered)} weight blocks, dimension {subspace.dim}")
    if cache is not None:
        cache.save(alphabet, m, kind, subspace.basis)
    return subspace


def weight_table(genus: int, m_max: int, jobs: int = 1, cache=None) -> List[Tuple[int, object]]:
    """
    Sp-decomposition of Der^theta_m (Lie kind) for m = 0..m_max.

    Returns:
        List of (m, RepElement)
    """
    table = []
    for m in range(m_max + 1):
        subspace = theta_der_basis(genus, m, DerivationKind.LIE, jobs=jobs, cache=cache)
        table.append((m, decompose(char_of_subspace(subspace))))
    return table


"""
Johnson Lab - Johnson Image
The degree-1 Johnson map tau_1, the degree-1-generated subalgebra and
its quadratic relations.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple, Union

from sympy import QQ

from src.algebra.alphabet import Alphabet, letter_pairing
from src.algebra.linalg import map_blocks, nullspace_rows, rank
from src.algebra.poly import TensorPoly
from src.goldman_turaev.cobracket import turaev_cobracket
from src.goldman_turaev.kappa import kappa_inverse
from .basis import Subspace
from .derivation import DerivationKind, ThetaDerivation

logger = logging.getLogger('johnsonlab.derivations.johnson')

Letterish = Union[int, str]


def _letter(alphabet: Alphabet, x: Letterish) -> int:
    return alphabet.index(x) if isinstance(x, str) else int(x)


def tau1(alphabet: Alphabet, u1: Letterish, u2: Letterish, u3: Letterish) -> ThetaDerivation:
    """
    Image of u1 ^ u2 ^ u3 under the degree-1 Johnson map.

    v -> -(<u1,v>[u2,u3] + <u2,v>[u3,u1] + <u3,v>[u1,u2])
    """
    alphabet.require_symplectic('tau1')
    u = [_letter(alphabet, x) for x in (u1, u2, u3)]
    values: Dict[int, TensorPoly] = {}
    for v in alphabet.letters:
        terms: Dict[tuple, object] = {}
        for i in range(3):
            pairing = letter_pairing(u[i], v)
            if not pairing:
                continue
            x, y = u[(i + 1) % 3], u[(i + 2) % 3]
            terms[(x, y)] = terms.get((x, y), QQ(0)) - pairing
            terms[(y, x)] = terms.get((y, x), QQ(0)) + pairing
        values[v] = TensorPoly(alphabet, terms)
    return ThetaDerivation(alphabet, 1, DerivationKind.LIE, values)


@lru_cache(maxsize=None)
def johnson_image(genus: int, m: int, jobs: int = 1) -> Subspace:
    """
    The subalgebra of Der^theta generated in degree 1, in degree m.

    J_1 is spanned by tau_1 of all triples of letters; J_m is spanned by
    the brackets [J_1, J_{m-1}]. For genus >= 3 this is the image of the
    graded Johnson homomorphism.
    """
    if m < 1:
        raise ValueError(f"Johnson image degrees start at 1, got {m}")
    alphabet = Alphabet.symplectic(genus)
    if m == 1:
        generators = [tau1(alphabet, *triple)
                      for triple in itertools.combinations(alphabet.letters, 3)]
        subspace = Subspace(alphabet, 1, DerivationKind.LIE, generators)
    else:
        first = johnson_image(genus, 1, jobs).basis
        previous = johnson_image(genus, m - 1, jobs).basis
        subspace = Subspace(alphabet, m, DerivationKind.LIE)

        def brackets(d1: ThetaDerivation) -> List[ThetaDerivation]:
            return [d1.bracket(d2) for d2 in previous]

        for chunk in map_blocks(brackets, first, jobs):
            for derivation in chunk:
                subspace.add(derivation)
    logger.info(f"J_{m} at genus {genus}: dimension {subspace.dim}")
    return subspace


@dataclass
class QuadraticRelations:
    """Kernel of the bracket map from the exterior square of J_1 to J_2."""
    genus: int
    pairs: int                                      # dim of the exterior square of J_1
    image_rank: int                                 # dim of the span of brackets
    relations: List[Dict[Tuple[int, int], object]]  # kernel vectors over basis pairs

    @property
    def dimension(self) -> int:
        return len(self.relations)


def quadratic_relations(genus: int, jobs: int = 1) -> QuadraticRelations:
    """Relations among brackets [D_i, D_j], i < j, of a J_1 basis."""
    basis = johnson_image(genus, 1, jobs).basis
    weights = [d.weight for d in basis]
    blocks: Dict[tuple, List[Tuple[int, int]]] = {}
    for i, j in itertools.combinations(range(len(basis)), 2):
        key = tuple(a + b for a, b in zip(weights[i], weights[j]))
        blocks.setdefault(key, []).append((i, j))

    def solve(pairs: List[Tuple[int, int]]) -> Tuple[int, List[Dict[Tuple[int, int], object]]]:
        images = [basis[i].bracket(basis[j]).coordinates() for i, j in pairs]
        kernel = nullspace_rows(images)
        relations = [{pairs[k]: c for k, c in vector.items()} for vector in kernel]
        return len(pairs) - len(kernel), relations

    image_rank = 0
    relations: List[Dict[Tuple[int, int], object]] = []
    for block_rank, block_relations in map_blocks(solve, [blocks[k] for k in sorted(blocks)], jobs):
        image_rank += block_rank
        relations.extend(block_relations)
    total = len(basis) * (len(basis) - 1) // 2
    logger.info(f"quadratic relations at genus {genus}: {len(relations)} of {total} pairs")
    return QuadraticRelations(genus, total, image_rank, relations)


def cobracket_on_image(vectors: Union[Subspace, Sequence[ThetaDerivation]]) -> int:
    """Rank of the cobracket composed with the inverse of kappa on a span."""
    basis = vectors.basis if isinstance(vectors, Subspace) else list(vectors)
    images = [turaev_cobracket(kappa_inverse(d)).terms for d in basis]
    return rank(images)

"""
Johnson Lab - Symmetric Power Decomposition
Power operations on cyclic words and the |Sym^n L(H)| decomposition.

The power operation psi_k acts on |Sym^n L(H)| as multiplication by k^n,
so the decomposition |T(H)|_w = sum_n |Sym^n L(H)|_w is the eigenspace
decomposition of psi_2. Components are cut out with Lagrange projectors
in psi_2; no explicit PBW basis is ever built.
"""

import itertools
import logging
from collections import defaultdict
from functools import lru_cache
from typing import Dict, List, Tuple

from sympy import QQ

from .alphabet import Alphabet
from .linalg import map_blocks, nullspace_rows, rank
from .poly import CyclicPoly, TensorPoly, cyclic_project
from .words import Word, letter_content, necklaces

logger = logging.getLogger('johnsonlab.algebra.sym')


@lru_cache(maxsize=65536)
def _adams_word(word: Word, k: int) -> Tuple[Tuple[Word, int], ...]:
    """psi_k(w): sum over maps positions -> {1..k} of the concatenated restrictions."""
    n = len(word)
    counts: Dict[Word, int] = defaultdict(int)
    if k == 0:
        return (((), 1),) if n == 0 else ()
    if k == 1:
        return ((word, 1),)
    if k == 2:
        for mask in range(1 << n):
            left = tuple(word[i] for i in range(n) if mask >> i & 1)
            right = tuple(word[i] for i in range(n) if not mask >> i & 1)
            counts[left + right] += 1
    else:
        for assignment in itertools.product(range(k), repeat=n):
            counts[tuple(word[i] for part in range(k) for i in range(n)
                         if assignment[i] == part)] += 1
    return tuple(sorted(counts.items()))


def adams_tensor(t: TensorPoly, k: int) -> TensorPoly:
    """The k-th convolution power of the identity of T(H) (primitive letters)."""
    if k < 0:
        raise ValueError(f"power operation index must be >= 0, got {k}")
    out: Dict[Word, object] = {}
    for word, coef in t.terms.items():
        for w, count in _adams_word(word, k):
            out[w] = out.get(w, QQ(0)) + coef * count
    return TensorPoly(t.alphabet, out)


def adams_cyclic(c: CyclicPoly, k: int) -> CyclicPoly:
    """psi_k on cyclic words, computed on canonical representatives."""
    return cyclic_project(adams_tensor(c.representatives(), k))


def power_operation(c: CyclicPoly, k: int) -> CyclicPoly:
    """Graded power operation gamma -> gamma^k; acts by k^n on |Sym^n L(H)|."""
    return adams_cyclic(c, k)


def _project_homogeneous(c: CyclicPoly, n: int, w: int) -> CyclicPoly:
    if w == 0:
        return c if n == 0 else CyclicPoly.zero(c.alphabet)
    if n < 1 or n > w:
        return CyclicPoly.zero(c.alphabet)
    result = c
    target = QQ(2) ** n
    for j in range(1, w + 1):
        if j == n or not result:
            continue
        eigenvalue = QQ(2) ** j
        result = (adams_cyclic(result, 2) - result.scale(eigenvalue)).scale(QQ(1) / (target - eigenvalue))
    return result


def sym_component_project(c: CyclicPoly, n: int) -> CyclicPoly:
    """
    Component of ``c`` in |Sym^n L(H)|.

    Args:
        c: Cyclic polynomial (each homogeneous part is projected separately)
        n: Symmetric power

    Returns:
        The |Sym^n| component; components for n > weight vanish
    """
    if n < 0:
        raise ValueError(f"symmetric power must be >= 0, got {n}")
    total = CyclicPoly.zero(c.alphabet)
    for w, part in c.homogeneous_parts().items():
        total = total + _project_homogeneous(part, n, w)
    return total


def cyclic_basis(alphabet: Alphabet, n: int) -> List[CyclicPoly]:
    """Necklace basis of the weight-n cyclic words."""
    return [CyclicPoly._wrap(alphabet, {w: QQ(1)}) for w in necklaces(alphabet.size, n)]


def _content_blocks(alphabet: Alphabet, w: int) -> List[List[Word]]:
    blocks: Dict[Tuple[int, ...], List[Word]] = defaultdict(list)
    for word in necklaces(alphabet.size, w):
        blocks[letter_content(word, alphabet.size)].append(word)
    return [blocks[key] for key in sorted(blocks)]


def _eigen_images(alphabet: Alphabet, block: List[Word], n: int) -> List[Dict[Word, object]]:
    target = QQ(2) ** n
    images = []
    for word in block:
        image = dict(adams_cyclic(CyclicPoly._wrap(alphabet, {word: QQ(1)}), 2).terms)
        image[word] = image.get(word, QQ(0)) - target
        images.append({k: v for k, v in image.items() if v})
    return images


def sym_dimensions(alphabet: Alphabet, w: int, jobs: int = 1) -> Dict[int, int]:
    """
    Dimensions of |Sym^n L(H)|_w for n = 1..w (n = 0 when w = 0).

    The sum of the returned dimensions equals the number of necklaces.
    """
    if w == 0:
        return {0: 1}

    def block_dims(block: List[Word]) -> Dict[int, int]:
        return {n: len(block) - rank(_eigen_images(alphabet, block, n)) for n in range(1, w + 1)}

    totals = {n: 0 for n in range(1, w + 1)}
    for dims in map_blocks(block_dims, _content_blocks(alphabet, w), jobs):
        for n, d in dims.items():
            totals[n] += d
    logger.debug(f"|Sym^n|_{w} dimensions over {alphabet.describe()}: {totals}")
    return totals


def sym_basis(alphabet: Alphabet, n: int, w: int, jobs: int = 1) -> List[CyclicPoly]:
    """Basis of |Sym^n L(H)|_w, one letter-content block at a time."""
    if w == 0:
        return [CyclicPoly.empty(alphabet)] if n == 0 else []
    if n < 1 or n > w:
        return []

    def block_basis(block: List[Word]) -> List[CyclicPoly]:
        kernel = nullspace_rows(_eigen_images(alphabet, block, n))
        return [CyclicPoly._wrap(alphabet, {block[j]: c for j, c in vector.items()})
                for vector in kernel]

    basis: List[CyclicPoly] = []
    for part in map_blocks(block_basis, _content_blocks(alphabet, w), jobs):
        basis.extend(part)
    return basis

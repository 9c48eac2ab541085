"""
Johnson Lab - Exact Linear Algebra
Sparse rational kernels, ranks and incremental row reduction.

Vectors are dicts key -> QQ with arbitrary sortable keys (words, pairs of
words, (letter, word) tuples). Matrix work goes through sympy's
DomainMatrix in its sparse (SDM) format over QQ.
"""

import heapq
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Sequence, TypeVar

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.utils.errors import InvariantViolation

logger = logging.getLogger('johnsonlab.algebra.linalg')

Vector = Dict[Hashable, object]
T = TypeVar('T')
R = TypeVar('R')


def _column_matrix(images: Sequence[Mapping], extra: Sequence[Mapping] = ()) -> DomainMatrix:
    """Matrix whose j-th column is images[j] (then the extra columns)."""
    columns = list(images) + list(extra)
    keys = sorted(set().union(*[set(col) for col in columns]))
    index = {key: i for i, key in enumerate(keys)}
    rows: Dict[int, Dict[int, object]] = {}
    for j, col in enumerate(columns):
        for key, coef in col.items():
            if coef:
                rows.setdefault(index[key], {})[j] = QQ.convert(coef)
    return DomainMatrix(rows, (len(keys), len(columns)), QQ)


def _rows_of(matrix: DomainMatrix) -> List[Dict[int, object]]:
    sparse = matrix.to_sparse().rep
    return [dict(sparse.get(i, {})) for i in range(matrix.shape[0])]


def nullspace_rows(images: Sequence[Mapping]) -> List[Dict[int, object]]:
    """
    Basis of the kernel of the map sending unknown j to ``images[j]``.

    Args:
        images: Image vector of each unknown

    Returns:
        Kernel vectors as sparse dicts unknown index -> coefficient
    """
    n = len(images)
    if n == 0:
        return []
    if not any(images):
        return [{j: QQ(1)} for j in range(n)]
    matrix = _column_matrix(images)
    kernel = _rows_of(matrix.nullspace())
    logger.debug(f"nullspace: {matrix.shape[0]}x{n} matrix, kernel dimension {len(kernel)}")
    return kernel


def rank(vectors: Sequence[Mapping]) -> int:
    """Rank of a family of sparse vectors."""
    vectors = [v for v in vectors if v]
    if not vectors:
        return 0
    return _column_matrix(vectors).rank()


def solve_unique(images: Sequence[Mapping], rhs: Mapping) -> Dict[int, object]:
    """
    Unique solution x of sum_j x_j images[j] = rhs.

    Raises:
        InvariantViolation: If the system has no solution or more than one
    """
    negated = {key: -QQ.convert(c) for key, c in rhs.items()}
    kernel = nullspace_rows(list(images) + [negated])
    last = len(images)
    if len(kernel) != 1 or not kernel[0].get(last):
        raise InvariantViolation(
            f"expected a unique solution, augmented kernel has dimension {len(kernel)}")
    vector = kernel[0]
    scale = vector[last]
    return {j: c / scale for j, c in vector.items() if j != last}


def solution_dimension(images: Sequence[Mapping], rhs: Mapping) -> int:
    """Dimension of the kernel of the augmented system [A | -rhs]."""
    negated = {key: -QQ.convert(c) for key, c in rhs.items()}
    return len(nullspace_rows(list(images) + [negated]))


def combine(vectors: Sequence[Mapping], coefficients: Mapping[int, object]) -> Vector:
    """sum_j coefficients[j] * vectors[j]."""
    out: Vector = {}
    for j, c in coefficients.items():
        for key, v in vectors[j].items():
            out[key] = out.get(key, QQ(0)) + c * v
    return {k: v for k, v in out.items() if v}


class RowReducer:
    """
    Incremental echelon form over QQ.

    Each pivot row is normalized to coefficient 1 at its pivot and carries
    only keys >= the pivot, so reduction can proceed in key order.
    """

    def __init__(self):
        self.pivots: Dict[Hashable, Dict[Hashable, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vector: Mapping) -> Vector:
        """Residual of ``vector`` after eliminating every pivot key."""
        residual: Vector = {k: QQ.convert(c) for k, c in vector.items() if c}
        heap = list(residual)
        heapq.heapify(heap)
        while heap:
            key = heapq.heappop(heap)
            coef = residual.get(key)
            if coef is None:
                continue
            row = self.pivots.get(key)
            if row is None:
                continue
            for k, c in row.items():
                prev = residual.get(k)
                if prev is None:
                    residual[k] = -coef * c
                    heapq.heappush(heap, k)
                else:
                    new = prev - coef * c
                    if new:
                        residual[k] = new
                    else:
                        del residual[k]
        return residual

    def add(self, vector: Mapping) -> bool:
        """Insert a vector; returns False if it was already in the span."""
        residual = self.reduce(vector)
        if not residual:
            return False
        pivot = min(residual)
        scale = residual[pivot]
        self.pivots[pivot] = {k: c / scale for k, c in residual.items()}
        return True

    def contains(self, vector: Mapping) -> bool:
        return not self.reduce(vector)


def map_blocks(func: Callable[[T], R], blocks: Iterable[T], jobs: int = 1) -> List[R]:
    """
    Apply ``func`` to independent blocks, optionally on worker threads.

    Results come back in input order whatever the job count.
    """
    blocks = list(blocks)
    if jobs <= 1 or len(blocks) <= 1:
        return [func(block) for block in blocks]
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(func, blocks))

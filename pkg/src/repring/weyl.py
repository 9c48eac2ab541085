"""
Johnson Lab - Irreducible Characters
Irreducible Sp(2g) characters by Freudenthal's multiplicity formula,
decomposition of characters and the formal sums of irreducibles.
"""

import logging
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Mapping, Sequence, Tuple

from sympy import QQ

from src.utils.errors import InvariantViolation, ModelMismatch, ParseError
from .character import Exponent, SpCharacter, dominant_representative, weyl_orbit

logger = logging.getLogger('johnsonlab.repring.weyl')

Partition = Tuple[int, ...]


def normalize_partition(partition: Sequence[int], genus: int) -> Partition:
    """
    Pad a partition with zeros to length g.

    Raises:
        ValueError: More than g parts, negative or increasing parts
    """
    parts = [int(p) for p in partition if int(p) != 0]
    if any(p < 0 for p in parts):
        raise ValueError(f"partition {list(partition)} has negative parts")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition {list(partition)} is not non-increasing")
    if len(parts) > genus:
        raise ValueError(f"partition {list(partition)} has more than {genus} parts")
    return tuple(parts) + (0,) * (genus - len(parts))


def strip_partition(partition: Partition) -> Partition:
    return tuple(p for p in partition if p)


def positive_roots(genus: int) -> List[Exponent]:
    """e_i - e_j, e_i + e_j (i < j) and 2e_i."""
    roots = []
    for i in range(genus):
        for j in range(i + 1, genus):
            for sign in (-1, 1):
                root = [0] * genus
                root[i], root[j] = 1, sign
                roots.append(tuple(root))
        root = [0] * genus
        root[i] = 2
        roots.append(tuple(root))
    return roots


def rho(genus: int) -> Exponent:
    return tuple(range(genus, 0, -1))


def _dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def weyl_dimension(partition: Sequence[int], genus: int) -> int:
    """prod over positive roots of (lambda + rho, alpha) / (rho, alpha)."""
    lam = normalize_partition(partition, genus)
    shifted = tuple(a + b for a, b in zip(lam, rho(genus)))
    value = QQ(1)
    for alpha in positive_roots(genus):
        value *= QQ(_dot(shifted, alpha), _dot(rho(genus), alpha))
    return int(value)


def _depth(lam: Partition, mu: Partition) -> int:
    """Sum of the simple-root coefficients of lam - mu (negative if mu is not below)."""
    diff = [a - b for a, b in zip(lam, mu)]
    partial, coefficients = 0, []
    for d in diff[:-1]:
        partial += d
        coefficients.append(partial)
    total = sum(diff)
    if total % 2:
        return -1
    coefficients.append(total // 2)
    return sum(coefficients) if all(c >= 0 for c in coefficients) else -1


def _dominant_below(lam: Partition) -> Iterator[Partition]:
    """Dominant weights mu with lam - mu a non-negative sum of simple roots."""
    genus = len(lam)

    def extend(prefix: List[int], bound: int) -> Iterator[Partition]:
        if len(prefix) == genus:
            mu = tuple(prefix)
            if _depth(lam, mu) >= 0:
                yield mu
            return
        for value in range(bound, -1, -1):
            yield from extend(prefix + [value], value)

    yield from extend([], lam[0] if lam else 0)


def dominant_multiplicities(partition: Sequence[int], genus: int) -> Dict[Partition, int]:
    """Weight multiplicities of V_lambda on dominant weights (Freudenthal)."""
    lam = normalize_partition(partition, genus)
    shift = rho(genus)
    roots = positive_roots(genus)
    target = _dot([a + b for a, b in zip(lam, shift)], [a + b for a, b in zip(lam, shift)])
    weights = sorted(_dominant_below(lam), key=lambda mu: _depth(lam, mu))
    mult: Dict[Partition, int] = {}
    for mu in weights:
        if mu == lam:
            mult[mu] = 1
            continue
        numerator = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu, alpha))
                m_nu = mult.get(dominant_representative(nu), 0)
                if not m_nu:
                    break
                numerator += m_nu * _dot(nu, alpha)
                k += 1
        mu_shift = [a + b for a, b in zip(mu, shift)]
        denominator = target - _dot(mu_shift, mu_shift)
        value = QQ(2 * numerator, denominator)
        if value.denominator != 1:
            raise InvariantViolation(f"non-integral multiplicity {value} at {mu} in V{list(lam)}")
        if value:
            mult[mu] = int(value)
    return mult


@lru_cache(maxsize=None)
def _irr_cached(lam: Partition) -> SpCharacter:
    terms: Dict[Exponent, int] = {}
    for mu, m in dominant_multiplicities(lam, len(lam)).items():
        for exponent in weyl_orbit(mu):
            terms[exponent] = m
    return SpCharacter(len(lam), terms)


def irr_character(partition: Sequence[int], genus: int) -> SpCharacter:
    """
    Character of the irreducible module V_lambda.

    Raises:
        ValueError: If lambda has more than g parts
    """
    return _irr_cached(normalize_partition(partition, genus))


class RepElement:
    """Formal integer combination of irreducibles V_lambda."""

    def __init__(self, genus: int, multiplicities: Mapping[Sequence[int], int] = None):
        self.genus = genus
        clean: Dict[Partition, int] = {}
        for partition, m in (multiplicities or {}).items():
            key = strip_partition(normalize_partition(partition, genus))
            clean[key] = clean.get(key, 0) + int(m)
        self.multiplicities = {k: v for k, v in sorted(clean.items(), reverse=True) if v}

    def character(self) -> SpCharacter:
        total = SpCharacter.zero(self.genus)
        for partition, m in self.multiplicities.items():
            total = total + irr_character(partition, self.genus).scale(m)
        return total

    @property
    def dimension(self) -> int:
        return sum(m * weyl_dimension(p, self.genus) for p, m in self.multiplicities.items())

    def multiplicity(self, partition: Sequence[int]) -> int:
        return self.multiplicities.get(strip_partition(normalize_partition(partition, self.genus)), 0)

    def __add__(self, other: 'RepElement') -> 'RepElement':
        if self.genus != other.genus:
            raise ModelMismatch(f"representations of genus {self.genus} and {other.genus}")
        merged = dict(self.multiplicities)
        for p, m in other.multiplicities.items():
            merged[p] = merged.get(p, 0) + m
        return RepElement(self.genus, merged)

    def __neg__(self):
        return RepElement(self.genus, {p: -m for p, m in self.multiplicities.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, RepElement):
            return NotImplemented
        return self.genus == other.genus and self.multiplicities == other.multiplicities

    def __hash__(self):
        return hash((self.genus, frozenset(self.multiplicities.items())))

    def to_dict(self) -> Dict[str, int]:
        return {'[' + ','.join(str(p) for p in partition) + ']': m
                for partition, m in self.multiplicities.items()}

    @classmethod
    def from_dict(cls, data: Any, genus: int, location: str = '$') -> 'RepElement':
        if not isinstance(data, Mapping):
            raise ParseError("representation must be an object of partition -> multiplicity", location)
        multiplicities = {}
        for key, m in data.items():
            where = f"{location}.{key}"
            text = str(key).strip()
            if not (text.startswith('[') and text.endswith(']')):
                raise ParseError(f"partition key {key!r} must look like [2,1]", where)
            body = text[1:-1].strip()
            try:
                partition = tuple(int(p) for p in body.split(',')) if body else ()
                normalize_partition(partition, genus)
            except ValueError as e:
                raise ParseError(str(e), where) from e
            if isinstance(m, bool) or not isinstance(m, int):
                raise ParseError(f"multiplicity must be an integer, got {m!r}", where)
            multiplicities[partition] = m
        return cls(genus, multiplicities)

    def __repr__(self):
        if not self.multiplicities:
            return "0"
        parts = []
        for partition, m in self.multiplicities.items():
            label = 'V[' + ','.join(str(p) for p in partition) + ']'
            parts.append(label if m == 1 else f"{m} {label}")
        return ' + '.join(parts)


def decompose(character: SpCharacter) -> RepElement:
    """
    Expand a Weyl-invariant character into irreducibles.

    The lexicographically largest dominant weight present is maximal for
    dominance, so subtracting its irreducible strictly lowers the leading
    term.

    Raises:
        InvariantViolation: If the character is not Weyl invariant
    """
    character.require_invariant()
    genus = character.genus
    remainder = character
    result: Dict[Partition, int] = {}
    while remainder.terms:
        dominant = remainder.dominant_terms()
        leading = max(dominant)
        m = dominant[leading]
        result[leading] = m
        remainder = remainder - irr_character(leading, genus).scale(m)
    decomposition = RepElement(genus, result)
    logger.debug(f"decomposed character of dimension {character.dimension}: {decomposition!r}")
    return decomposition


def char_of_subspace(space: Any) -> SpCharacter:
    """
    Character of a torus-graded space.

    Args:
        space: Anything with ``block_dimensions()`` and an ``alphabet``
            (a Subspace), or a mapping weight -> dimension

    Raises:
        InvariantViolation: If the weights are not Weyl invariant
    """
    if isinstance(space, Mapping):
        weights = dict(space)
        genus = len(next(iter(weights))) if weights else 0
    else:
        space.alphabet.require_symplectic('char_of_subspace')
        genus = space.alphabet.genus
        weights = space.block_dimensions()
    character = SpCharacter(genus, weights)
    character.require_invariant()
    return character

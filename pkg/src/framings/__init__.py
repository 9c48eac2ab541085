"""
Johnson Lab - Framings Module
Mod-2 quadratic form, Arf invariant and orbit classification of framings
of a genus-g surface with one boundary component.

A framing is described by the rotation numbers of a symplectic basis
a_1, b_1, ..., a_g, b_g and, for genus 1, by a sample of rotation numbers
of non-separating simple closed curves.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence

import numpy as np

from src.utils.errors import InsufficientData, ParseError

logger = logging.getLogger('johnsonlab.framings')


class OrbitKind(Enum):
    """How an orbit of framings is labelled."""
    ARF = "ARF"      # g >= 2: two orbits told apart by the Arf invariant
    GCD = "GCD"      # g = 1: orbits indexed by A = gcd of rotation numbers


@dataclass
class SccSample:
    """Rotation number of a non-separating curve, with its homology class if known."""
    rotation: int
    homology: Optional[List[int]] = None


@dataclass
class FramingData:
    """Rotation numbers rot(a_j), rot(b_j) of a symplectic basis."""
    genus: int
    rot_a: List[int]
    rot_b: List[int]
    scc: List[SccSample] = field(default_factory=list)

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError(f"framings need genus >= 1, got {self.genus}")
        if len(self.rot_a) != self.genus or len(self.rot_b) != self.genus:
            raise ValueError(f"expected {self.genus} rotation numbers for each of a_j and b_j")

    @classmethod
    def from_dict(cls, data: Any, location: str = '$') -> 'FramingData':
        """
        Parse {"genus": g, "rot_a": [...], "rot_b": [...], "scc": [...]}.

        Each scc entry is an integer rotation number or an object
        {"rotation": r, "class": [x_1, y_1, ..., x_g, y_g]}.
        """
        if not isinstance(data, Mapping):
            raise ParseError("framing must be a JSON object", location)
        genus = data.get('genus')
        if isinstance(genus, bool) or not isinstance(genus, int):
            raise ParseError("genus must be an integer", f"{location}.genus")
        rot = {}
        for key in ('rot_a', 'rot_b'):
            values = data.get(key)
            if not isinstance(values, list) or not all(_is_int(v) for v in values):
                raise ParseError(f"{key} must be a list of integers", f"{location}.{key}")
            rot[key] = values
        samples = []
        raw = data.get('scc', [])
        if not isinstance(raw, list):
            raise ParseError("scc must be a list", f"{location}.scc")
        for i, item in enumerate(raw):
            where = f"{location}.scc[{i}]"
            if _is_int(item):
                samples.append(SccSample(item))
            elif isinstance(item, Mapping) and _is_int(item.get('rotation')):
                homology = item.get('class')
                if homology is not None and (not isinstance(homology, list)
                                             or len(homology) != 2 * genus
                                             or not all(_is_int(v) for v in homology)):
                    raise ParseError(f"class must list {2 * genus} integers", f"{where}.class")
                samples.append(SccSample(item['rotation'], homology))
            else:
                raise ParseError("scc entry must be an integer or {rotation, class}", where)
        try:
            return cls(genus, rot['rot_a'], rot['rot_b'], samples)
        except ValueError as e:
            raise ParseError(str(e), location) from e

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'genus': self.genus, 'rot_a': list(self.rot_a), 'rot_b': list(self.rot_b)}
        if self.scc:
            data['scc'] = [s.rotation if s.homology is None else {'rotation': s.rotation, 'class': s.homology}
                           for s in self.scc]
        return data


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _f(rotation: int) -> int:
    """f(c) = 1 + rot(c) mod 2."""
    return (1 + rotation) % 2


def arf(framing: FramingData) -> int:
    """Arf invariant sum_j f(a_j) f(b_j) mod 2."""
    return sum(_f(a) * _f(b) for a, b in zip(framing.rot_a, framing.rot_b)) % 2


def quadratic_form(framing: FramingData, homology: Sequence[int]) -> int:
    """
    f on the class x_1 a_1 + y_1 b_1 + ... + x_g a_g + y_g b_g.

    Uses f(x + y) = f(x) + f(y) + x.y mod 2, so only parities matter.
    """
    if len(homology) != 2 * framing.genus:
        raise ValueError(f"homology class needs {2 * framing.genus} coordinates, got {len(homology)}")
    value = 0
    for j in range(framing.genus):
        x, y = homology[2 * j] % 2, homology[2 * j + 1] % 2
        value += x * _f(framing.rot_a[j]) + y * _f(framing.rot_b[j]) + x * y
    return value % 2


@dataclass
class OrbitDescriptor:
    """Orbit of a framing under the mapping class group."""
    genus: int
    kind: OrbitKind
    arf: int
    gcd: Optional[int] = None
    parity_consistent: bool = True
    inconsistent_samples: List[int] = field(default_factory=list)

    def describe(self) -> str:
        if self.kind is OrbitKind.ARF:
            return f"Arf {self.arf}"
        text = f"A = {self.gcd} (Arf {self.arf})"
        if not self.parity_consistent:
            text += ", parity inconsistent"
        return text


def classify_orbit(framing: FramingData) -> OrbitDescriptor:
    """
    Orbit descriptor: the Arf invariant for g >= 2, the gcd A of the
    sampled rotation numbers for g = 1.

    For g = 1 the congruence A = 1 + Arf (mod 2) is checked, as is the
    parity of every sample whose homology class is given.

    Raises:
        InsufficientData: g = 1 without rotation samples
    """
    arf_bit = arf(framing)
    if framing.genus >= 2:
        return OrbitDescriptor(framing.genus, OrbitKind.ARF, arf_bit)
    if not framing.scc:
        raise InsufficientData("genus 1 classification needs rotation numbers of "
                               "non-separating simple closed curves")
    rotations = np.array([abs(s.rotation) for s in framing.scc], dtype=np.int64)
    gcd = int(np.gcd.reduce(rotations))
    consistent = gcd % 2 == (1 + arf_bit) % 2
    bad = [i for i, s in enumerate(framing.scc)
           if s.homology is not None and quadratic_form(framing, s.homology) != _f(s.rotation)]
    descriptor = OrbitDescriptor(1, OrbitKind.GCD, arf_bit, gcd,
                                 parity_consistent=consistent and not bad,
                                 inconsistent_samples=bad)
    if not descriptor.parity_consistent:
        logger.warning(f"framing data fails the parity congruence: {descriptor.describe()}")
    return descriptor


__all__ = [
    'FramingData',
    'OrbitDescriptor',
    'OrbitKind',
    'SccSample',
    'arf',
    'classify_orbit',
    'quadratic_form',
]

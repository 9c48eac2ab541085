"""
Johnson Lab - Moebius Inversion
Recover the graded pieces of a graded Lie algebra from the Euler
characteristics of its homology:

    Psi(x) = -x Phi'(x) / Phi(x),   h_n = (1/n) sum_{d | n} mu(d) psi^d Psi_{n/d}

Entries are plain integers (dimension mode) or Sp characters (character
mode); representation elements are accepted and returned as such.
"""

import logging
from typing import Any, List, Optional, Sequence, Union

from sympy import binomial, divisors
from sympy.ntheory import mobius

from src.utils.errors import ParseError
from .character import SpCharacter
from .lambda_ops import Element, adams, divide_exact, exterior_powers
from .weyl import RepElement, decompose

logger = logging.getLogger('johnsonlab.repring.mobius')

Entry = Union[int, SpCharacter, RepElement]


class GradedSeries:
    """Coefficients indexed by degree n = 0, 1, 2, ..."""

    def __init__(self, entries: Sequence[Entry]):
        self.entries = list(entries)

    @property
    def genus(self) -> Optional[int]:
        for entry in self.entries:
            if not isinstance(entry, int):
                return entry.genus
        return None

    @property
    def is_dimension_mode(self) -> bool:
        return self.genus is None

    def __getitem__(self, n: int) -> Entry:
        return self.entries[n]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self.entries == other.entries

    def dimensions(self) -> List[int]:
        out = []
        for entry in self.entries:
            if isinstance(entry, int):
                out.append(entry)
            else:
                out.append(entry.dimension)
        return out

    def to_list(self) -> List[Any]:
        return [e if isinstance(e, int) else e.to_dict() for e in self._as_reps()]

    def _as_reps(self) -> List[Entry]:
        return [decompose(e) if isinstance(e, SpCharacter) else e for e in self.entries]

    @classmethod
    def from_list(cls, data: Any, genus: Optional[int] = None, location: str = '$') -> 'GradedSeries':
        """Integers, or representation objects like {"[1]": 2} when a genus is given."""
        if not isinstance(data, list):
            raise ParseError("graded series must be a JSON array", location)
        entries: List[Entry] = []
        for n, item in enumerate(data):
            where = f"{location}[{n}]"
            if isinstance(item, bool):
                raise ParseError("booleans are not series entries", where)
            if isinstance(item, int):
                if genus is not None:
                    entries.append(RepElement(genus, {(): item}) if item else RepElement(genus))
                else:
                    entries.append(item)
            elif isinstance(item, dict):
                if genus is None:
                    raise ParseError("representation entries need a genus", where)
                entries.append(RepElement.from_dict(item, genus, where))
            else:
                raise ParseError(f"unexpected series entry {item!r}", where)
        if not entries:
            raise ParseError("graded series needs a degree-0 entry", location)
        head = entries[0]
        constant = head.multiplicities if isinstance(head, RepElement) else {(): head}
        if constant not in ({(): 1}, {(): -1}):
            raise ParseError("degree-0 entry must be +1 or -1 times the trivial class", f"{location}[0]")
        return cls(entries)

    def __repr__(self):
        return f"GradedSeries({self._as_reps()!r})"


def _to_elements(series: GradedSeries, length: int) -> List[Element]:
    genus = series.genus
    out: List[Element] = []
    for n in range(length):
        entry = series.entries[n] if n < len(series) else 0
        if isinstance(entry, RepElement):
            entry = entry.character()
        elif genus is not None and isinstance(entry, int):
            entry = SpCharacter.trivial(genus).scale(entry)
        out.append(entry)
    return out


def _unit_inverse(x: Element) -> Element:
    """Inverse of +1 or -1 (times the trivial class)."""
    if isinstance(x, int):
        if x not in (1, -1):
            raise ValueError(f"degree-0 entry {x} is not invertible")
        return x
    trivial = SpCharacter.trivial(x.genus)
    for sign in (1, -1):
        if x == trivial.scale(sign):
            return x
    raise ValueError("degree-0 entry is not plus or minus the trivial class")


def log_derivative(phi: List[Element], n_max: int) -> List[Element]:
    """Psi_0 .. Psi_{n_max} of Psi = -x Phi' / Phi."""
    inverse0 = _unit_inverse(phi[0])
    q = [inverse0]
    for n in range(1, n_max + 1):
        total = 0
        for k in range(1, n + 1):
            total = total + phi[k] * q[n - k]
        q.append(-(total * inverse0))
    psi: List[Element] = [phi[0] * 0]
    for n in range(1, n_max + 1):
        total = 0
        for k in range(1, n + 1):
            total = total + phi[k] * q[n - k] * k
        psi.append(-total)
    return psi


def mobius_invert(phi: GradedSeries, n_max: int) -> GradedSeries:
    """
    Degrees 1..N of the Lie algebra whose homology Euler series is Phi.

    Args:
        phi: Euler characteristic series, Phi_0 = +-1 (the trivial class)
        n_max: Truncation degree N >= 1

    Returns:
        Series h with h_0 = 0
    """
    if n_max < 1:
        raise ValueError(f"truncation must be >= 1, got {n_max}")
    elements = _to_elements(phi, n_max + 1)
    psi = log_derivative(elements, n_max)
    h: List[Element] = [elements[0] * 0]
    for n in range(1, n_max + 1):
        total = 0
        for d in divisors(n):
            mu = int(mobius(d))
            if mu:
                total = total + adams(psi[n // d], d) * mu
        h.append(divide_exact(total, n))
    logger.debug(f"inverted Euler series to degree {n_max}")
    if any(isinstance(e, RepElement) for e in phi):
        return GradedSeries([decompose(e) if isinstance(e, SpCharacter) else e for e in h])
    return GradedSeries(h)


def euler_series(h: GradedSeries, n_max: int) -> GradedSeries:
    """
    Euler characteristic series prod_n sum_k (-1)^k Lambda^k(h_n) x^{nk}.

    Inverse of ``mobius_invert`` up to degree N.
    """
    elements = _to_elements(h, n_max + 1)
    one = 1 if h.is_dimension_mode else SpCharacter.trivial(h.genus)
    result: List[Element] = [one] + [one * 0 for _ in range(n_max)]
    for n in range(1, n_max + 1):
        if not elements[n]:
            continue
        k_max = n_max // n
        if isinstance(elements[n], int):
            powers = [int(binomial(elements[n], k)) for k in range(k_max + 1)]
        else:
            powers = exterior_powers(elements[n], k_max)
        factor: List[Element] = [one * 0 for _ in range(n_max + 1)]
        for k, power in enumerate(powers):
            factor[n * k] = power * (-1) ** k
        product = [one * 0 for _ in range(n_max + 1)]
        for i, a in enumerate(result):
            if not a:
                continue
            for j in range(n_max + 1 - i):
                if factor[j]:
                    product[i + j] = product[i + j] + a * factor[j]
        result = product
    if any(isinstance(e, RepElement) for e in h):
        return GradedSeries([decompose(e) if isinstance(e, SpCharacter) else e for e in result])
    return GradedSeries(result)

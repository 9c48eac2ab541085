"""
Johnson Lab - Pure Braid Generators
The derivations e_{j,k}: e_t -> (delta_jt - delta_kt)[e_j, e_k] and a
check of the infinitesimal pure braid relations among them.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from src.algebra.alphabet import Alphabet
from .special import SpecialDer0, puncture_element

logger = logging.getLogger('johnsonlab.genus0.presentation')


def ejk_generator(alphabet: Alphabet, j: int, k: int, base: Optional[int] = None) -> SpecialDer0:
    """
    The generator e_{j,k} as a degree-1 special derivation.

    Components u_j = -e_k and u_k = -e_j; e_{j,j} is zero.
    """
    j, k = alphabet.puncture_index(j), alphabet.puncture_index(k)
    if j == k:
        return SpecialDer0.zero(alphabet, 1, base)
    components = {j: -puncture_element(alphabet, k), k: -puncture_element(alphabet, j)}
    return SpecialDer0(alphabet, components, degree=1, base=base)


@dataclass
class RelationsReport:
    """Outcome of checking the pure braid relations on n+1 punctures."""
    punctures: int
    checked: int = 0
    failures: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


def relations_check(n: int, base: Optional[int] = None) -> RelationsReport:
    """
    Verify the relations of the genus-0 pure braid Lie algebra on n+1 punctures.

    * sum_{j != k} e_{j,k} = 0 for every k
    * [e_{j,k}, e_{s,t}] = 0 for pairwise distinct j, k, s, t
    * [e_{j,l} + e_{l,k}, e_{j,k}] = 0 for pairwise distinct j, k, l

    Args:
        n: Number of punctures minus one (n >= 2)
        base: Base puncture of the normal form

    Returns:
        RelationsReport listing any relation that fails
    """
    if n < 2:
        raise ValueError(f"relations need at least 3 punctures, got n = {n}")
    alphabet = Alphabet.boundary(n + 1)
    punctures = range(n + 1)

    def e(j, k):
        return ejk_generator(alphabet, j, k, base)

    report = RelationsReport(punctures=n + 1)

    for k in punctures:
        total = sum((e(j, k) for j in punctures if j != k), SpecialDer0.zero(alphabet, 1, base))
        report.checked += 1
        if total:
            report.failures.append((f"sum_j e_(j,{k})", repr(total)))

    for j, k, s, t in itertools.permutations(punctures, 4):
        if j < k and s < t and (j, k) < (s, t):
            report.checked += 1
            value = e(j, k).bracket(e(s, t))
            if value:
                report.failures.append((f"[e_({j},{k}), e_({s},{t})]", repr(value)))

    for j, k, l in itertools.permutations(punctures, 3):
        if j < k:
            report.checked += 1
            value = (e(j, l) + e(l, k)).bracket(e(j, k))
            if value:
                report.failures.append((f"[e_({j},{l}) + e_({l},{k}), e_({j},{k})]", repr(value)))

    if report.holds:
        logger.info(f"pure braid relations hold on {n + 1} punctures ({report.checked} checked)")
    else:
        logger.warning(f"{len(report.failures)} of {report.checked} relations fail on {n + 1} punctures")
    return report


def mutated_relation(n: int = 3) -> SpecialDer0:
    """[e_{1,3}, e_{1,2}], which is not among the relations and does not vanish."""
    alphabet = Alphabet.boundary(n + 1)
    return ejk_generator(alphabet, 1, 3).bracket(ejk_generator(alphabet, 1, 2))

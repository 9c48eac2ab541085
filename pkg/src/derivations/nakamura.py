"""
Johnson Lab - Odd Symmetric Powers
The embedding mu of Sym^{2n+1}H into Der^theta_{2n+1} and the bracket of
its invariant square.
"""

import itertools
import logging
from functools import lru_cache
from math import factorial
from typing import Dict, List, Sequence, Tuple, Union

from sympy.utilities.iterables import multiset_permutations

from src.algebra.alphabet import Alphabet
from src.algebra.linalg import nullspace_rows
from src.algebra.poly import CyclicPair, CyclicPoly, TensorPoly, cyclic_project
from src.goldman_turaev.cobracket import turaev_cobracket
from src.goldman_turaev.kappa import kappa_derivation, kappa_inverse
from src.utils.errors import InvariantViolation, Unsupported
from .basis import theta_der_basis
from .derivation import DerivationKind, ThetaDerivation

logger = logging.getLogger('johnsonlab.derivations.nakamura')

Monomial = Tuple[int, ...]


def _monomial(alphabet: Alphabet, letters: Sequence[Union[int, str]]) -> Monomial:
    return tuple(sorted(alphabet.index(x) if isinstance(x, str) else int(x) for x in letters))


def _check_genus(genus: int, n: int) -> Alphabet:
    if genus < 2:
        raise Unsupported(f"the Sym^(2n+1)H embedding needs genus >= 2, got {genus}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Alphabet.symplectic(genus)


def caterpillar_sum(alphabet: Alphabet, monomial: Monomial) -> CyclicPoly:
    """
    sum_j sum_sigma |a_j [x_s0, [x_s1, ..., [x_s2n, b_j]...]]|.

    The sum runs over all of Sigma_{2n+1}; repeated letters are folded by
    weighting each distinct arrangement with the product of multiplicity
    factorials.
    """
    multiplicity = 1
    for _, group in itertools.groupby(monomial):
        multiplicity *= factorial(len(list(group)))
    total = CyclicPoly.zero(alphabet)
    for j in range(alphabet.genus):
        a_j, b_j = 2 * j, 2 * j + 1
        for arrangement in multiset_permutations(list(monomial)):
            tree = TensorPoly.letter(alphabet, b_j)
            for x in reversed(arrangement):
                tree = TensorPoly.letter(alphabet, x).bracket(tree)
            total = total + cyclic_project(TensorPoly.letter(alphabet, a_j) * tree)
    return total.scale(multiplicity)


@lru_cache(maxsize=None)
def _mu_cached(genus: int, n: int, monomial: Monomial) -> ThetaDerivation:
    alphabet = Alphabet.symplectic(genus)
    c = caterpillar_sum(alphabet, monomial)
    if c.is_zero():
        return ThetaDerivation.zero(alphabet, 2 * n + 1, DerivationKind.LIE)
    return kappa_derivation(c).as_kind(DerivationKind.LIE)


def mu_odd(genus: int, n: int, letters: Sequence[Union[int, str]]) -> ThetaDerivation:
    """
    Image of the monomial x_0 ... x_2n of Sym^{2n+1}H in Der^theta_{2n+1}.

    Args:
        genus: Genus (>= 2)
        n: Half of the odd symmetric power minus one
        letters: 2n + 1 letters, as indices or names like 'a1'

    Raises:
        Unsupported: For genus 1
    """
    alphabet = _check_genus(genus, n)
    monomial = _monomial(alphabet, letters)
    if len(monomial) != 2 * n + 1:
        raise ValueError(f"expected {2 * n + 1} letters, got {len(monomial)}")
    return _mu_cached(genus, n, monomial)


def sym_monomials(alphabet: Alphabet, k: int) -> List[Monomial]:
    return list(itertools.combinations_with_replacement(alphabet.letters, k))


def _act_on_monomial(derivation: ThetaDerivation, monomial: Monomial) -> Dict[Monomial, object]:
    """Degree-0 derivation acting on a commutative monomial."""
    out: Dict[Monomial, object] = {}
    for i, x in enumerate(monomial):
        for (y,), c in derivation.value(x).terms.items():
            image = tuple(sorted(monomial[:i] + (y,) + monomial[i + 1:]))
            out[image] = out.get(image, 0) + c
    return out


def _wedge(s: Monomial, t: Monomial, coef, target: Dict) -> None:
    if s == t:
        return
    if s > t:
        s, t, coef = t, s, -coef
    target[(s, t)] = target.get((s, t), 0) + coef


def _invariant_kernel(genus: int, n: int) -> Tuple[List[Tuple[Monomial, Monomial]], List[Dict[int, object]]]:
    """Kernel of the degree-0 derivation action on weight-0 pairs of the exterior square."""
    alphabet = Alphabet.symplectic(genus)
    monomials = sym_monomials(alphabet, 2 * n + 1)
    pairs = [(s, t) for s, t in itertools.combinations(monomials, 2)
             if not any(alphabet.word_weight(s + t))]
    generators = theta_der_basis(genus, 0, DerivationKind.LIE).basis
    images = []
    for s, t in pairs:
        image: Dict[Tuple[int, tuple], object] = {}
        for d_index, d0 in enumerate(generators):
            local: Dict[tuple, object] = {}
            for s2, c in _act_on_monomial(d0, s).items():
                _wedge(s2, t, c, local)
            for t2, c in _act_on_monomial(d0, t).items():
                _wedge(s, t2, c, local)
            for key, c in local.items():
                if c:
                    image[(d_index, key)] = c
        images.append(image)
    return pairs, nullspace_rows(images)


def invariant_line_dimension(genus: int, n: int) -> int:
    """Dimension of the sp(H)-invariants of the exterior square of Sym^{2n+1}H."""
    _check_genus(genus, n)
    return len(_invariant_kernel(genus, n)[1])


def mu_squared(genus: int, n: int) -> ThetaDerivation:
    """
    sum c_st [mu(s), mu(t)] over the invariant line of the exterior square.

    Raises:
        InvariantViolation: If the invariant space is not a line
    """
    alphabet = _check_genus(genus, n)
    pairs, kernel = _invariant_kernel(genus, n)
    if len(kernel) != 1:
        raise InvariantViolation(
            f"expected a unique invariant line in the exterior square of Sym^{2 * n + 1}H, "
            f"found dimension {len(kernel)}")
    result = ThetaDerivation.zero(alphabet, 4 * n + 2, DerivationKind.LIE)
    for index, c in sorted(kernel[0].items()):
        s, t = pairs[index]
        term = _mu_cached(genus, n, s).bracket(_mu_cached(genus, n, t))
        result = result + term.scale(c)
    logger.info(f"mu^2 at genus {genus}, n={n}: {len(kernel[0])} pairs, "
                f"{len(result.coordinates())} coordinates")
    return result


def explore_mu2(genus: int, n: int) -> CyclicPair:
    """Cobracket of the cyclic preimage of mu^2."""
    return turaev_cobracket(kappa_inverse(mu_squared(genus, n)))

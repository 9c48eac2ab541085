"""
Johnson Lab - Polylogarithm Derivation
The depth-one derivation sigma_{2m+1} on the thrice-punctured sphere
and the divergence identity it satisfies modulo depth 2.
"""

import logging
from dataclasses import dataclass, field

from sympy import QQ, binomial

from src.algebra.alphabet import Alphabet
from src.algebra.poly import CyclicPoly, TensorPoly, cyclic_project
from .depth import depth_reduce, in_depth
from .divergence import divergence
from .special import SpecialDer0, puncture_element

logger = logging.getLogger('johnsonlab.genus0.polylog')

BASE = '1'


def ad_power(x: TensorPoly, n: int, y: TensorPoly) -> TensorPoly:
    """ad_x^n (y)."""
    for _ in range(n):
        y = x.bracket(y)
    return y


def sigma_polylog(m: int) -> SpecialDer0:
    """
    sigma_{2m+1} with base 1: u_0 = ad_{e0}^{2m} e1 and u_inf = ad_{einf}^{2m} e1.

    Over the free pair (e0, einf) these are -ad_{e0}^{2m} einf and
    -ad_{einf}^{2m} e0. The derivation is special only modulo depth 2.
    """
    if m < 1:
        raise ValueError(f"sigma needs m >= 1, got {m}")
    alphabet = Alphabet.three_punctured()
    e0 = puncture_element(alphabet, alphabet.puncture_index('0'))
    einf = puncture_element(alphabet, alphabet.puncture_index('inf'))
    components = {
        '0': -ad_power(e0, 2 * m, einf),
        'inf': -ad_power(einf, 2 * m, e0),
    }
    return SpecialDer0(alphabet, components, degree=2 * m + 1, base=BASE)


def binomial_expansion(m: int) -> TensorPoly:
    """-sum_{k=1}^{2m} (-1)^k C(2m, k) e0^k einf e0^(2m-k)."""
    alphabet = Alphabet.three_punctured()
    e0 = alphabet.letter_of_puncture(alphabet.puncture_index('0'))
    einf = alphabet.letter_of_puncture(alphabet.puncture_index('inf'))
    terms = {}
    for k in range(1, 2 * m + 1):
        word = (e0,) * k + (einf,) + (e0,) * (2 * m - k)
        terms[word] = -(-1) ** k * int(binomial(2 * m, k))
    return TensorPoly(alphabet, terms)


def polylog_rhs(m: int) -> CyclicPoly:
    """-(1/(2m+1)) (|e0^{2m+1}| + |e1^{2m+1}| + |einf^{2m+1}|) over the free pair."""
    alphabet = Alphabet.three_punctured()
    total = CyclicPoly.zero(alphabet)
    for p in range(alphabet.punctures):
        total = total + cyclic_project(puncture_element(alphabet, p).power(2 * m + 1))
    return total.scale(QQ(-1, 2 * m + 1))


@dataclass
class PolylogIdentityResult:
    """Both sides of div(sigma_{2m+1}) = rhs modulo depth 2."""
    m: int
    lhs: CyclicPoly
    rhs: CyclicPoly
    residual: CyclicPoly
    binomial_ok: bool
    holds: bool = field(init=False)

    def __post_init__(self):
        self.holds = self.binomial_ok and in_depth(self.residual, 2)


def appendix_a_check(m: int) -> PolylogIdentityResult:
    """
    Compare div(sigma_{2m+1}) with the power-sum right side modulo depth 2.

    Also checks the e0-part of u_0 against its binomial expansion.
    """
    sigma = sigma_polylog(m)
    alphabet = sigma.alphabet
    lhs = depth_reduce(divergence(sigma), 2)
    rhs = depth_reduce(polylog_rhs(m), 2)
    residual = lhs - rhs

    e0 = alphabet.letter_of_puncture(alphabet.puncture_index('0'))
    u0 = sigma.component('0')
    e0_part = TensorPoly.letter(alphabet, e0) * u0.left_coefficient(e0)
    binomial_ok = e0_part == binomial_expansion(m)

    result = PolylogIdentityResult(m=m, lhs=lhs, rhs=rhs, residual=residual, binomial_ok=binomial_ok)
    if result.holds:
        logger.info(f"sigma_{2 * m + 1} divergence identity holds modulo depth 2")
    else:
        logger.warning(f"sigma_{2 * m + 1} divergence identity fails: residual {residual!r}, "
                       f"binomial expansion {'ok' if binomial_ok else 'mismatch'}")
    return result


def sigma_special_residual(m: int) -> TensorPoly:
    """sum_j [u_j, e_j] for sigma_{2m+1}; it has e1-degree at least 2."""
    return sigma_polylog(m).special_residual()

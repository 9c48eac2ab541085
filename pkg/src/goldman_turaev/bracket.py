"""
Johnson Lab - Goldman Bracket
Graded Goldman bracket on cyclic words of the symplectic model.

{|x|, |y|} = sum_{j,k} <x_j, y_k> |x_{j+1}...x_{j-1} y_{k+1}...y_{k-1}|
"""

import logging
from collections import defaultdict
from typing import Dict, List, Tuple

from sympy import QQ

from src.algebra.alphabet import letter_pairing
from src.algebra.poly import CyclicPoly, cyclic_project, TensorPoly

logger = logging.getLogger('johnsonlab.goldman_turaev.bracket')


def _positions(word: Tuple[int, ...]) -> Dict[int, List[int]]:
    positions: Dict[int, List[int]] = defaultdict(list)
    for k, letter in enumerate(word):
        positions[letter].append(k)
    return positions


def goldman_bracket(x: CyclicPoly, y: CyclicPoly) -> CyclicPoly:
    """
    Goldman bracket of two cyclic polynomials.

    Raises:
        ModelMismatch: Boundary model or different alphabets
    """
    x.alphabet.require_symplectic('goldman_bracket')
    x.alphabet.check_same(y.alphabet)
    out: Dict[tuple, object] = {}
    for yword, ycoef in y.terms.items():
        ypos = _positions(yword)
        for xword, xcoef in x.terms.items():
            coef = xcoef * ycoef
            for j, letter in enumerate(xword):
                hits = ypos.get(letter ^ 1)
                if not hits:
                    continue
                sign = letter_pairing(letter, letter ^ 1)
                xrest = xword[j + 1:] + xword[:j]
                for k in hits:
                    word = xrest + yword[k + 1:] + yword[:k]
                    out[word] = out.get(word, QQ(0)) + sign * coef
    return cyclic_project(TensorPoly._wrap(x.alphabet, {w: c for w, c in out.items() if c}))


def antisymmetry_residual(x: CyclicPoly, y: CyclicPoly) -> CyclicPoly:
    return goldman_bracket(x, y) + goldman_bracket(y, x)


def jacobi_residual(x: CyclicPoly, y: CyclicPoly, z: CyclicPoly) -> CyclicPoly:
    """{x,{y,z}} + {y,{z,x}} + {z,{x,y}}."""
    return (goldman_bracket(x, goldman_bracket(y, z))
            + goldman_bracket(y, goldman_bracket(z, x))
            + goldman_bracket(z, goldman_bracket(x, y)))

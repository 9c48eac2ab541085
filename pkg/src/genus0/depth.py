"""
Johnson Lab - Depth Filtration
Depth of three-punctured elements and truncation modulo the depth filtration.

The filtration is the intersection over the three punctures of the
letter-degree filtrations: an element lies in depth >= k when, for each
puncture a, it is rewritten in a model where e_a is free and every term
there has at least k letters e_a.
"""

from typing import Optional, Union

from src.algebra.poly import CyclicPoly, TensorPoly, letter_degree
from src.utils.errors import Unsupported

Element = Union[TensorPoly, CyclicPoly]


def _require_three_punctures(p: Element) -> None:
    alphabet = p.alphabet
    if alphabet.is_symplectic or alphabet.punctures != 3:
        raise Unsupported("the depth filtration is implemented for three punctures only")


def letter_degrees(p: Element) -> Optional[tuple]:
    """Letter degrees of a nonzero element in punctures 0, 1, 2; None for zero."""
    _require_three_punctures(p)
    if not p.terms:
        return None
    return tuple(letter_degree(p, q) for q in range(p.alphabet.punctures))


def depth(p: Element) -> Optional[int]:
    """Largest k with p in depth >= k; None for zero."""
    degrees = letter_degrees(p)
    return None if degrees is None else min(degrees)


def in_depth(p: Element, k: int) -> bool:
    """Whether p lies in depth >= k. Zero lies in every depth."""
    d = depth(p)
    return d is None or d >= k


def word_depth(p: Element, word: tuple) -> int:
    """Depth of the single term of ``p`` on ``word``."""
    return depth(p.filter(lambda key: key == word))


def depth_reduce(p: Element, k: int) -> Element:
    """
    Drop every term whose own depth is >= k.

    Each term is rewritten over all three letters before counting, so a
    term survives as soon as one letter degree is below k.

    Raises:
        Unsupported: The alphabet is not the three-punctured sphere
    """
    _require_three_punctures(p)
    if k < 1:
        raise ValueError(f"depth must be >= 1, got {k}")
    return p.filter(lambda word: word_depth(p, word) < k)

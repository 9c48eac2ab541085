"""
Johnson Lab - Words
Lyndon words, necklaces and their counting formulas.

Words are tuples of letter indices; the alphabet order is the integer order.
"""

import itertools
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from sympy import divisors, totient
from sympy.ntheory import mobius

Word = Tuple[int, ...]


def lyndon_words(k: int, n: int) -> Iterator[Word]:
    """
    Lyndon words of length exactly ``n`` over ``k`` letters, in lex order.

    Duval's generation algorithm; each step costs amortized O(1).
    """
    if n < 1 or k < 1:
        return
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            yield tuple(w)
        while len(w) < n:
            w.append(w[-m])
        while w and w[-1] == k - 1:
            w.pop()


def lyndon_words_upto(k: int, n: int) -> List[Word]:
    words = []
    for length in range(1, n + 1):
        words.extend(lyndon_words(k, length))
    return words


def is_lyndon(word: Sequence[int]) -> bool:
    """A nonempty word strictly smaller than each of its proper suffixes."""
    w = tuple(word)
    if not w:
        return False
    return all(w < w[i:] for i in range(1, len(w)))


def standard_factorization(word: Sequence[int]) -> Tuple[Word, Word]:
    """
    Split a Lyndon word w = uv with v its longest proper Lyndon suffix.

    Raises:
        ValueError: If the word has length < 2 or is not Lyndon
    """
    w = tuple(word)
    if len(w) < 2 or not is_lyndon(w):
        raise ValueError(f"standard factorization needs a Lyndon word of length >= 2: {w}")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"no Lyndon suffix found for {w}")


def rotations(word: Sequence[int]) -> List[Word]:
    w = tuple(word)
    return [w[i:] + w[:i] for i in range(len(w))] or [()]


def canonical_rotation(word: Sequence[int]) -> Word:
    """Lexicographically least rotation (the necklace representative)."""
    w = tuple(word)
    if len(w) < 2:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def period(word: Sequence[int]) -> int:
    """Smallest p > 0 such that rotating by p fixes the word (0 for the empty word)."""
    w = tuple(word)
    n = len(w)
    for p in divisors(n) if n else []:
        if w[p:] + w[:p] == w:
            return p
    return n


def necklaces(k: int, n: int) -> List[Word]:
    """Canonical representatives of all necklaces of length ``n`` over ``k`` letters."""
    if n == 0:
        return [()]
    result = []
    for d in divisors(n):
        for u in lyndon_words(k, d):
            result.append(u * (n // d))
    return sorted(result)


@lru_cache(maxsize=None)
def necklace_count(k: int, n: int) -> int:
    """(1/n) sum_{d | n} phi(d) k^(n/d); one necklace of length 0."""
    if n == 0:
        return 1
    return sum(int(totient(d)) * k ** (n // d) for d in divisors(n)) // n


@lru_cache(maxsize=None)
def witt_dimension(k: int, n: int) -> int:
    """Witt's formula for the degree-n part of the free Lie algebra on k generators."""
    if n < 1:
        return 0
    return sum(int(mobius(d)) * k ** (n // d) for d in divisors(n)) // n


def all_words(k: int, n: int) -> Iterator[Word]:
    return itertools.product(range(k), repeat=n)


def letter_content(word: Sequence[int], k: int) -> Tuple[int, ...]:
    counts = [0] * k
    for letter in word:
        counts[letter] += 1
    return tuple(counts)

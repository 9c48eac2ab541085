"""
Johnson Lab - Sparse Polynomials
Exact sparse linear combinations of words, Lyndon words and cyclic words.

All coefficients live in sympy's QQ (gmpy2 ``mpq`` when available). A
polynomial never stores a zero coefficient, and instances are treated as
immutable once built, so they can be shared between threads.
"""

import heapq
import itertools
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ

from src.utils.errors import ModelMismatch, NotALieElement
from .alphabet import Alphabet, LinearForm
from .words import Word, canonical_rotation, is_lyndon, standard_factorization

logger = logging.getLogger('johnsonlab.algebra.poly')

Terms = Dict[tuple, object]


def to_coefficient(value) -> object:
    """
    Convert an exact number to a QQ element.

    Raises:
        TypeError: For floats, booleans and other inexact values
    """
    if isinstance(value, (bool, float)):
        raise TypeError(f"coefficients must be exact rationals, got {value!r}")
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def _accumulate(target: Terms, key, coef) -> None:
    prev = target.get(key)
    target[key] = coef if prev is None else prev + coef


def _prune(terms: Terms) -> Terms:
    return {k: c for k, c in terms.items() if c}


def concat_terms(left: Mapping, right: Mapping) -> Terms:
    """Concatenation product of two word->coefficient maps."""
    out: Terms = {}
    for u, cu in left.items():
        for v, cv in right.items():
            _accumulate(out, u + v, cu * cv)
    return _prune(out)


class SparsePoly:
    """
    Shared machinery of the sparse polynomial types.

    Subclasses decide how keys are normalized and how a key is printed.
    """

    kind = 'sparse'

    def __init__(self, alphabet: Alphabet, terms: Union[Mapping, Iterable, None] = None):
        self.alphabet = alphabet
        clean: Terms = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coef in items:
                c = to_coefficient(coef)
                if c:
                    _accumulate(clean, self._normalize_key(key), c)
        self.terms = _prune(clean)
        self._hash = None

    @classmethod
    def _wrap(cls, alphabet: Alphabet, terms: Terms) -> 'SparsePoly':
        """Build from an already normalized, zero-free term map."""
        obj = cls.__new__(cls)
        obj.alphabet = alphabet
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, alphabet: Alphabet) -> 'SparsePoly':
        return cls._wrap(alphabet, {})

    @staticmethod
    def _normalize_key(key) -> tuple:
        return tuple(key)

    @staticmethod
    def key_degree(key) -> int:
        return len(key)

    # ------------------------------------------------------------------
    # Linear structure

    def _check(self, other: 'SparsePoly') -> None:
        if type(other) is not type(self):
            raise ModelMismatch(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        self.alphabet.check_same(other.alphabet)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for key, coef in other.terms.items():
            _accumulate(terms, key, coef)
            if not terms[key]:
                del terms[key]
        return self._wrap(self.alphabet, terms)

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return self._wrap(self.alphabet, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> 'SparsePoly':
        c = to_coefficient(scalar)
        if not c:
            return self.zero(self.alphabet)
        return self._wrap(self.alphabet, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, SparsePoly):
            return NotImplemented
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(QQ(1) / to_coefficient(other))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(other) is not type(self):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.alphabet, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> List[Tuple[tuple, object]]:
        """Terms in canonical (sorted key) order."""
        return sorted(self.terms.items())

    def coefficient(self, key) -> object:
        return self.terms.get(self._normalize_key(key), QQ(0))

    # ------------------------------------------------------------------
    # Grading

    def degrees(self) -> List[int]:
        return sorted({self.key_degree(k) for k in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> Optional[int]:
        """The common degree of a homogeneous element (None for zero)."""
        degrees = self.degrees()
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError(f"element is not homogeneous (degrees {degrees})")
        return degrees[0]

    def homogeneous_part(self, n: int) -> 'SparsePoly':
        return self._wrap(self.alphabet,
                          {k: c for k, c in self.terms.items() if self.key_degree(k) == n})

    def homogeneous_parts(self) -> Dict[int, 'SparsePoly']:
        parts: Dict[int, Terms] = {}
        for key, coef in self.terms.items():
            parts.setdefault(self.key_degree(key), {})[key] = coef
        return {n: self._wrap(self.alphabet, t) for n, t in sorted(parts.items())}

    def filter(self, predicate: Callable[[tuple], bool]) -> 'SparsePoly':
        return self._wrap(self.alphabet, {k: c for k, c in self.terms.items() if predicate(k)})

    # ------------------------------------------------------------------

    def format_key(self, key) -> str:
        return format_word(self.alphabet, key)

    def __repr__(self):
        if not self.terms:
            return f"{type(self).__name__}(0)"
        parts = [f"{c}*{self.format_key(k)}" for k, c in self.items()]
        return f"{type(self).__name__}({' + '.join(parts)})"


def format_word(alphabet: Alphabet, word: Sequence[int]) -> str:
    """Compact text form ``a1.b1.a2``; the empty word prints as ``1``."""
    if not word:
        return '1'
    names = alphabet.names
    return '.'.join(names[x] for x in word)


class TensorPoly(SparsePoly):
    """Element of the tensor algebra T(H): a sparse combination of words."""

    kind = 'tensor'

    @classmethod
    def word(cls, alphabet: Alphabet, word: Sequence[int], coef=1) -> 'TensorPoly':
        return cls(alphabet, {tuple(word): coef})

    @classmethod
    def letter(cls, alphabet: Alphabet, letter: int) -> 'TensorPoly':
        return cls._wrap(alphabet, {(letter,): QQ(1)})

    @classmethod
    def one(cls, alphabet: Alphabet) -> 'TensorPoly':
        return cls._wrap(alphabet, {(): QQ(1)})

    @classmethod
    def from_linear_form(cls, alphabet: Alphabet, form: LinearForm) -> 'TensorPoly':
        return cls(alphabet, {(letter,): c for letter, c in form.items()})

    def __mul__(self, other):
        if isinstance(other, TensorPoly):
            return self.concat(other)
        return super().__mul__(other)

    def concat(self, other: 'TensorPoly') -> 'TensorPoly':
        self._check(other)
        return self._wrap(self.alphabet, concat_terms(self.terms, other.terms))

    def bracket(self, other: 'TensorPoly') -> 'TensorPoly':
        """Commutator uv - vu."""
        return self.concat(other) - other.concat(self)

    def power(self, k: int) -> 'TensorPoly':
        result = TensorPoly.one(self.alphabet)
        for _ in range(k):
            result = result.concat(self)
        return result

    def left_coefficient(self, letter: int) -> 'TensorPoly':
        """u^(k) in the decomposition u = sum_k e_k u^(k) (constant term dropped)."""
        return self._wrap(self.alphabet,
                          {w[1:]: c for w, c in self.terms.items() if w and w[0] == letter})

    def substitute(self, images: Mapping[int, 'TensorPoly'],
                   target: Optional[Alphabet] = None) -> 'TensorPoly':
        """
        Apply the algebra morphism sending each letter to ``images[letter]``.

        Args:
            images: Image of every letter occurring in the polynomial
            target: Alphabet of the images (defaults to this alphabet)
        """
        target = target or self.alphabet
        out: Terms = {}
        for word, coef in self.terms.items():
            partial: Terms = {(): coef}
            for letter in word:
                partial = concat_terms(partial, images[letter].terms)
                if not partial:
                    break
            for w, c in partial.items():
                _accumulate(out, w, c)
        return TensorPoly._wrap(target, _prune(out))


@lru_cache(maxsize=None)
def lyndon_tensor(word: Word) -> Tuple[Tuple[Word, object], ...]:
    """
    Tensor expansion of the standard bracketing P(w) of a Lyndon word.

    P(w) = w + (lexicographically larger words of the same content).
    """
    if len(word) == 1:
        return ((word, QQ(1)),)
    u, v = standard_factorization(word)
    pu, pv = dict(lyndon_tensor(u)), dict(lyndon_tensor(v))
    terms = concat_terms(pu, pv)
    for w, c in concat_terms(pv, pu).items():
        _accumulate(terms, w, -c)
    return tuple(sorted(_prune(terms).items()))


class LiePoly(SparsePoly):
    """Element of the free Lie algebra L(H) in Lyndon-basis coordinates."""

    kind = 'lie'

    @staticmethod
    def _normalize_key(key) -> tuple:
        key = tuple(key)
        if not is_lyndon(key):
            raise NotALieElement(f"{key} is not a Lyndon word")
        return key

    @classmethod
    def generator(cls, alphabet: Alphabet, letter: int) -> 'LiePoly':
        return cls._wrap(alphabet, {(letter,): QQ(1)})

    @classmethod
    def lyndon(cls, alphabet: Alphabet, word: Sequence[int], coef=1) -> 'LiePoly':
        return cls(alphabet, {tuple(word): coef})

    @property
    def tensor(self) -> TensorPoly:
        cached = getattr(self, '_tensor', None)
        if cached is None:
            out: Terms = {}
            for w, c in self.terms.items():
                for v, cv in lyndon_tensor(w):
                    _accumulate(out, v, c * cv)
            cached = TensorPoly._wrap(self.alphabet, _prune(out))
            self._tensor = cached
        return cached

    def bracket(self, other: 'LiePoly') -> 'LiePoly':
        self._check(other)
        return tensor_to_lie(self.tensor.bracket(other.tensor))


class CyclicPoly(SparsePoly):
    """Element of the cyclic quotient |T(H)|, keyed by least rotations."""

    kind = 'cyclic'

    @staticmethod
    def _normalize_key(key) -> tuple:
        return canonical_rotation(key)

    @classmethod
    def word(cls, alphabet: Alphabet, word: Sequence[int], coef=1) -> 'CyclicPoly':
        return cls(alphabet, {tuple(word): coef})

    @classmethod
    def empty(cls, alphabet: Alphabet, coef=1) -> 'CyclicPoly':
        """Class of the trivial loop |()|."""
        return cls(alphabet, {(): coef})

    def representatives(self) -> TensorPoly:
        """Tensor polynomial of canonical representatives."""
        return TensorPoly._wrap(self.alphabet, dict(self.terms))

    def format_key(self, key) -> str:
        return f"|{format_word(self.alphabet, key)}|"


class CyclicPair(SparsePoly):
    """Element of |T(H)| (x) |T(H)|, keyed by pairs of least rotations."""

    kind = 'cyclic_pair'

    @staticmethod
    def _normalize_key(key) -> tuple:
        left, right = key
        return (canonical_rotation(left), canonical_rotation(right))

    @staticmethod
    def key_degree(key) -> int:
        return len(key[0]) + len(key[1])

    def swap(self) -> 'CyclicPair':
        return self._wrap(self.alphabet, {(r, l): c for (l, r), c in self.terms.items()})

    def reduced(self) -> 'CyclicPair':
        """Drop every term with an empty tensor factor."""
        return self.filter(lambda key: bool(key[0]) and bool(key[1]))

    def format_key(self, key) -> str:
        left, right = key
        return f"|{format_word(self.alphabet, left)}|(x)|{format_word(self.alphabet, right)}|"


# ----------------------------------------------------------------------
# Conversions and named elements


def cyclic_project(t: TensorPoly) -> CyclicPoly:
    """Linear projection T(H) -> |T(H)| = T(H)/[T(H), T(H)]."""
    out: Terms = {}
    for w, c in t.terms.items():
        _accumulate(out, canonical_rotation(w), c)
    return CyclicPoly._wrap(t.alphabet, _prune(out))


def tensor_to_lie(t: TensorPoly) -> LiePoly:
    """
    Rewrite a tensor polynomial in the Lyndon basis.

    Repeatedly removes c * P(w) for the least remaining word w; the least
    word of a Lie element is always Lyndon.

    Raises:
        NotALieElement: If the input is not a Lie polynomial
    """
    remaining: Terms = dict(t.terms)
    heap = list(remaining)
    heapq.heapify(heap)
    result: Terms = {}
    while heap:
        w = heapq.heappop(heap)
        c = remaining.pop(w, None)
        if c is None:
            continue
        if not is_lyndon(w):
            raise NotALieElement(
                f"tensor polynomial is not a Lie element (least word "
                f"{format_word(t.alphabet, w)} is not Lyndon)")
        result[w] = c
        for v, cv in lyndon_tensor(w)[1:]:
            prev = remaining.get(v)
            if prev is None:
                remaining[v] = -c * cv
                heapq.heappush(heap, v)
            else:
                new = prev - c * cv
                if new:
                    remaining[v] = new
                else:
                    del remaining[v]
    return LiePoly._wrap(t.alphabet, result)


def lie_to_tensor(u: LiePoly) -> TensorPoly:
    return u.tensor


def lie_bracket(u: LiePoly, v: LiePoly) -> LiePoly:
    return u.bracket(v)


def dynkin_operator(t: TensorPoly) -> TensorPoly:
    """Left-normed bracketing x1...xn -> [..[x1, x2], ..., xn] (constants map to 0)."""
    out: Terms = {}
    for word, coef in t.terms.items():
        if not word:
            continue
        partial: Terms = {word[:1]: coef}
        for letter in word[1:]:
            step: Terms = {}
            for w, c in partial.items():
                _accumulate(step, w + (letter,), c)
                _accumulate(step, (letter,) + w, -c)
            partial = _prune(step)
        for w, c in partial.items():
            _accumulate(out, w, c)
    return TensorPoly._wrap(t.alphabet, _prune(out))


def is_lie_element(t: TensorPoly) -> bool:
    """Dynkin-Specht-Wever test: r(P) = n P on each degree n >= 1, no constant term."""
    if () in t.terms:
        return False
    for n, part in t.homogeneous_parts().items():
        if dynkin_operator(part) != part.scale(n):
            return False
    return True


def theta_tensor(alphabet: Alphabet) -> TensorPoly:
    """sum_j (a_j b_j - b_j a_j)."""
    alphabet.require_symplectic('theta')
    terms: Terms = {}
    for j in range(alphabet.genus):
        a, b = 2 * j, 2 * j + 1
        terms[(a, b)] = QQ(1)
        terms[(b, a)] = QQ(-1)
    return TensorPoly._wrap(alphabet, terms)


def theta_element(alphabet: Alphabet) -> LiePoly:
    """theta = sum_j [a_j, b_j] as a Lie element."""
    alphabet.require_symplectic('theta')
    return LiePoly._wrap(alphabet, {(2 * j, 2 * j + 1): QQ(1) for j in range(alphabet.genus)})


def boundary_power(alphabet: Alphabet, k: int) -> CyclicPoly:
    """|theta^k|, the cyclic class of the k-th power of the boundary element."""
    return cyclic_project(theta_tensor(alphabet).power(k))


def pbw_symmetrize(factors: Sequence[SparsePoly], alphabet: Optional[Alphabet] = None) -> TensorPoly:
    """
    (1/k!) sum over permutations of the concatenated factors.

    Args:
        factors: Lie or tensor polynomials over one alphabet
        alphabet: Needed only when ``factors`` is empty (returns the unit)
    """
    tensors = [f.tensor if isinstance(f, LiePoly) else f for f in factors]
    if not tensors:
        if alphabet is None:
            raise ValueError("pbw_symmetrize of no factors needs an alphabet")
        return TensorPoly.one(alphabet)
    alphabet = tensors[0].alphabet
    total = TensorPoly.zero(alphabet)
    for perm in itertools.permutations(tensors):
        product = TensorPoly.one(alphabet)
        for factor in perm:
            product = product.concat(factor)
        total = total + product
    return total.scale(QQ(1, math.factorial(len(tensors))))


# ----------------------------------------------------------------------
# Boundary model: changing the eliminated puncture


def change_eliminated(p: Union[TensorPoly, CyclicPoly], eliminated: int) -> Union[TensorPoly, CyclicPoly]:
    """
    Re-express a boundary-model element with another puncture eliminated.

    Each free letter e_q of the old alphabet is sent to e_q in the new
    one, with e_new_eliminated = -(sum of the new free letters).
    """
    old = p.alphabet
    if old.is_symplectic:
        raise ModelMismatch("change_eliminated requires the boundary model")
    if eliminated == old.eliminated:
        return p
    new = Alphabet.boundary(old.punctures, eliminated=eliminated, labels=old.labels)
    images = {
        letter: TensorPoly.from_linear_form(new, new.puncture_class(old.puncture_of_letter(letter)))
        for letter in old.letters
    }
    if isinstance(p, CyclicPoly):
        return cyclic_project(p.representatives().substitute(images, new))
    return p.substitute(images, new)


def letter_degree(p: Union[TensorPoly, CyclicPoly], puncture: Union[int, str]) -> Optional[int]:
    """
    Least number of occurrences of e_puncture over the terms of ``p``.

    If that puncture is eliminated in p's alphabet the element is first
    rewritten in a model where it is free. Returns None for zero.
    """
    alphabet = p.alphabet
    index = alphabet.puncture_index(puncture)
    if index == alphabet.eliminated:
        replacement = next(q for q in range(alphabet.punctures) if q != index)
        p = change_eliminated(p, replacement)
        alphabet = p.alphabet
    letter = alphabet.letter_of_puncture(index)
    if not p.terms:
        return None
    return min(word.count(letter) for word in p.terms)


"""
Johnson Lab - Serialization
Structured JSON for polynomials and exact coefficients.

Coefficients are strings "num/den" (or "num" when the denominator is 1).
Words are lists of letter names; in the boundary model a name of the
eliminated puncture is expanded as minus the sum of the free letters.
"""

import json
import re
from typing import Any, Dict, List, Mapping, Optional, Sequence, Type

from sympy import QQ

from src.utils.errors import JohnsonLabError, ParseError
from .alphabet import Alphabet
from .poly import CyclicPair, CyclicPoly, LiePoly, SparsePoly, TensorPoly, concat_terms

COEFFICIENT_PATTERN = re.compile(r'^-?\d+(/\d+)?$')
_COEFFICIENT_CHARS = set('-/0123456789')

POLY_TYPES: Dict[str, Type[SparsePoly]] = {
    'tensor': TensorPoly,
    'lie': LiePoly,
    'cyclic': CyclicPoly,
    'cyclic_pair': CyclicPair,
}


def format_coefficient(c) -> str:
    c = QQ.convert(c)
    numerator, denominator = int(c.numerator), int(c.denominator)
    return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"


def parse_coefficient(value: Any, location: str = '$') -> object:
    """
    Parse a coefficient string such as ``"-3/2"``.

    Raises:
        ParseError: Malformed text (unicode minus signs included), zero
            denominator, or a non-string non-integer value
    """
    if isinstance(value, int) and not isinstance(value, bool):
        return QQ(value)
    if not isinstance(value, str):
        raise ParseError(f"coefficient must be a string, got {type(value).__name__}", location)
    if not COEFFICIENT_PATTERN.match(value):
        offset = next((i for i, ch in enumerate(value) if ch not in _COEFFICIENT_CHARS), 0)
        raise ParseError(f"malformed coefficient {value!r}", location, offset)
    if '/' in value:
        numerator, denominator = value.split('/')
        if int(denominator) == 0:
            raise ParseError(f"zero denominator in {value!r}", location, value.index('/') + 1)
        return QQ(int(numerator), int(denominator))
    return QQ(int(value))


def word_names(alphabet: Alphabet, word: Sequence[int]) -> List[str]:
    names = alphabet.names
    return [names[x] for x in word]


def expand_word(alphabet: Alphabet, names: Any, location: str) -> Dict[tuple, object]:
    """Word of letter names -> word map, expanding the eliminated letter."""
    if not isinstance(names, list):
        raise ParseError("word must be a list of letter names", location)
    terms: Dict[tuple, object] = {(): QQ(1)}
    for i, name in enumerate(names):
        if not isinstance(name, str):
            raise ParseError("letter names must be strings", f"{location}[{i}]")
        try:
            form = alphabet.expand(name)
        except ParseError as e:
            raise ParseError(e.message, f"{location}[{i}]") from e
        terms = concat_terms(terms, {(letter,): c for letter, c in form.items()})
    return terms


def strict_word(alphabet: Alphabet, names: Any, location: str) -> tuple:
    """Word of free letter names (no expansion)."""
    if not isinstance(names, list):
        raise ParseError("word must be a list of letter names", location)
    word = []
    for i, name in enumerate(names):
        try:
            word.append(alphabet.index(name))
        except ParseError as e:
            raise ParseError(e.message, f"{location}[{i}]") from e
    return tuple(word)


def poly_to_dict(p: SparsePoly, with_alphabet: bool = True) -> Dict[str, Any]:
    """Structured form of any polynomial type; terms in canonical order."""
    terms = []
    for key, coef in p.items():
        if isinstance(p, CyclicPair):
            terms.append({'coef': format_coefficient(coef),
                          'left': word_names(p.alphabet, key[0]),
                          'right': word_names(p.alphabet, key[1])})
        else:
            terms.append({'coef': format_coefficient(coef), 'word': word_names(p.alphabet, key)})
    data: Dict[str, Any] = dict(p.alphabet.to_dict()) if with_alphabet else {}
    data['type'] = p.kind
    data['terms'] = terms
    return data


def poly_from_dict(data: Any, location: str = '$',
                   alphabet: Optional[Alphabet] = None) -> SparsePoly:
    """
    Inverse of poly_to_dict.

    Args:
        data: Parsed JSON object
        location: Path of ``data`` inside the enclosing document
        alphabet: Alphabet to use when ``data`` carries none
    """
    if not isinstance(data, Mapping):
        raise ParseError("polynomial must be a JSON object", location)
    if 'model' in data:
        alphabet = Alphabet.from_dict(data, location)
    if alphabet is None:
        raise ParseError("missing model description", location)
    kind = data.get('type', 'tensor')
    cls = POLY_TYPES.get(kind)
    if cls is None:
        raise ParseError(f"unknown polynomial type {kind!r}", f"{location}.type")
    raw_terms = data.get('terms', [])
    if not isinstance(raw_terms, list):
        raise ParseError("terms must be a list", f"{location}.terms")

    result = cls.zero(alphabet)
    for i, term in enumerate(raw_terms):
        where = f"{location}.terms[{i}]"
        if not isinstance(term, Mapping):
            raise ParseError("term must be an object", where)
        if 'coef' not in term:
            raise ParseError("missing field 'coef'", where)
        coef = parse_coefficient(term['coef'], f"{where}.coef")
        try:
            if cls is CyclicPair:
                left = strict_word(alphabet, term.get('left'), f"{where}.left")
                right = strict_word(alphabet, term.get('right'), f"{where}.right")
                result = result + CyclicPair(alphabet, {(left, right): coef})
            elif cls is LiePoly:
                word = strict_word(alphabet, term.get('word'), f"{where}.word")
                result = result + LiePoly(alphabet, {word: coef})
            else:
                expanded = expand_word(alphabet, term.get('word'), f"{where}.word")
                result = result + cls(alphabet, {w: c * coef for w, c in expanded.items()})
        except ParseError:
            raise
        except JohnsonLabError as e:
            raise ParseError(str(e), where) from e
    return result


def parse_compact_word(alphabet: Alphabet, text: str) -> TensorPoly:
    """Compact text ``a1.b1.a2`` (``1`` for the empty word) as a tensor polynomial."""
    text = text.strip()
    if text in ('', '1'):
        return TensorPoly.one(alphabet)
    return TensorPoly(alphabet, expand_word(alphabet, text.split('.'), '$'))


def loads_json(text: str) -> Any:
    """json.loads with decoding errors reported as ParseError."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, '$', e.pos) from e


def dumps_json(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False, sort_keys=True)


def dumps(obj: Any) -> str:
    """Serialize a polynomial or any object with a ``to_dict`` method."""
    if isinstance(obj, SparsePoly):
        return dumps_json(poly_to_dict(obj))
    return dumps_json(obj.to_dict())


def loads_poly(text: str, alphabet: Optional[Alphabet] = None) -> SparsePoly:
    return poly_from_dict(loads_json(text), '$', alphabet)

"""
Johnson Lab - Lambda Operations
Adams operations and the exterior and symmetric powers derived from them
by Newton's identities. Plain integers stand for dimensions, on which every
Adams operation is the identity.
"""

from typing import List, Union

from src.utils.errors import InvariantViolation
from .character import SpCharacter

Element = Union[int, SpCharacter]

OPERATIONS = ('psi', 'lambda', 'sym')


def adams(x: Element, d: int) -> Element:
    if d < 1:
        raise ValueError(f"Adams operations need d >= 1, got {d}")
    return x if isinstance(x, int) else x.adams(d)


def _one_like(x: Element) -> Element:
    return 1 if isinstance(x, int) else SpCharacter.trivial(x.genus)


def divide_exact(x: Element, n: int) -> Element:
    if isinstance(x, int):
        if x % n:
            raise InvariantViolation(f"{x} is not divisible by {n}")
        return x // n
    return x.exact_divide(n)


def _newton(x: Element, k: int, alternating: bool) -> List[Element]:
    """Powers 0..k from k e_k = sum_i (-1)^(i-1) psi^i e_(k-i) (or all signs + for Sym)."""
    powers = [_one_like(x)]
    psis = [None] + [adams(x, i) for i in range(1, k + 1)]
    for n in range(1, k + 1):
        total = 0
        for i in range(1, n + 1):
            sign = -1 if alternating and i % 2 == 0 else 1
            total = total + psis[i] * powers[n - i] * sign
        powers.append(divide_exact(total, n))
    return powers


def exterior_power(x: Element, k: int) -> Element:
    if k < 0:
        raise ValueError(f"exterior powers need k >= 0, got {k}")
    return _newton(x, k, alternating=True)[k]


def symmetric_power(x: Element, k: int) -> Element:
    if k < 0:
        raise ValueError(f"symmetric powers need k >= 0, got {k}")
    return _newton(x, k, alternating=False)[k]


def exterior_powers(x: Element, k: int) -> List[Element]:
    """Lambda^0 .. Lambda^k in one pass."""
    return _newton(x, k, alternating=True)


def apply_operation(x: Element, op: str, k: int) -> Element:
    """
    psi^k, Lambda^k or Sym^k of a character or dimension.

    Raises:
        ValueError: Unknown operation
    """
    if op == 'psi':
        return adams(x, k)
    if op == 'lambda':
        return exterior_power(x, k)
    if op == 'sym':
        return symmetric_power(x, k)
    raise ValueError(f"unknown operation {op!r}; expected one of {', '.join(OPERATIONS)}")

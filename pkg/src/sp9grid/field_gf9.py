"""Arithmetic in GF(9), built as GF(3)[x] / (x^2 + 1).

An element ``a0 + a1*x`` is stored as its two mod-3 coefficients.  The
canonical integer encoding is ``a0 + 3*a1``, which orders the nine elements
as 0, 1, 2, x, x+1, x+2, 2x, 2x+1, 2x+2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

ORDER = 9

NAMES = ("0", "1", "2", "x", "x+1", "x+2", "2x", "2x+1", "2x+2")


@dataclass(frozen=True, order=False)
class Gf9Element:
    a0: int
    a1: int = 0

    def __post_init__(self):
        # reduce on construction so every instance is canonical
        object.__setattr__(self, "a0", int(self.a0) % 3)
        object.__setattr__(self, "a1", int(self.a1) % 3)

    def __add__(self, other: Gf9Element) -> Gf9Element:
        return add(self, other)

    def __sub__(self, other: Gf9Element) -> Gf9Element:
        return sub(self, other)

    def __mul__(self, other: Gf9Element) -> Gf9Element:
        return mul(self, other)

    def __neg__(self) -> Gf9Element:
        return Gf9Element(-self.a0, -self.a1)

    def __int__(self) -> int:
        return encode(self)

    def __str__(self) -> str:
        return NAMES[encode(self)]

    def __repr__(self) -> str:
        return f"Gf9Element({str(self)!r})"


def add(a: Gf9Element, b: Gf9Element) -> Gf9Element:
    return Gf9Element(a.a0 + b.a0, a.a1 + b.a1)


def sub(a: Gf9Element, b: Gf9Element) -> Gf9Element:
    """Return the unique ``d`` with ``b + d == a``."""
    return Gf9Element(a.a0 - b.a0, a.a1 - b.a1)


def mul(a: Gf9Element, b: Gf9Element) -> Gf9Element:
    # (a0 + a1 x)(b0 + b1 x) with x^2 = -1
    return Gf9Element(a.a0 * b.a0 - a.a1 * b.a1, a.a0 * b.a1 + a.a1 * b.a0)


def inverse(a: Gf9Element) -> Gf9Element:
    """Multiplicative inverse, found by search over the eight units."""
    if a == ZERO:
        raise ZeroDivisionError("0 has no inverse in GF(9)")
    for b in ELEMENTS[1:]:
        if mul(a, b) == ONE:
            return b
    raise AssertionError("GF(9) multiplication table is broken")


@lru_cache(maxsize=None)
def squares() -> frozenset:
    """The set of squares ``b*b`` over all nine ``b`` (0 included)."""
    return frozenset(mul(b, b) for b in ELEMENTS)


def is_square(a: Gf9Element) -> bool:
    return a in squares()


def encode(a: Gf9Element) -> int:
    return a.a0 + 3 * a.a1


def decode(n: int) -> Gf9Element:
    if isinstance(n, bool) or not isinstance(n, int) or not 0 <= n < ORDER:
        raise ValueError(f"GF(9) encoding must be an integer in 0..8, got {n!r}")
    return Gf9Element(n % 3, n // 3)


def parse(text: str) -> Gf9Element:
    """Parse a polynomial name such as ``"2x+1"`` (whitespace ignored)."""
    key = "".join(str(text).split())
    try:
        return decode(NAMES.index(key))
    except ValueError:
        raise ValueError(f"not a GF(9) element name: {text!r}") from None


def coerce(value: Union[Gf9Element, int, str]) -> Gf9Element:
    if isinstance(value, Gf9Element):
        return value
    if isinstance(value, str):
        return parse(value)
    return decode(value)


ELEMENTS = tuple(Gf9Element(n % 3, n // 3) for n in range(ORDER))
ZERO = ELEMENTS[0]
ONE = ELEMENTS[1]
X = ELEMENTS[3]

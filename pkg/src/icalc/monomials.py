"""Monomials as exponent tuples and the supported term orders.

A monomial in n variables is a plain tuple of n non-negative ints; the
ring layer owns the variable names.  Orders are value objects producing a
sort key: key(a) < key(b) exactly when a precedes b in the order, so
``max`` and descending sorts pick out leading monomials directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatchError

Monomial = tuple  # exponent tuple; alias for readability in signatures

LEX = "lex"
GREVLEX = "grevlex"
BLOCK = "block"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_sub(a, b):
    """Exponent-wise difference; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


def mono_is_one(a):
    return not any(a)


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_support(a):
    return frozenset(i for i, e in enumerate(a) if e)


def _grevlex_key(m):
    # Degree first; ties broken by the reversed, negated exponent vector,
    # which makes the rightmost difference decide (smaller there = larger).
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """One of lex, grevlex, or a two-block elimination order.

    Block orders compare the first ``front`` exponents under grevlex and
    only then the remaining block, so any monomial meeting the front block
    beats every monomial that avoids it.
    """

    kind: str
    front: int = 0

    def __post_init__(self):
        if self.kind not in (LEX, GREVLEX, BLOCK):
            raise ValueError(f"unknown order kind: {self.kind!r}")
        if self.kind == BLOCK and self.front < 0:
            raise ValueError("front block size must be non-negative")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls(LEX)

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls(GREVLEX)

    @classmethod
    def block_elimination(cls, front: int) -> "MonomialOrder":
        return cls(BLOCK, front)

    def key(self, m):
        if self.kind == GREVLEX:
            return _grevlex_key(m)
        if self.kind == LEX:
            return m
        k = self.front
        return (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

    def __str__(self):
        if self.kind == BLOCK:
            return f"block({self.front})"
        return self.kind


def mono_compare(order: MonomialOrder, a, b) -> int:
    """-1, 0, or 1 as a precedes, equals, or follows b under the order."""
    if len(a) != len(b):
        raise DimensionMismatchError(
            f"monomial lengths differ: {len(a)} vs {len(b)}"
        )
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0

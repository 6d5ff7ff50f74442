"""Exact rational scalars and the combinatorial primitives built on them.

Every combinatorial helper returns a :class:`~fractions.Fraction` so that
intermediate products never overflow and can be fed straight into the
identity checks elsewhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Union

__all__ = [
    "Rational",
    "MultiIndex",
    "CapExceededError",
    "as_rational",
    "pochhammer",
    "binomial",
    "multinomial",
    "double_factorial",
    "multi_indices",
]

Rational = Fraction
RationalLike = Union[Fraction, int, str]


class CapExceededError(ValueError):
    """Raised when a request goes beyond a configured enumeration cap."""

    def __init__(self, cap_name: str, limit: int, requested: int):
        self.cap_name = cap_name
        self.limit = limit
        self.requested = requested
        super().__init__(f"{cap_name} cap exceeded: requested {requested}, limit {limit}")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to a Fraction.

    Floats are rejected: silently importing a binary approximation would
    defeat the point of exact arithmetic.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals; pass a str or Fraction")
    return Fraction(value)


class MultiIndex(tuple):
    """Tuple of non-negative integers ``(nu_1, ..., nu_n)``.

    Hashable, so it doubles as a memoization key.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(e) for e in entries)
        if any(e < 0 for e in entries):
            raise ValueError(f"multi-index entries must be non-negative: {entries}")
        return super().__new__(cls, entries)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def factorial(self) -> int:
        out = 1
        for e in self:
            out *= factorial(e)
        return out

    def minus_unit(self, j: int) -> "MultiIndex":
        """Return ``self - eps_j``; the j-th entry must be positive."""
        if self[j] == 0:
            raise ValueError(f"entry {j} of {tuple(self)} is already zero")
        return MultiIndex(self[:j] + (self[j] - 1,) + self[j + 1:])

    def __repr__(self) -> str:
        return f"MultiIndex({tuple(self)})"


def multi_indices(n: int, k: int) -> Iterator[MultiIndex]:
    """Yield every MultiIndex of length ``n`` and degree ``k``.

    Order is lexicographically decreasing, so ``(k, 0, ..., 0)`` comes first.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if n == 0:
        if k == 0:
            yield MultiIndex()
        return

    def rec(prefix: tuple, remaining: int, slots: int):
        if slots == 1:
            yield MultiIndex(prefix + (remaining,))
            return
        for first in range(remaining, -1, -1):
            yield from rec(prefix + (first,), remaining - first, slots - 1)

    yield from rec((), k, n)


def pochhammer(a: RationalLike, s: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+s-1)``; the empty product is 1."""
    if s < 0:
        raise ValueError("pochhammer length must be non-negative")
    a = as_rational(a)
    out = Fraction(1)
    for i in range(s):
        out *= a + i
    return out


def binomial(k: int, s: int) -> Fraction:
    if not 0 <= s <= k:
        return Fraction(0)
    return Fraction(factorial(k) // (factorial(s) * factorial(k - s)))


def multinomial(k: int, nu: Iterable[int]) -> Fraction:
    """``k! / nu!`` for a multi-index of degree ``k``.

    Raises
    ------
    ValueError
        If ``|nu| != k``.
    """
    nu = nu if isinstance(nu, MultiIndex) else MultiIndex(nu)
    if nu.degree != k:
        raise ValueError(f"degree mismatch: |nu| = {nu.degree} but k = {k}")
    return Fraction(factorial(k) // nu.factorial)


def double_factorial(m: int) -> Fraction:
    """``m!! = m (m-2) (m-4) ...`` with ``0!! = (-1)!! = 1``."""
    if m < -1:
        raise ValueError(f"double factorial undefined for m = {m} < -1")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return Fraction(out)

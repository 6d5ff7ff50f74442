"""Exact geometric algebra Cl(0, n).

Basis blades are bit masks over the generators ``e_1 .. e_n`` (bit ``i-1``
stands for ``e_i``); the empty mask is the scalar unit.  Every generator
squares to ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .exactnum import as_rational

__all__ = [
    "MAX_DIMENSION",
    "Multivector",
    "Paravector",
    "blade_product",
    "blade_indices",
    "geo_mul",
    "conjugate",
    "norm_sq",
    "generator",
    "generators",
]

MAX_DIMENSION = 16


def blade_indices(mask: int) -> Tuple[int, ...]:
    """1-based generator indices in a blade, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def blade_product(a: int, b: int) -> Tuple[int, int]:
    """Product of two basis blades as ``(sign, mask)``.

    The sign collects one flip per transposition needed to merge the two
    ascending index lists, and one more per shared generator (``e_k^2 = -1``).
    """
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += (shifted & b).bit_count()
        shifted >>= 1
    swaps += (a & b).bit_count()
    return (-1 if swaps & 1 else 1), a ^ b


def _check_dim(n: int, cap: int = MAX_DIMENSION) -> None:
    if not 0 <= n <= cap:
        raise ValueError(f"ambient dimension {n} outside 0..{cap}")


class Multivector:
    """Sparse element of Cl(0, n) with exact rational coefficients.

    Instances are treated as immutable; arithmetic always returns new objects.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[int, Fraction] | None = None):
        _check_dim(n)
        clean: Dict[int, Fraction] = {}
        limit = 1 << n
        for mask, c in (terms or {}).items():
            if not 0 <= mask < limit:
                raise ValueError(f"blade mask {mask:b} outside Cl(0,{n})")
            c = as_rational(c)
            if c:
                clean[mask] = c
        self.n = n
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def _raw(cls, n: int, terms: Dict[int, Fraction]) -> "Multivector":
        # trusted constructor for internal arithmetic: terms already clean
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = dict(sorted(terms.items()))
        return obj

    @classmethod
    def scalar(cls, value, n: int) -> "Multivector":
        return cls(n, {0: value})

    @classmethod
    def blade(cls, indices: Iterable[int], n: int, coeff=1) -> "Multivector":
        """The product ``coeff * e_{i1} e_{i2} ...`` in the given order."""
        out = cls.scalar(coeff, n)
        for i in indices:
            out = out * generator(i, n)
        return out

    # -- queries ---------------------------------------------------------

    def scalar_part(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def is_scalar(self) -> bool:
        return all(mask == 0 for mask in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def grades(self) -> set:
        return {mask.bit_count() for mask in self.terms}

    def __getitem__(self, mask: int) -> Fraction:
        return self.terms.get(mask, Fraction(0))

    # -- arithmetic ------------------------------------------------------

    def _same_dim(self, other: "Multivector") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: Cl(0,{self.n}) vs Cl(0,{other.n})")

    def _lift(self, other) -> "Multivector | None":
        if isinstance(other, Multivector):
            self._same_dim(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Multivector.scalar(other, self.n)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mask, c in other.terms.items():
            v = out.get(mask, 0) + c
            if v:
                out[mask] = v
            else:
                out.pop(mask, None)
        return Multivector._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "Multivector":
        c = as_rational(c)
        if not c:
            return Multivector._raw(self.n, {})
        return Multivector._raw(self.n, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return geo_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / as_rational(other))
        return NotImplemented

    def __pow__(self, k: int) -> "Multivector":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = Multivector.scalar(1, self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_scalar() and self.scalar_part() == other
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (mask, c) in enumerate(self.terms.items()):
            mag = abs(c)
            body = str(mag) if mask == 0 else f"{mag} * e{{{','.join(map(str, blade_indices(mask)))}}}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Multivector(n={self.n}, {self})"


def geo_mul(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product, bilinear over blade products."""
    a._same_dim(b)
    out: Dict[int, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            sign, m = blade_product(ma, mb)
            v = out.get(m, 0) + (ca * cb if sign > 0 else -(ca * cb))
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return Multivector._raw(a.n, out)


def generator(i: int, n: int) -> Multivector:
    """The generator ``e_i`` (1-based) of Cl(0, n)."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} outside 1..{n}")
    return Multivector._raw(n, {1 << (i - 1): Fraction(1)})


def generators(n: int) -> list:
    return [generator(i, n) for i in range(1, n + 1)]


@dataclass(frozen=True)
class Paravector:
    """``x = x0 + x1 e_1 + ... + xn e_n``."""

    x0: Fraction
    xv: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "x0", as_rational(self.x0))
        object.__setattr__(self, "xv", tuple(as_rational(v) for v in self.xv))

    @classmethod
    def from_coords(cls, coords: Sequence) -> "Paravector":
        """Build from ``(x0, x1, ..., xn)``."""
        return cls(coords[0], tuple(coords[1:]))

    @property
    def n(self) -> int:
        return len(self.xv)

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        return (self.x0,) + self.xv

    def to_multivector(self) -> Multivector:
        terms = {0: self.x0}
        for i, v in enumerate(self.xv):
            terms[1 << i] = v
        return Multivector(self.n, terms)

    def vector_part(self) -> Multivector:
        return Multivector(self.n, {1 << i: v for i, v in enumerate(self.xv)})

    def conjugate(self) -> "Paravector":
        return Paravector(self.x0, tuple(-v for v in self.xv))

    def norm_sq(self) -> Fraction:
        return self.x0 * self.x0 + sum((v * v for v in self.xv), Fraction(0))


def conjugate(x: Paravector) -> Paravector:
    return x.conjugate()


def norm_sq(x: Paravector) -> Fraction:
    return x.norm_sq()

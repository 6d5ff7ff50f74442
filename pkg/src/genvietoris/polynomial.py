"""Polynomials in real variables ``x_0 .. x_n`` with Cl(0, n) coefficients.

The variables are real, so they commute with everything; only the
coefficients multiply non-commutatively.  Products keep the left operand's
coefficient on the left.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple

from .clifford import Multivector, Paravector, generator, geo_mul
from .exactnum import as_rational

__all__ = ["MvPolynomial", "paravector_poly", "hyper_variable"]

Exponents = Tuple[int, ...]


def _add_into(acc: Dict[Exponents, Multivector], key: Exponents, mv: Multivector) -> None:
    cur = acc.get(key)
    new = mv if cur is None else cur + mv
    if new.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = new


def _monomial_order(key: Exponents):
    # graded lexicographic, x_0 highest: larger total degree first, then
    # larger x_0 exponent, and so on
    return (-sum(key), tuple(-e for e in key))


class MvPolynomial:
    """Sparse map from exponent vectors ``(a_0, ..., a_n)`` to multivectors."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponents, Multivector] | None = None):
        clean: Dict[Exponents, Multivector] = {}
        for key, mv in (terms or {}).items():
            key = tuple(int(e) for e in key)
            if len(key) != n + 1 or any(e < 0 for e in key):
                raise ValueError(f"bad exponent vector {key} for n = {n}")
            if not isinstance(mv, Multivector):
                mv = Multivector.scalar(mv, n)
            if mv.n != n:
                raise ValueError(f"coefficient lives in Cl(0,{mv.n}), expected Cl(0,{n})")
            _add_into(clean, key, mv)
        self.n = n
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: Dict[Exponents, Multivector]) -> "MvPolynomial":
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, n: int) -> "MvPolynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, value, n: int) -> "MvPolynomial":
        if not isinstance(value, Multivector):
            value = Multivector.scalar(value, n)
        return cls(n, {(0,) * (n + 1): value})

    @classmethod
    def variable(cls, i: int, n: int, coeff=None) -> "MvPolynomial":
        """``coeff * x_i`` (coefficient defaults to 1)."""
        if not 0 <= i <= n:
            raise ValueError(f"variable index {i} outside 0..{n}")
        key = tuple(1 if j == i else 0 for j in range(n + 1))
        return cls(n, {key: Multivector.scalar(1, n) if coeff is None else coeff})

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {sum(key) for key in self.terms}

    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def is_homogeneous(self, k: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (k is None or degs == {k})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _monomial_order(kv[0]))

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "MvPolynomial") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: n = {self.n} vs n = {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Multivector)):
            other = MvPolynomial.constant(other, self.n)
        if not isinstance(other, MvPolynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for key, mv in other.terms.items():
            _add_into(out, key, mv)
        return MvPolynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return MvPolynomial._raw(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MvPolynomial":
        c = as_rational(c)
        if not c:
            return MvPolynomial.zero(self.n)
        return MvPolynomial._raw(self.n, {k: v.scale(c) for k, v in self.terms.items()})

    def left_mul(self, mv: Multivector) -> "MvPolynomial":
        out: Dict[Exponents, Multivector] = {}
        for key, c in self.terms.items():
            prod = geo_mul(mv, c)
            if not prod.is_zero():
                out[key] = prod
        return MvPolynomial._raw(self.n, out)

    def right_mul(self, mv: Multivector) -> "MvPolynomial":
        out: Dict[Exponents, Multivector] = {}
        for key, c in self.terms.items():
            prod = geo_mul(c, mv)
            if not prod.is_zero():
                out[key] = prod
        return MvPolynomial._raw(self.n, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Multivector):
            return self.right_mul(other)
        if not isinstance(other, MvPolynomial):
            return NotImplemented
        self._check(other)
        out: Dict[Exponents, Multivector] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                _add_into(out, key, geo_mul(ca, cb))
        return MvPolynomial._raw(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Multivector):
            return self.left_mul(other)
        return NotImplemented

    def __pow__(self, k: int) -> "MvPolynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = MvPolynomial.constant(1, self.n)
        for _ in range(k):
            out = out * self
        return out

    def diff(self, i: int) -> "MvPolynomial":
        """Partial derivative with respect to ``x_i``."""
        out: Dict[Exponents, Multivector] = {}
        for key, c in self.terms.items():
            e = key[i]
            if e:
                new = key[:i] + (e - 1,) + key[i + 1:]
                _add_into(out, new, c.scale(e))
        return MvPolynomial._raw(self.n, out)

    def evaluate(self, point) -> Multivector:
        """Substitute rational values for ``x_0 .. x_n``.

        ``point`` is a Paravector or a sequence ``(x_0, ..., x_n)``.
        """
        coords = point.coords if isinstance(point, Paravector) else tuple(as_rational(v) for v in point)
        if len(coords) != self.n + 1:
            raise ValueError(f"point has {len(coords) - 1} vector coordinates, expected {self.n}")
        acc = Multivector(self.n)
        for key, c in self.terms.items():
            w = Fraction(1)
            for x, e in zip(coords, key):
                if e:
                    w *= x ** e
                    if not w:
                        break
            if w:
                acc = acc + c.scale(w)
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Multivector)):
            other = MvPolynomial.constant(other, self.n)
        if not isinstance(other, MvPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for key, c in self.sorted_terms():
            mono = " ".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(key) if e
            )
            coeff = f"({c})"
            lines.append(f"{coeff} * {mono}" if mono else coeff)
        return " + ".join(lines)

    def __repr__(self) -> str:
        return f"MvPolynomial(n={self.n}, {self})"


def paravector_poly(n: int, sign: int = 1) -> MvPolynomial:
    """``x = x_0 + sum e_i x_i`` (``sign=-1`` gives the conjugate)."""
    p = MvPolynomial.variable(0, n)
    for i in range(1, n + 1):
        coeff = generator(i, n) if sign > 0 else -generator(i, n)
        p = p + MvPolynomial.variable(i, n, coeff)
    return p


def hyper_variable(k: int, n: int) -> MvPolynomial:
    """``z_k = x_k - x_0 e_k``."""
    return MvPolynomial.variable(k, n) + MvPolynomial.variable(0, n, -generator(k, n))

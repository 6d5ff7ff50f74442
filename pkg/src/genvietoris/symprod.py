"""Symmetric ("x") products of ring elements.

Given distinct factors ``a_1 .. a_n`` and a multi-index ``mu``, the symmetric
product ``a_1^mu_1 x ... x a_n^mu_n`` is the average of the ordered products
over every arrangement of the multiset in which ``a_j`` appears ``mu_j``
times.  Any associative ring works as long as its elements support ``*``,
``+``, multiplication by a Fraction and ``x ** 0`` for the unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Dict, Iterator, List, Sequence

from .exactnum import CapExceededError, MultiIndex, multi_indices, multinomial

__all__ = [
    "BRUTEFORCE_CAP",
    "RECURSION_CAP",
    "SymFactors",
    "SymProductContext",
    "ExpansionReport",
    "multiset_permutations",
    "sym_product_bruteforce",
    "sym_product",
    "expand_power",
]

BRUTEFORCE_CAP = 8
RECURSION_CAP = 24


@dataclass(frozen=True)
class SymFactors:
    base: tuple
    exponents: MultiIndex

    def __init__(self, base: Sequence, exponents: Sequence[int]):
        base = tuple(base)
        exponents = exponents if isinstance(exponents, MultiIndex) else MultiIndex(exponents)
        if len(base) != len(exponents):
            raise ValueError(f"{len(base)} factors but {len(exponents)} exponents")
        if not base:
            raise ValueError("at least one factor is required")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "exponents", exponents)

    def one(self):
        return self.base[0] ** 0


def multiset_permutations(counts: Sequence[int]) -> Iterator[List[int]]:
    """Distinct arrangements of the multiset ``{j: counts[j]}``.

    Walks the lexicographic successor so each arrangement is produced once,
    without generating the full ``|mu|!`` permutation set.
    """
    seq = [j for j, c in enumerate(counts) for _ in range(c)]
    yield list(seq)
    m = len(seq)
    while True:
        i = m - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = m - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])
        yield list(seq)


def sym_product_bruteforce(f: SymFactors, cap: int = BRUTEFORCE_CAP):
    """``(mu!/|mu|!)`` times the sum of ordered products over distinct arrangements."""
    mu = f.exponents
    if mu.degree > cap:
        raise CapExceededError("bruteforce-degree", cap, mu.degree)
    total = None
    for arrangement in multiset_permutations(mu):
        term = f.one()
        for j in arrangement:
            term = term * f.base[j]
        total = term if total is None else total + term
    return total * Fraction(mu.factorial, factorial(mu.degree))


class SymProductContext:
    """Memoized symmetric products over one fixed list of factors.

    Uses ``P(mu) = (1/|mu|) * sum_j mu_j * P(mu - eps_j) * a_j``: among all
    arrangements of ``mu`` a fraction ``mu_j/|mu|`` end in ``a_j``.  The cache
    lives on the context, so discarding the context discards the memo.
    """

    def __init__(self, base: Sequence, cap: int = RECURSION_CAP, one: Any = None):
        self.base = tuple(base)
        self.cap = cap
        self.one = self.base[0] ** 0 if one is None else one
        self._cache: Dict[MultiIndex, Any] = {}

    def __call__(self, mu: Sequence[int]):
        mu = mu if isinstance(mu, MultiIndex) else MultiIndex(mu)
        if len(mu) != len(self.base):
            raise ValueError(f"{len(self.base)} factors but {len(mu)} exponents")
        if mu.degree > self.cap:
            raise CapExceededError("symmetric-product-degree", self.cap, mu.degree)
        return self._eval(mu)

    def _eval(self, mu: MultiIndex):
        hit = self._cache.get(mu)
        if hit is not None:
            return hit
        k = mu.degree
        if k == 0:
            out = self.one
        else:
            out = None
            for j, m in enumerate(mu):
                if not m:
                    continue
                term = (self._eval(mu.minus_unit(j)) * self.base[j]) * Fraction(m, k)
                out = term if out is None else out + term
        self._cache[mu] = out
        return out


def sym_product(f: SymFactors, cap: int = RECURSION_CAP):
    return SymProductContext(f.base, cap=cap, one=f.one())(f.exponents)


@dataclass
class ExpansionReport:
    k: int
    lhs: Any
    rhs: Any
    equal: bool


def expand_power(a: Sequence, k: int, cap: int = RECURSION_CAP) -> ExpansionReport:
    """Check ``(a_1 + ... + a_n)^k == sum_{|mu|=k} (k!/mu!) a^mu`` exactly."""
    if k > cap:
        raise CapExceededError("symmetric-product-degree", cap, k)
    a = tuple(a)
    one = a[0] ** 0
    s = a[0]
    for x in a[1:]:
        s = s + x
    lhs = one
    for _ in range(k):
        lhs = lhs * s
    ctx = SymProductContext(a, cap=cap, one=one)
    rhs = None
    for mu in multi_indices(len(a), k):
        term = ctx(mu) * multinomial(k, mu)
        rhs = term if rhs is None else rhs + term
    return ExpansionReport(k=k, lhs=lhs, rhs=rhs, equal=bool(lhs == rhs))

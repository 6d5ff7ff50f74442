"""Floating-point series engine: Gauss 2F1 and the generating function of c_k(n).

The generating function is

    G(t; n) = sum_k c_k(n) t^k = ((1 + t) 2F1(1/2, 1; n/2; t^2) - 1) / t,  G(0; n) = 1,

with elementary closed forms for ``n = 1 .. 4``.  Divergence is reported as a
status on the result, never raised, so callers can tabulate it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exactnum import as_rational
from .serialize import fmt_float
from .vietoris import c_pochhammer

__all__ = [
    "CONVERGED",
    "DIVERGED",
    "MAX_TERMS",
    "DEFAULT_MAX_TERMS",
    "SeriesResult",
    "SeriesSum",
    "gamma_exact",
    "gauss_sum",
    "hyp2f1",
    "G_series",
    "G_hypergeometric",
    "G_closed",
    "series_sum",
    "alternating_sum",
    "alternating_partial_sum",
    "comparison_rows",
    "COMPARISON_HEADER",
]

CONVERGED = "converged"
DIVERGED = "diverged-flagged"
MAX_TERMS = "max-terms"
DEFAULT_MAX_TERMS = 100_000
_EPS = 2.0**-52

# reason tags for the divergent cases at t = +1 and t = -1
REASON_HYPERGEOMETRIC = "hypergeometric-divergent"
REASON_CENTRAL_BINOMIAL = "central-binomial-lower-bound"
REASON_RECIPROCAL_ODD = "reciprocal-odd-numbers"
REASON_ALTERNATING_ONES = "alternating-ones"
REASON_GAUSS = "gauss-summation-needs-c-a-b-positive"


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    tail_bound: float
    status: str
    reason: Optional[str] = None

    @property
    def converged(self) -> bool:
        return self.status == CONVERGED


@dataclass(frozen=True)
class SeriesSum:
    n: int
    value: Optional[Fraction]
    status: str
    reason: Optional[str] = None


def _rounding(terms: int, magnitude: float) -> float:
    return 2.0 * terms * _EPS * magnitude


def _finish(value: float, terms: int, tail: float, tol: float, peak: float = 0.0) -> SeriesResult:
    # each term carries at most ~2k roundings from its recurrence and the running
    # sum adds one per term; two ulps of the largest partial sum per term covers both
    tail = tail + _rounding(terms, max(abs(value), peak))
    status = CONVERGED if tail <= tol else MAX_TERMS
    return SeriesResult(value, terms, tail, status)


# -- Gamma at integers and half-integers -------------------------------------

def gamma_exact(x) -> Tuple[Fraction, int]:
    """``Gamma(x) = q * sqrt(pi)**p`` for integer or half-integer ``x``.

    Returns ``(q, p)`` with ``p`` in ``{0, 1}``.
    """
    x = as_rational(x)
    if x.denominator == 1:
        m = x.numerator
        if m <= 0:
            raise ValueError(f"Gamma has a pole at {m}")
        return Fraction(math.factorial(m - 1)), 0
    if x.denominator == 2:
        m = (x - Fraction(1, 2)).numerator  # x = m + 1/2
        if m >= 0:
            return Fraction(math.factorial(2 * m), 4**m * math.factorial(m)), 1
        m = -m
        return Fraction((-4) ** m * math.factorial(m), math.factorial(2 * m)), 1
    raise ValueError(f"{x} is neither an integer nor a half-integer")


def _gamma_parts(x: Fraction) -> Tuple[Fraction, int, float]:
    try:
        q, p = gamma_exact(x)
        return q, p, 1.0
    except ValueError:
        if x.denominator in (1, 2):
            raise
        return Fraction(1), 0, math.gamma(float(x))


def gauss_sum(a, b, c) -> float:
    """``2F1(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b))``, requires ``c-a-b > 0``."""
    a, b, c = (as_rational(v) for v in (a, b, c))
    if c - a - b <= 0:
        raise ValueError("Gauss summation needs c - a - b > 0")
    num = [_gamma_parts(c), _gamma_parts(c - a - b)]
    den = [_gamma_parts(c - a), _gamma_parts(c - b)]
    q = num[0][0] * num[1][0] / (den[0][0] * den[1][0])
    p = num[0][1] + num[1][1] - den[0][1] - den[1][1]
    fl = num[0][2] * num[1][2] / (den[0][2] * den[1][2])
    return float(q) * math.sqrt(math.pi) ** p * fl


# -- 2F1 ---------------------------------------------------------------------

def _ratio_sup(a: float, b: float, c: float, start: int) -> float:
    """``sup_{j >= start} f(j)`` for ``f(j) = (a+j)(b+j) / ((c+j)(j+1))``.

    Valid once every factor is positive on ``[start, inf)``; the supremum
    over reals is taken from the endpoint, the limit 1 and the interior
    critical points, which bounds the supremum over integers.
    """
    f = lambda j: (a + j) * (b + j) / ((c + j) * (j + 1.0))
    cands = [f(float(start)), 1.0]
    p, s, q, r = a + b, a * b, c + 1.0, c
    qa, qb, qc = q - p, 2.0 * (r - s), p * r - s * q
    roots = []
    if abs(qa) > 1e-300:
        disc = qb * qb - 4.0 * qa * qc
        if disc >= 0:
            sq = math.sqrt(disc)
            roots = [(-qb - sq) / (2 * qa), (-qb + sq) / (2 * qa)]
    elif abs(qb) > 1e-300:
        roots = [-qc / qb]
    cands += [f(x) for x in roots if x >= start]
    return max(cands)


def hyp2f1(a, b, c, z: float, tol: float = 1e-13, max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Gauss hypergeometric series with a rigorous geometric tail bound.

    ``a, b, c`` are exact rationals; ``z`` is real with ``|z| < 1``, or
    ``z == 1`` in which case Gauss summation is used when ``c - a - b > 0``
    and divergence is flagged otherwise.  The reported ``tail_bound``
    includes a rounding allowance, so a large sum may stop short of an
    absolute ``tol`` with status ``max-terms``.
    """
    a, b, c = (as_rational(v) for v in (a, b, c))
    if c.denominator == 1 and c <= 0:
        raise ValueError(f"c = {c} is a non-positive integer")
    if z == 1:
        if c - a - b <= 0:
            return SeriesResult(math.inf, 0, math.inf, DIVERGED, REASON_GAUSS)
        return SeriesResult(gauss_sum(a, b, c), 0, 0.0, CONVERGED)
    if not abs(z) < 1:
        raise ValueError(f"|z| = {abs(z)} outside the disc of convergence; no analytic continuation")
    if z == 0:
        return SeriesResult(1.0, 1, 0.0, CONVERGED)
    af, bf, cf = float(a), float(b), float(c)
    safe_from = max(0, math.floor(max(-af, -bf, -cf)) + 1)
    term, total, bound, peak = 1.0, 1.0, math.inf, 1.0
    j = 0
    while j + 1 < max_terms:
        term *= (af + j) * (bf + j) / ((cf + j) * (j + 1)) * z
        j += 1
        total += term
        peak = max(peak, abs(total))
        if term == 0.0:
            # a or b is a non-positive integer: the series terminated
            return _finish(total, j + 1, 0.0, tol, peak)
        if j >= safe_from:
            rho = abs(z) * _ratio_sup(af, bf, cf, j)
            if rho < 1:
                bound = abs(term) * rho / (1 - rho)
                if bound + _rounding(j + 1, peak) <= tol or bound <= _EPS * abs(total):
                    break
    return _finish(total, j + 1, bound, tol, peak)


# -- generating function ------------------------------------------------------

def _c_float_stream(n: int):
    """Yield ``c_0(n), c_1(n), ...`` in floating point via the term ratio."""
    c = 1.0
    yield c
    s = 1
    half_n = n / 2.0
    while True:
        c *= (s - 0.5) / (s - 1 + half_n)
        yield c  # c_{2s-1}
        yield c  # c_{2s}
        s += 1


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def G_series(t: float, n: int, tol: float = 1e-12, max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Direct summation of ``sum_k c_k(n) t^k``.

    For ``|t| < 1`` the term ratio never exceeds ``|t|`` (``c_k`` is
    non-increasing), giving a geometric tail bound.  At ``t = 1`` the tail is
    controlled through the hypergeometric ratio of the paired terms; at
    ``t = -1`` the alternating (Leibniz) bound applies.
    """
    _check_n(n)
    if t == 0:
        return SeriesResult(1.0, 1, 0.0, CONVERGED)
    if t == -1:
        return alternating_sum(n, tol=tol, max_terms=max_terms)
    if t == 1:
        return _G_at_one(n, tol, max_terms)
    if not abs(t) < 1:
        raise ValueError(f"|t| = {abs(t)} > 1: the generating series diverges")
    at = abs(t)
    total, power, k, peak = 0.0, 1.0, 0, 0.0
    for c in _c_float_stream(n):
        term = c * power
        total += term
        peak = max(peak, abs(total))
        k += 1
        bound = abs(term) * at / (1.0 - at)
        if bound + _rounding(k, peak) <= tol or bound <= _EPS * abs(total) or k >= max_terms:
            return _finish(total, k, bound, tol, peak)
        power *= t


def _G_at_one(n: int, tol: float, max_terms: int) -> SeriesResult:
    if n <= 3:
        reason = {1: REASON_HYPERGEOMETRIC, 2: REASON_CENTRAL_BINOMIAL, 3: REASON_RECIPROCAL_ODD}[n]
        return SeriesResult(math.inf, 0, math.inf, DIVERGED, reason)
    # Paired terms u_s = c_{2s} satisfy u_{s+1}/u_s = (s + 1/2)/(s + n/2), so
    # sum_{s>=S} u_s = 2 u_S (S + n/2 - 1)/(n - 3) by telescoping.
    total, k = 0.0, 0
    stream = _c_float_stream(n)
    c = next(stream)
    while True:
        total += c
        k += 1
        c = next(stream)  # c_k
        if k % 2 == 1:
            # after c_0..c_{2S-2} the rest is 2 sum_{s>=S} u_s, with u_S = c_k
            S = (k + 1) // 2
            tail = 2.0 * (2.0 * c * (S + n / 2.0 - 1.0) / (n - 3))
            if tail + _rounding(k, total) <= tol or tail <= _EPS * abs(total) or k + 1 >= max_terms:
                return _finish(total, k, tail, tol)


def G_hypergeometric(t: float, n: int, tol: float = 1e-14) -> float:
    """``((1 + t) 2F1(1/2, 1; n/2; t^2) - 1) / t`` with the value 1 at ``t = 0``."""
    _check_n(n)
    if t == 0:
        return 1.0
    f = hyp2f1(Fraction(1, 2), 1, Fraction(n, 2), t * t, tol=tol)
    return ((1 + t) * f.value - 1) / t


def G_closed(t: float, n: int) -> float:
    """Elementary closed forms of the generating function for ``n = 1 .. 4``."""
    if n not in (1, 2, 3, 4):
        raise ValueError(f"no closed form for n = {n}; available for n in 1..4")
    if not -1 < t < 1:
        raise ValueError(f"t = {t} outside (-1, 1)")
    if t == 0:
        return 1.0
    if n == 1:
        return 1.0 / (1.0 - t)
    if n == 2:
        return (math.sqrt(1 + t) - math.sqrt(1 - t)) / (t * math.sqrt(1 - t))
    if n == 3:
        return ((t + 1) / t * 0.5 * math.log((1 + t) / (1 - t)) - 1) / t
    r = math.sqrt(1 - t * t)
    return (2 * t + 1 - r) / (t * (1 + r))


# -- numerical series at t = +/-1 --------------------------------------------

def series_sum(n: int) -> SeriesSum:
    """Exact ``sum_k c_k(n) = (n-1)/(n-3)`` for ``n > 3``; divergence otherwise."""
    _check_n(n)
    if n > 3:
        return SeriesSum(n, Fraction(n - 1, n - 3), CONVERGED)
    reason = {1: REASON_HYPERGEOMETRIC, 2: REASON_CENTRAL_BINOMIAL, 3: REASON_RECIPROCAL_ODD}[n]
    return SeriesSum(n, None, DIVERGED, reason)


def alternating_sum(n: int, tol: float = 1e-12, max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Partial sums of ``sum (-1)^k c_k(n)`` with the Leibniz bound ``c_{K+1}(n)``."""
    _check_n(n)
    if n == 1:
        return SeriesResult(math.nan, 0, math.inf, DIVERGED, REASON_ALTERNATING_ONES)
    total, k, sign = 0.0, 0, 1.0
    stream = _c_float_stream(n)
    c = next(stream)
    while True:
        total += sign * c
        k += 1
        sign = -sign
        c = next(stream)
        if c + _rounding(k, 1.0) <= tol or k >= max_terms:
            return _finish(total, k, c, tol, 1.0)


def alternating_partial_sum(n: int, K: int) -> Fraction:
    """Exact ``sum_{k=0}^{K} (-1)^k c_k(n)``."""
    _check_n(n)
    return sum((Fraction((-1) ** k) * c_pochhammer(n, k) for k in range(K + 1)), Fraction(0))


# -- comparison tables -------------------------------------------------------

COMPARISON_HEADER = ("t", "n", "series", "reference", "abs_diff", "terms_used", "reference_kind", "status")


def comparison_rows(ts: Sequence[float], ns: Sequence[int], series_tol: float = 1e-10,
                    max_terms: int = DEFAULT_MAX_TERMS) -> List[dict]:
    """Series value against the closed form (n <= 4) or the 2F1 expression."""
    rows = []
    for n in ns:
        for t in ts:
            if not -1 < t < 1:
                raise ValueError(f"t = {t} outside (-1, 1)")
            res = G_series(t, n, tol=series_tol, max_terms=max_terms)
            if n <= 4:
                ref, kind = G_closed(t, n), "closed-form"
            else:
                ref, kind = G_hypergeometric(t, n), "hypergeometric"
            rows.append({
                "t": t, "n": n, "series": res.value, "reference": ref,
                "abs_diff": abs(res.value - ref), "terms_used": res.terms_used,
                "reference_kind": kind, "status": res.status,
            })
    return rows


def format_row(row: dict) -> list:
    return [fmt_float(row["t"]), row["n"], fmt_float(row["series"]), fmt_float(row["reference"]),
            fmt_float(row["abs_diff"]), row["terms_used"], row["reference_kind"], row["status"]]

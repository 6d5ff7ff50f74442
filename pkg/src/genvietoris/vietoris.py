"""Generalized Vietoris numbers ``c_k(n)`` computed five independent ways.

``c_k(2)`` is the classical sequence ``1, 1/2, 1/2, 3/8, 3/8, 5/16, ...``;
for general ``n`` the pairs ``c_{2s-1}(n) = c_{2s}(n)`` equal
``(1/2)_s / (n/2)_s``.  The routes below share no code beyond the exact
combinatorial primitives, so their agreement is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .clifford import Multivector, generators
from .exactnum import (
    CapExceededError,
    binomial,
    double_factorial,
    multi_indices,
    multinomial,
    pochhammer,
)
from .serialize import SCHEMA_VERSION, dump_csv, dump_json, rational_json, rational_text
from .symprod import SymProductContext

__all__ = [
    "CLIFFORD_K_CAP",
    "CLIFFORD_N_CAP",
    "METHOD_TAGS",
    "CliffordInversionError",
    "SeqReport",
    "c_central",
    "t_coeff",
    "c_alternating",
    "c_doublefact",
    "c_pochhammer",
    "c_cliffordgen",
    "clifford_bracket",
    "methods_for",
    "cross_verify",
]

CLIFFORD_K_CAP = 8
CLIFFORD_N_CAP = 5


class CliffordInversionError(ArithmeticError):
    """The generator sum did not collapse to a non-zero scalar."""


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")


def c_central(k: int) -> Fraction:
    """``2^-k * C(k, floor(k/2))``; only meaningful as the ``n = 2`` case."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return binomial(k, k // 2) / 2**k


def t_coeff(n: int, k: int, s: int) -> Fraction:
    """Weight of ``x^{k-s} xbar^s`` in the degree-``k`` Appell polynomial."""
    _check_nk(n, k)
    if not 0 <= s <= k:
        raise ValueError(f"s must lie in 0..{k}, got {s}")
    return (
        binomial(k, s)
        * pochhammer(Fraction(n + 1, 2), k - s)
        * pochhammer(Fraction(n - 1, 2), s)
        / pochhammer(n, k)
    )


def c_alternating(n: int, k: int) -> Fraction:
    _check_nk(n, k)
    return sum(((-1) ** s * t_coeff(n, k, s) for s in range(k + 1)), Fraction(0))


def c_doublefact(n: int, k: int) -> Fraction:
    """Odd ``k``: ``k!! (n-2)!! / (n+k-1)!!``; even ``k >= 2`` repeats ``k - 1``."""
    _check_nk(n, k)
    if k == 0:
        return Fraction(1)
    s = k if k % 2 else k - 1
    return double_factorial(s) * double_factorial(n - 2) / double_factorial(n + s - 1)


def c_pochhammer(n: int, k: int) -> Fraction:
    _check_nk(n, k)
    s = (k + 1) // 2
    return pochhammer(Fraction(1, 2), s) / pochhammer(Fraction(n, 2), s)


def clifford_bracket(n: int, k: int, cap: int = CLIFFORD_K_CAP) -> Multivector:
    """``sum_{|nu|=k} (k!/nu!) (e_1^nu_1 x ... x e_n^nu_n)^2`` as a multivector."""
    _check_nk(n, k)
    if k > cap:
        raise CapExceededError("clifford-generator-degree", cap, k)
    ctx = SymProductContext(generators(n), cap=cap)
    total = Multivector(n)
    for nu in multi_indices(n, k):
        sp = ctx(nu)
        total = total + (sp * sp).scale(multinomial(k, nu))
    return total


def c_cliffordgen(n: int, k: int, cap: int = CLIFFORD_K_CAP) -> Fraction:
    """``(-1)^k`` over the generator bracket, which must be a non-zero scalar."""
    bracket = clifford_bracket(n, k, cap=cap)
    if not bracket.is_scalar():
        raise CliffordInversionError(f"bracket for n={n}, k={k} has non-scalar part: {bracket}")
    value = bracket.scalar_part()
    if value == 0:
        raise CliffordInversionError(f"bracket for n={n}, k={k} vanishes")
    return Fraction((-1) ** k) / value


METHOD_TAGS = (
    "central",
    "alternating-T",
    "double-factorial",
    "pochhammer",
    "clifford-generators",
)

_METHODS: Dict[str, Callable[[int, int], Fraction]] = {
    "central": lambda n, k: c_central(k),
    "alternating-T": c_alternating,
    "double-factorial": c_doublefact,
    "pochhammer": c_pochhammer,
}


def methods_for(n: int, k: int, clifford_k_cap: int = CLIFFORD_K_CAP,
                clifford_n_cap: int = CLIFFORD_N_CAP) -> List[str]:
    """Method tags applicable at ``(n, k)`` in canonical order."""
    tags = []
    for tag in METHOD_TAGS:
        if tag == "central" and n != 2:
            continue
        if tag == "clifford-generators" and (k > clifford_k_cap or n > clifford_n_cap):
            continue
        tags.append(tag)
    return tags


def evaluate_method(tag: str, n: int, k: int, clifford_k_cap: int = CLIFFORD_K_CAP) -> Fraction:
    if tag == "clifford-generators":
        return c_cliffordgen(n, k, cap=clifford_k_cap)
    try:
        fn = _METHODS[tag]
    except KeyError:
        raise ValueError(f"unknown method tag {tag!r}; choose from {METHOD_TAGS}") from None
    return fn(n, k)


@dataclass
class SeqReport:
    n: int
    k_max: int
    methods: List[str]
    rows: List[Tuple[int, str, Fraction]] = field(default_factory=list)
    verdict: bool = True
    first_disagreement: Optional[Tuple[int, Tuple[str, str]]] = None

    def values(self, method: str) -> List[Fraction]:
        return [v for _, m, v in self.rows if m == method]

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "seq-report",
            "n": self.n,
            "k_max": self.k_max,
            "methods": list(self.methods),
            "rows": [{"k": k, "method": m, "value": rational_json(v)} for k, m, v in self.rows],
            "verdict": self.verdict,
            "first_disagreement": None if self.first_disagreement is None else {
                "k": self.first_disagreement[0],
                "methods": list(self.first_disagreement[1]),
            },
        }

    def to_json(self) -> str:
        return dump_json(self.to_dict())

    CSV_HEADER = ("k", "method", "value")

    def to_csv(self) -> str:
        return dump_csv(self.CSV_HEADER, ((k, m, rational_text(v)) for k, m, v in self.rows))

    def to_text(self) -> str:
        lines = [f"n = {self.n}"]
        for k in range(self.k_max + 1):
            cells = [f"{m}={rational_text(v)}" for kk, m, v in self.rows if kk == k]
            lines.append(f"k={k}: " + "  ".join(cells))
        lines.append(f"verdict: {'agree' if self.verdict else 'DISAGREE'}")
        if self.first_disagreement is not None:
            k, (a, b) = self.first_disagreement
            lines.append(f"first disagreement at k={k}: {a} vs {b}")
        return "\n".join(lines) + "\n"


def cross_verify(n: int, k_max: int, methods: Optional[List[str]] = None,
                 clifford_k_cap: int = CLIFFORD_K_CAP,
                 clifford_n_cap: int = CLIFFORD_N_CAP) -> SeqReport:
    """Evaluate every applicable method for ``k = 0 .. k_max`` and compare exactly.

    Methods outside their domain (``central`` off ``n = 2``, the generator
    route beyond its caps) are skipped at those cells rather than failing.
    Disagreement is recorded in the report, never raised.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max}")
    wanted = list(METHOD_TAGS) if methods is None else list(methods)
    for tag in wanted:
        if tag not in METHOD_TAGS:
            raise ValueError(f"unknown method tag {tag!r}; choose from {METHOD_TAGS}")
    report = SeqReport(n=n, k_max=k_max, methods=[])
    used = []
    for k in range(k_max + 1):
        tags = [t for t in methods_for(n, k, clifford_k_cap, clifford_n_cap) if t in wanted]
        ref_tag, ref_val = None, None
        for tag in tags:
            if tag not in used:
                used.append(tag)
            val = evaluate_method(tag, n, k, clifford_k_cap)
            report.rows.append((k, tag, val))
            if ref_tag is None:
                ref_tag, ref_val = tag, val
            elif val != ref_val and report.first_disagreement is None:
                report.verdict = False
                report.first_disagreement = (k, (ref_tag, tag))
    report.methods = [t for t in METHOD_TAGS if t in used]
    return report

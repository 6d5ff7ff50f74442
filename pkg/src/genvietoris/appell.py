"""Homogeneous Clifford-holomorphic Appell polynomials ``P_k^n``.

Three constructions are provided and must agree term by term:

``x-xbar``
    ``sum_s T_s^k(n) x^{k-s} xbar^s`` with ``x = x_0 + sum e_i x_i``.
``x0-vec``
    ``sum_s C(k, s) c_s(n) x_0^{k-s} vec(x)^s``.
``hyper-z``
    ``c_k(n) sum_{|nu|=k} (k!/nu!) (z_1^nu_1 x ... x z_n^nu_n)(e_1^nu_1 x ... x e_n^nu_n)``
    with ``z_i = x_i - x_0 e_i``.

``x`` and ``xbar`` are never kept as independent symbols; everything is
expanded in ``x_0 .. x_n`` so equality is plain coefficient comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence

from .clifford import Multivector, Paravector, generator, generators
from .exactnum import CapExceededError, binomial, multi_indices, multinomial
from .polynomial import MvPolynomial, hyper_variable, paravector_poly
from .symprod import SymProductContext
from .vietoris import c_pochhammer, t_coeff

__all__ = [
    "REPRESENTATIONS",
    "HYPER_Z_K_CAP",
    "HYPER_Z_N_CAP",
    "EXPANDED_K_CAP",
    "MvPolynomial",
    "build_P",
    "cr_apply",
    "evaluate",
    "vector_power",
    "repr_equivalence",
    "ReprReport",
    "AppellReport",
    "certify",
]

REPRESENTATIONS = ("x-xbar", "x0-vec", "hyper-z")
HYPER_Z_K_CAP = 8
HYPER_Z_N_CAP = 4
EXPANDED_K_CAP = 12


def _build_x_xbar(n: int, k: int) -> MvPolynomial:
    x = paravector_poly(n, 1)
    xbar = paravector_poly(n, -1)
    # Horner in xbar: H_j = H_{j-1} xbar + T_{k-j} x^j, H_k = P
    h = MvPolynomial.constant(t_coeff(n, k, k), n)
    xpow = MvPolynomial.constant(1, n)
    for j in range(1, k + 1):
        xpow = xpow * x
        h = h * xbar + xpow.scale(t_coeff(n, k, k - j))
    return h


def _build_x0_vec(n: int, k: int) -> MvPolynomial:
    vec = paravector_poly(n, 1) - MvPolynomial.variable(0, n)
    x0 = MvPolynomial.variable(0, n)
    out = MvPolynomial.zero(n)
    vpow = MvPolynomial.constant(1, n)
    for s in range(k + 1):
        if s:
            vpow = vpow * vec
        out = out + (vpow * x0 ** (k - s)).scale(binomial(k, s) * c_pochhammer(n, s))
    return out


def _build_hyper_z(n: int, k: int, k_cap: int, n_cap: int) -> MvPolynomial:
    if k > k_cap:
        raise CapExceededError("hyper-z-degree", k_cap, k)
    if n > n_cap:
        raise CapExceededError("hyper-z-dimension", n_cap, n)
    zs = SymProductContext([hyper_variable(i, n) for i in range(1, n + 1)], cap=k_cap,
                           one=MvPolynomial.constant(1, n))
    es = SymProductContext(generators(n), cap=k_cap)
    out = MvPolynomial.zero(n)
    for nu in multi_indices(n, k):
        out = out + (zs(nu) * es(nu)).scale(multinomial(k, nu))
    return out.scale(c_pochhammer(n, k))


def build_P(n: int, k: int, repr: str = "x0-vec", *, hyper_k_cap: int = HYPER_Z_K_CAP,
            hyper_n_cap: int = HYPER_Z_N_CAP, k_cap: int = EXPANDED_K_CAP) -> MvPolynomial:
    """Build ``P_k^n`` symbolically in the requested representation.

    Raises
    ------
    CapExceededError
        ``k`` beyond ``k_cap`` (any representation) or beyond the hyper-z caps.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k > k_cap:
        raise CapExceededError("appell-degree", k_cap, k)
    if repr == "x-xbar":
        return _build_x_xbar(n, k)
    if repr == "x0-vec":
        return _build_x0_vec(n, k)
    if repr == "hyper-z":
        return _build_hyper_z(n, k, hyper_k_cap, hyper_n_cap)
    raise ValueError(f"unknown representation {repr!r}; choose from {REPRESENTATIONS}")


def cr_apply(p: MvPolynomial, which: str = "dbar") -> MvPolynomial:
    """Apply ``dbar = (d_0 + d_vec)/2`` or ``d = (d_0 - d_vec)/2`` from the left.

    ``d_vec = sum_i e_i d/dx_i`` with ``e_i`` multiplying coefficients on
    the left.
    """
    if which not in ("dbar", "d"):
        raise ValueError(f"which must be 'dbar' or 'd', got {which!r}")
    sign = 1 if which == "dbar" else -1
    vec_part = MvPolynomial.zero(p.n)
    for i in range(1, p.n + 1):
        vec_part = vec_part + p.diff(i).left_mul(generator(i, p.n))
    total = p.diff(0) + (vec_part if sign > 0 else -vec_part)
    return total.scale(Fraction(1, 2))


def evaluate(p: MvPolynomial, point) -> Multivector:
    """Exact value of ``p`` at a paravector (or coordinate tuple)."""
    return p.evaluate(point)


def vector_power(point: Paravector, k: int) -> Multivector:
    """``k``-th geometric power of the vector part of ``point``."""
    return point.vector_part() ** k


@dataclass
class ReprReport:
    n: int
    k: int
    representations: List[str]
    skipped: Dict[str, str] = field(default_factory=dict)
    equal: bool = True


def repr_equivalence(n: int, k: int, *, hyper_k_cap: int = HYPER_Z_K_CAP,
                     hyper_n_cap: int = HYPER_Z_N_CAP) -> ReprReport:
    """Build every representation available within the caps and compare."""
    report = ReprReport(n=n, k=k, representations=[])
    built = []
    for rep in REPRESENTATIONS:
        try:
            built.append(build_P(n, k, rep, hyper_k_cap=hyper_k_cap, hyper_n_cap=hyper_n_cap))
            report.representations.append(rep)
        except CapExceededError as exc:
            report.skipped[rep] = str(exc)
    report.equal = all(b == built[0] for b in built[1:])
    return report


@dataclass
class AppellReport:
    n: int
    k: int
    polynomial: MvPolynomial
    checks: Dict[str, bool]

    @property
    def verdict(self) -> bool:
        return all(self.checks.values())


def certify(n: int, k: int, sample_points: Sequence[Paravector] = (), *,
            hyper_k_cap: int = HYPER_Z_K_CAP, hyper_n_cap: int = HYPER_Z_N_CAP) -> AppellReport:
    """Run the defining identities for ``P_k^n``.

    Checks monogenicity, the Appell derivative rule, normalization at
    ``x = 1``, agreement of all representations and, for each sample point,
    the restriction ``P(vec x) = c_k(n) vec(x)^k`` (``x_0`` is forced to 0).
    """
    p = build_P(n, k, "x0-vec")
    checks: Dict[str, bool] = {}
    checks["dbar-zero"] = cr_apply(p, "dbar").is_zero()
    if k == 0:
        checks["appell-derivative"] = cr_apply(p, "d").is_zero()
    else:
        prev = build_P(n, k - 1, "x0-vec")
        checks["appell-derivative"] = cr_apply(p, "d") == prev.scale(k)
    one = Paravector(1, (0,) * n)
    checks["value-at-one"] = evaluate(p, one) == 1
    checks["representations-equal"] = repr_equivalence(
        n, k, hyper_k_cap=hyper_k_cap, hyper_n_cap=hyper_n_cap).equal
    ck = c_pochhammer(n, k)
    restriction = True
    for pt in sample_points:
        pt = Paravector(0, pt.xv)
        restriction &= evaluate(p, pt) == vector_power(pt, k).scale(ck)
    checks["restriction"] = restriction
    return AppellReport(n=n, k=k, polynomial=p, checks=checks)

"""Vietoris' sine and cosine sums and an empirical positivity scan.

The coefficients are ``a_{2m} = a_{2m+1} = 2^{-2m} C(2m, m)``.  Positivity of

    sigma_N(x) = sum_{k=1}^{N} a_k sin(kx),   tau_N(x) = sum_{k=0}^{N} a_k cos(kx)

on ``0 < x < pi`` is checked on an open uniform grid.  This is numerical
evidence, not a proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .exactnum import binomial
from .serialize import SCHEMA_VERSION, dump_csv, dump_json, fmt_float, json_float

__all__ = [
    "vietoris_a",
    "coefficients",
    "sigma",
    "tau",
    "footnote_condition",
    "ScanReport",
    "positivity_scan",
]


def vietoris_a(k: int) -> Fraction:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    m = k // 2
    return binomial(2 * m, m) / 4**m


def coefficients(N: int) -> np.ndarray:
    """``a_0 .. a_N`` computed exactly, then converted to float once."""
    return np.array([float(vietoris_a(k)) for k in range(N + 1)])


def sigma(N: int, x: float) -> float:
    if N < 1:
        raise ValueError(f"sigma needs N >= 1, got {N}")
    a = coefficients(N)
    return float(sum(a[k] * math.sin(k * x) for k in range(1, N + 1)))


def tau(N: int, x: float) -> float:
    if N < 0:
        raise ValueError(f"tau needs N >= 0, got {N}")
    a = coefficients(N)
    return float(sum(a[k] * math.cos(k * x) for k in range(N + 1)))


def footnote_condition(k_max: int) -> bool:
    """Exact check of ``a_0 >= a_1 >= ... > 0`` and ``2k a_{2k} <= (2k-1) a_{2k-1}``."""
    a = [vietoris_a(k) for k in range(2 * k_max + 1)]
    monotone = all(a[i] >= a[i + 1] > 0 for i in range(len(a) - 1))
    ratio = all(2 * k * a[2 * k] <= (2 * k - 1) * a[2 * k - 1] for k in range(1, k_max + 1))
    return monotone and ratio


@dataclass
class ScanReport:
    N_max: int
    grid_size: int
    minima: List[Tuple[int, float, float, float]] = field(default_factory=list)
    verdict: bool = True
    label: str = "empirical check of Vietoris positivity"

    CSV_HEADER = ("N", "argmin_x", "min_sigma", "min_tau")

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "scan-report",
            "label": self.label,
            "N_max": self.N_max,
            "grid_size": self.grid_size,
            "minima": [
                {"N": N, "argmin_x": json_float(x), "min_sigma": json_float(s), "min_tau": json_float(t)}
                for N, x, s, t in self.minima
            ],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return dump_json(self.to_dict())

    def to_csv(self) -> str:
        return dump_csv(self.CSV_HEADER, ((N, fmt_float(x), fmt_float(s), fmt_float(t))
                                          for N, x, s, t in self.minima))

    def to_text(self) -> str:
        lines = [self.label, f"N_max = {self.N_max}, grid points = {self.grid_size}"]
        for N, x, s, t in self.minima:
            lines.append(f"N={N}: argmin_x={fmt_float(x)} min_sigma={fmt_float(s)} min_tau={fmt_float(t)}")
        lines.append(f"verdict: {'positive' if self.verdict else 'NOT POSITIVE'}")
        return "\n".join(lines) + "\n"


def positivity_scan(N_max: int, grid_points: int) -> ScanReport:
    """Minimum of ``sigma_N`` and ``tau_N`` over ``x_j = j pi/(grid_points+1)``.

    ``argmin_x`` refers to the sine sum; the grid never touches 0 or pi.
    """
    if N_max < 1:
        raise ValueError(f"N_max must be >= 1, got {N_max}")
    if grid_points < 2:
        raise ValueError(f"grid_points must be >= 2, got {grid_points}")
    x = np.arange(1, grid_points + 1) * (np.pi / (grid_points + 1))
    a = coefficients(N_max)
    k = np.arange(N_max + 1)[:, None]
    sig = np.cumsum(a[:, None] * np.sin(k * x), axis=0)
    tau_ = np.cumsum(a[:, None] * np.cos(k * x), axis=0)
    report = ScanReport(N_max=N_max, grid_size=grid_points)
    for N in range(1, N_max + 1):
        i = int(np.argmin(sig[N]))
        ms, mt = float(sig[N, i]), float(tau_[N].min())
        report.minima.append((N, float(x[i]), ms, mt))
        if not (ms > 0 and mt > 0):
            report.verdict = False
    return report

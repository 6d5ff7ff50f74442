"""Command-line interface.

Usage::

    genvietoris seq --n 2 --k-max 6
    genvietoris verify --n 4 --k-max 8 --format json
    genvietoris appell --n 3 --k 4
    genvietoris genfun --n 3 --t 0.5 --tol 1e-9
    genvietoris scan --N-max 50 --grid 999

Exit status: 0 when every verdict holds, 1 when one fails, 2 for usage
errors, 3 when a request exceeds a configured cap.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import appell, genfun, trigsum, vietoris
from .clifford import MAX_DIMENSION, Paravector
from .exactnum import CapExceededError
from .serialize import SCHEMA_VERSION, dump_csv, dump_json, json_float, rational_json, rational_text

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2
EXIT_CAP = 3

OUTPUT_DIR_ENV = "GENVIETORIS_OUTPUT_DIR"
COMMANDS = ("seq", "verify", "appell", "genfun", "scan")
FORMATS = ("text", "json", "csv")
VERIFY_CSV_HEADER = ("section", "k", "name", "value", "passed")
APPELL_CSV_HEADER = ("exponents", "blade_mask", "coefficient")
DEFAULT_T_GRID = tuple(s * k / 10 for s in (-1, 1) for k in range(1, 10))


@dataclass
class RunConfig:
    command: str
    n: List[int] = field(default_factory=lambda: [2])
    k_max: int = 6
    k: Optional[int] = None
    N_max: int = 50
    grid: int = 999
    t_grid: List[float] = field(default_factory=lambda: list(DEFAULT_T_GRID))
    tol: float = 1e-9
    format: str = "text"
    output: Optional[str] = None
    methods: Optional[List[str]] = None
    representation: str = "x0-vec"
    n_ceiling: int = MAX_DIMENSION
    clifford_k_cap: int = vietoris.CLIFFORD_K_CAP
    clifford_n_cap: int = vietoris.CLIFFORD_N_CAP
    hyper_k_cap: int = appell.HYPER_Z_K_CAP
    hyper_n_cap: int = appell.HYPER_Z_N_CAP
    appell_k_cap: int = appell.EXPANDED_K_CAP
    appell_n_cap: int = 4
    max_terms: int = genfun.DEFAULT_MAX_TERMS

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if not self.n or any(v < 1 for v in self.n):
            raise ValueError("n must be >= 1")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if not self.t_grid:
            raise ValueError("t grid must be non-empty")
        if self.k_max < 0 or (self.k is not None and self.k < 0):
            raise ValueError("degrees must be non-negative")
        if self.N_max < 1 or self.grid < 2:
            raise ValueError("scan needs N-max >= 1 and at least 2 grid points")
        if self.methods:
            bad = [m for m in self.methods if m not in vietoris.METHOD_TAGS]
            if bad:
                raise ValueError(f"unknown method(s) {bad}; choose from {list(vietoris.METHOD_TAGS)}")
        if self.command in ("seq", "verify", "appell"):
            for v in self.n:
                if v > self.n_ceiling:
                    raise CapExceededError("n-ceiling", self.n_ceiling, v)


def sample_points(n: int) -> List[Paravector]:
    """Deterministic rational sample points used for restriction checks."""
    from fractions import Fraction as F
    pool = [F(1), F(-2, 3), F(1, 2), F(3), F(-1, 5), F(2, 7), F(-4), F(5, 3)]
    first = tuple(pool[i % len(pool)] for i in range(n))
    second = tuple(pool[(3 * i + 1) % len(pool)] * (-1) ** i for i in range(n))
    return [Paravector(0, first), Paravector(0, second)]


# -- commands ---------------------------------------------------------------

def _seq(cfg: RunConfig) -> Tuple[int, str]:
    n = cfg.n[0]
    methods = cfg.methods or ["pochhammer"]
    if "central" in methods and n != 2:
        raise ValueError(f"method 'central' only applies at n = 2, got n = {n}")
    if "clifford-generators" in methods:
        if n > cfg.clifford_n_cap:
            raise CapExceededError("clifford-generator-dimension", cfg.clifford_n_cap, n)
        if cfg.k_max > cfg.clifford_k_cap:
            raise CapExceededError("clifford-generator-degree", cfg.clifford_k_cap, cfg.k_max)
    report = vietoris.cross_verify(n, cfg.k_max, methods=methods,
                                   clifford_k_cap=cfg.clifford_k_cap, clifford_n_cap=cfg.clifford_n_cap)
    if cfg.format == "json":
        out = report.to_json()
    elif cfg.format == "csv":
        out = report.to_csv()
    else:
        cols = report.methods
        lines = ["\t".join(["k"] + cols)]
        for k in range(cfg.k_max + 1):
            vals = {m: v for kk, m, v in report.rows if kk == k}
            lines.append("\t".join([str(k)] + [str(vals[m]) for m in cols]))
        out = "\n".join(lines) + "\n"
    return (EXIT_OK if report.verdict else EXIT_VERDICT), out


def _appell_checks(cfg: RunConfig, n: int, k_top: int) -> List[appell.AppellReport]:
    pts = sample_points(n)
    return [appell.certify(n, k, pts, hyper_k_cap=cfg.hyper_k_cap, hyper_n_cap=cfg.hyper_n_cap)
            for k in range(k_top + 1)]


def _verify(cfg: RunConfig) -> Tuple[int, str]:
    n = cfg.n[0]
    report = vietoris.cross_verify(n, cfg.k_max, methods=cfg.methods,
                                   clifford_k_cap=cfg.clifford_k_cap, clifford_n_cap=cfg.clifford_n_cap)
    appell_rows = []
    appell_skipped = None
    if n <= cfg.appell_n_cap:
        k_top = min(cfg.k_max, cfg.appell_k_cap)
        appell_rows = _appell_checks(cfg, n, k_top)
    else:
        appell_skipped = f"n = {n} above appell-n-cap {cfg.appell_n_cap}"
    verdict = report.verdict and all(r.verdict for r in appell_rows)
    if cfg.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "kind": "verify-report",
            "n": n,
            "k_max": cfg.k_max,
            "sequence": report.to_dict(),
            "appell": [{"k": r.k, "checks": r.checks, "verdict": r.verdict} for r in appell_rows],
            "appell_skipped": appell_skipped,
            "verdict": verdict,
        }
        out = dump_json(doc)
    elif cfg.format == "csv":
        rows = [("sequence", k, m, rational_text(v), "") for k, m, v in report.rows]
        rows += [("appell", r.k, name, "", str(ok).lower())
                 for r in appell_rows for name, ok in r.checks.items()]
        out = dump_csv(VERIFY_CSV_HEADER, rows)
    else:
        out = report.to_text()
        for r in appell_rows:
            marks = " ".join(f"{name}={'ok' if ok else 'FAIL'}" for name, ok in r.checks.items())
            out += f"appell k={r.k}: {marks}\n"
        if appell_skipped:
            out += f"appell checks skipped: {appell_skipped}\n"
        out += f"overall: {'PASS' if verdict else 'FAIL'}\n"
    return (EXIT_OK if verdict else EXIT_VERDICT), out


def _appell(cfg: RunConfig) -> Tuple[int, str]:
    n = cfg.n[0]
    k = cfg.k if cfg.k is not None else cfg.k_max
    poly = appell.build_P(n, k, cfg.representation, hyper_k_cap=cfg.hyper_k_cap,
                          hyper_n_cap=cfg.hyper_n_cap, k_cap=cfg.appell_k_cap)
    rep = appell.certify(n, k, sample_points(n), hyper_k_cap=cfg.hyper_k_cap, hyper_n_cap=cfg.hyper_n_cap)
    if cfg.format == "json":
        terms = [{"exponents": list(key), "coefficient": {str(m): rational_json(c) for m, c in mv.terms.items()}}
                 for key, mv in poly.sorted_terms()]
        out = dump_json({
            "schema_version": SCHEMA_VERSION, "kind": "appell-report", "n": n, "k": k,
            "representation": cfg.representation, "polynomial": str(poly), "terms": terms,
            "checks": rep.checks, "verdict": rep.verdict,
        })
    elif cfg.format == "csv":
        rows = []
        for key, mv in poly.sorted_terms():
            for mask, c in mv.terms.items():
                rows.append((" ".join(map(str, key)), mask, rational_text(c)))
        out = dump_csv(APPELL_CSV_HEADER, rows)
    else:
        out = f"P_{k}^{n} [{cfg.representation}] = {poly}\n"
        out += "".join(f"{name}: {'ok' if ok else 'FAIL'}\n" for name, ok in rep.checks.items())
    return (EXIT_OK if rep.verdict else EXIT_VERDICT), out


def _genfun(cfg: RunConfig) -> Tuple[int, str]:
    rows = genfun.comparison_rows(cfg.t_grid, cfg.n, series_tol=cfg.tol / 10, max_terms=cfg.max_terms)
    verdict = all(r["abs_diff"] <= cfg.tol and r["status"] == genfun.CONVERGED for r in rows)
    if cfg.format == "json":
        out = dump_json({
            "schema_version": SCHEMA_VERSION, "kind": "genfun-report", "tol": cfg.tol,
            "rows": [{k: (json_float(v) if isinstance(v, float) else v) for k, v in r.items()} for r in rows],
            "verdict": verdict,
        })
    else:
        body = dump_csv(genfun.COMPARISON_HEADER, (genfun.format_row(r) for r in rows))
        out = body if cfg.format == "csv" else body.replace(",", "\t") + f"verdict: {'PASS' if verdict else 'FAIL'}\n"
    return (EXIT_OK if verdict else EXIT_VERDICT), out


def _scan(cfg: RunConfig) -> Tuple[int, str]:
    report = trigsum.positivity_scan(cfg.N_max, cfg.grid)
    out = {"json": report.to_json, "csv": report.to_csv, "text": report.to_text}[cfg.format]()
    return (EXIT_OK if report.verdict else EXIT_VERDICT), out


_DISPATCH = {"seq": _seq, "verify": _verify, "appell": _appell, "genfun": _genfun, "scan": _scan}


def run(cfg: RunConfig) -> Tuple[int, str]:
    """Execute one command; returns ``(exit_status, serialized_report)``."""
    cfg.validate()
    return _DISPATCH[cfg.command](cfg)


# -- argument parsing -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genvietoris", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--output", "-o", help=f"write here instead of stdout (relative to ${OUTPUT_DIR_ENV} if set)")
    caps = common.add_argument_group("caps")
    caps.add_argument("--n-ceiling", type=int, default=MAX_DIMENSION)
    caps.add_argument("--clifford-k-cap", type=int, default=vietoris.CLIFFORD_K_CAP)
    caps.add_argument("--clifford-n-cap", type=int, default=vietoris.CLIFFORD_N_CAP)
    caps.add_argument("--hyper-k-cap", type=int, default=appell.HYPER_Z_K_CAP)
    caps.add_argument("--hyper-n-cap", type=int, default=appell.HYPER_Z_N_CAP)
    caps.add_argument("--appell-k-cap", type=int, default=appell.EXPANDED_K_CAP)
    caps.add_argument("--appell-n-cap", type=int, default=4)
    caps.add_argument("--max-terms", type=int, default=genfun.DEFAULT_MAX_TERMS)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="table of c_k(n)")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--method", action="append", choices=vietoris.METHOD_TAGS, dest="methods")

    p = sub.add_parser("verify", parents=[common], help="cross-check all formulas and Appell identities")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--method", action="append", choices=vietoris.METHOD_TAGS, dest="methods")

    p = sub.add_parser("appell", parents=[common], help="print P_k^n and its identity checks")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--repr", choices=appell.REPRESENTATIONS, default="x0-vec", dest="representation")

    p = sub.add_parser("genfun", parents=[common], help="generating function: series vs closed form")
    p.add_argument("--n", type=int, action="append")
    p.add_argument("--t", type=float, action="append")
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("scan", parents=[common], help="positivity scan of the sine and cosine sums")
    p.add_argument("--N-max", type=int, default=50, dest="N_max")
    p.add_argument("--grid", type=int, default=999)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, format=ns.format, output=ns.output,
                    n_ceiling=ns.n_ceiling, clifford_k_cap=ns.clifford_k_cap,
                    clifford_n_cap=ns.clifford_n_cap, hyper_k_cap=ns.hyper_k_cap,
                    hyper_n_cap=ns.hyper_n_cap, appell_k_cap=ns.appell_k_cap,
                    appell_n_cap=ns.appell_n_cap, max_terms=ns.max_terms)
    n = getattr(ns, "n", None)
    if isinstance(n, list):
        cfg.n = n
    elif n is not None:
        cfg.n = [n]
    elif ns.command == "genfun":
        cfg.n = [1, 2, 3, 4]
    for attr in ("k_max", "k", "N_max", "grid", "tol", "methods", "representation"):
        val = getattr(ns, attr, None)
        if val is not None:
            setattr(cfg, attr, val)
    if getattr(ns, "t", None):
        cfg.t_grid = list(ns.t)
    return cfg


def _resolve_output(path: str) -> Path:
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = config_from_args(ns)
    try:
        status, text = run(cfg)
    except CapExceededError as exc:
        print(f"genvietoris: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"genvietoris: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output:
        dest = _resolve_output(cfg.output)
        dest.parent.mkdir(parents=True, exist_ok=True)
        dest.write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

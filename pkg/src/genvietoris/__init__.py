"""Generalized Vietoris number sequences and the Clifford-algebra machinery behind them."""

from .clifford import Multivector, Paravector, conjugate, generator, geo_mul, norm_sq
from .exactnum import (
    CapExceededError,
    MultiIndex,
    Rational,
    double_factorial,
    multinomial,
    pochhammer,
)
from .polynomial import MvPolynomial
from .vietoris import (
    SeqReport,
    c_alternating,
    c_central,
    c_cliffordgen,
    c_doublefact,
    c_pochhammer,
    cross_verify,
    t_coeff,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "MultiIndex",
    "Multivector",
    "MvPolynomial",
    "Paravector",
    "Rational",
    "SeqReport",
    "c_alternating",
    "c_central",
    "c_cliffordgen",
    "c_doublefact",
    "c_pochhammer",
    "conjugate",
    "cross_verify",
    "double_factorial",
    "generator",
    "geo_mul",
    "multinomial",
    "norm_sq",
    "pochhammer",
    "t_coeff",
]

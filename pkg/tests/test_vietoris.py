import json
from fractions import Fraction
from math import comb, factorial

import pytest

from genvietoris import vietoris
from genvietoris.clifford import generators
from genvietoris.exactnum import CapExceededError, pochhammer
from genvietoris.vietoris import (
    c_alternating,
    c_central,
    c_cliffordgen,
    c_doublefact,
    c_pochhammer,
    clifford_bracket,
    cross_verify,
    t_coeff,
)

F = Fraction
FIRST_ELEMENTS = [F(1), F(1, 2), F(1, 2), F(3, 8), F(3, 8), F(5, 16), F(5, 16)]
ALL = [c_alternating, c_doublefact, c_pochhammer]


def test_central_first_elements():
    assert [c_central(k) for k in range(7)] == FIRST_ELEMENTS


def test_central_pairing():
    for m in range(1, 30):
        assert c_central(2 * m - 1) == c_central(2 * m) == F(comb(2 * m, m), 4**m)


def test_t_coeff_examples():
    assert t_coeff(2, 1, 0) == F(3, 4)
    assert t_coeff(2, 1, 1) == F(1, 4)
    for n in range(1, 6):
        assert t_coeff(n, 0, 0) == 1
    assert sum(t_coeff(3, 5, s) for s in range(6)) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_t_coeff_sums_to_one(n):
    for k in range(13):
        assert sum(t_coeff(n, k, s) for s in range(k + 1)) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_cauchy_kernel_coefficients(n):
    # coefficient of x^{k-s} xbar^s in (1-x)^{-(n+1)/2} (1-xbar)^{-(n-1)/2}
    for k in range(9):
        for s in range(k + 1):
            kernel = (pochhammer(F(n + 1, 2), k - s) / factorial(k - s)
                      * pochhammer(F(n - 1, 2), s) / factorial(s))
            assert kernel == pochhammer(n, k) / factorial(k) * t_coeff(n, k, s)


def test_t_coeff_range():
    with pytest.raises(ValueError):
        t_coeff(2, 3, 4)
    with pytest.raises(ValueError):
        t_coeff(0, 1, 0)


def test_alternating_examples():
    assert c_alternating(2, 1) == F(1, 2)
    for n in range(1, 6):
        assert c_alternating(n, 0) == 1
    assert c_alternating(5, 2) == c_alternating(5, 1)


def test_doublefact_examples():
    assert c_doublefact(3, 1) == F(1, 3)
    assert c_doublefact(2, 1) == F(1, 2)
    assert c_doublefact(1, 3) == 1


def test_pochhammer_examples():
    assert c_pochhammer(3, 4) == F(1, 5)
    assert c_pochhammer(2, 6) == F(comb(6, 3), 2**6) == F(5, 16)
    assert c_pochhammer(4, 4) == F(3, 4) / 6 == F(1, 8)


def test_odd_reciprocal_at_n3():
    for k in range(1, 12):
        assert c_pochhammer(3, 2 * k) == F(1, 2 * k + 1)


def test_cliffordgen_examples():
    assert c_cliffordgen(2, 1) == F(1, 2)
    assert c_cliffordgen(2, 3) == F(3, 8)
    for n in range(1, 5):
        assert c_cliffordgen(n, 0) == 1
    assert clifford_bracket(3, 1) == -3
    assert c_cliffordgen(3, 1) == F(1, 3)


def test_quaternion_pattern_first_elements():
    assert [c_cliffordgen(2, k) for k in range(5)] == FIRST_ELEMENTS[:5]


def test_quaternion_bracket_by_hand():
    # A_2: (i^2)^2 + 2 (i x j)^2 + (j^2)^2 with i x j = 0
    i, j = generators(2)
    assert clifford_bracket(2, 2) == (i * i) * (i * i) + (j * j) * (j * j)


def test_cliffordgen_cap():
    with pytest.raises(CapExceededError):
        c_cliffordgen(2, 9)
    assert c_cliffordgen(2, 9, cap=9) == F(comb(10, 5), 4**5)


@pytest.mark.parametrize("fn", ALL)
@pytest.mark.parametrize("n", range(1, 9))
def test_pairing(fn, n):
    assert fn(n, 0) == 1
    for m in range(1, 7):
        assert fn(n, 2 * m) == fn(n, 2 * m - 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_strictly_decreasing_over_even_indices(n):
    vals = [c_pochhammer(n, 2 * m) for m in range(10)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_constant_at_n1():
    assert all(fn(1, k) == 1 for fn in ALL for k in range(13))


@pytest.mark.parametrize("n", range(1, 9))
def test_all_methods_agree(n):
    report = cross_verify(n, 12)
    assert report.verdict, report.first_disagreement
    expected_methods = {"alternating-T", "double-factorial", "pochhammer"}
    if n == 2:
        expected_methods.add("central")
    if n <= 5:
        expected_methods.add("clifford-generators")
    assert set(report.methods) == expected_methods
    cliff_ks = [k for k, m, _ in report.rows if m == "clifford-generators"]
    assert cliff_ks == (list(range(9)) if n <= 5 else [])


def test_cross_verify_examples():
    r = cross_verify(2, 6)
    assert r.verdict and r.values("central") == FIRST_ELEMENTS
    r = cross_verify(1, 5)
    assert r.verdict and all(v == 1 for _, _, v in r.rows)
    assert cross_verify(4, 8).verdict


def test_cross_verify_reports_disagreement(monkeypatch):
    monkeypatch.setitem(vietoris._METHODS, "double-factorial", lambda n, k: c_pochhammer(n, k) + (k == 3))
    r = cross_verify(3, 5)
    assert not r.verdict
    assert r.first_disagreement == (3, ("alternating-T", "double-factorial"))


def test_cross_verify_rejects_unknown_method():
    with pytest.raises(ValueError):
        cross_verify(2, 3, methods=["nope"])


def test_seq_report_serialization():
    r = cross_verify(2, 2, methods=["pochhammer"])
    doc = json.loads(r.to_json())
    assert doc["n"] == 2 and doc["k_max"] == 2 and doc["verdict"] is True
    assert doc["methods"] == ["pochhammer"]
    assert doc["rows"][1] == {"k": 1, "method": "pochhammer", "value": {"num": "1", "den": "2"}}
    assert r.to_csv().splitlines() == [
        "k,method,value",
        "0,pochhammer,1/1",
        "1,pochhammer,1/2",
        "2,pochhammer,1/2",
    ]

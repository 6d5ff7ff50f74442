import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genvietoris.clifford import (
    Multivector,
    Paravector,
    blade_product,
    conjugate,
    generator,
    geo_mul,
    norm_sq,
)


def blade_product_oracle(a_idx, b_idx):
    """Concatenate index words, bubble-sort counting swaps, then cancel e_k e_k = -1."""
    word = list(a_idx) + list(b_idx)
    sign = 1
    for i in range(len(word)):
        for j in range(len(word) - 1 - i):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                sign = -sign
    out = []
    for w in word:
        if out and out[-1] == w:
            out.pop()
            sign = -sign
        else:
            out.append(w)
    return sign, tuple(out)


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def test_blade_product_matches_oracle_exhaustively():
    n = 4
    blades = [c for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]
    for a in blades:
        for b in blades:
            sign, idx = blade_product_oracle(a, b)
            assert blade_product(mask_of(a), mask_of(b)) == (sign, mask_of(idx))


def test_generator_squares_and_products():
    e1, e2 = generator(1, 2), generator(2, 2)
    assert e1 * e1 == -1
    e12 = Multivector(2, {0b11: 1})
    assert e1 * e2 == e12
    assert e2 * e1 == -e12
    assert (e1 + e2) * (e1 + e2) == Multivector.scalar(-2, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_anticommutation(n):
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            ek, el = generator(k, n), generator(l, n)
            expected = Multivector.scalar(-2 if k == l else 0, n)
            assert ek * el + el * ek == expected


def multivectors(n):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.dictionaries(st.integers(0, (1 << n) - 1), coeff, max_size=5).map(lambda d: Multivector(n, d))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(multivectors(n), multivectors(n), multivectors(n))))
def test_associativity(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)


def paravectors(n):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=7)
    return st.tuples(coeff, st.lists(coeff, min_size=n, max_size=n)).map(lambda t: Paravector(t[0], tuple(t[1])))


@given(st.integers(1, 5).flatmap(paravectors))
def test_conjugate_product_is_scalar_norm(x):
    mx, mxb = x.to_multivector(), conjugate(x).to_multivector()
    left, right = geo_mul(mx, mxb), geo_mul(mxb, mx)
    assert left == right
    assert left.is_scalar()
    assert left.scalar_part() == norm_sq(x)


def test_conjugate_examples():
    x = Paravector(1, (1, 0))
    assert conjugate(x) == Paravector(1, (-1, 0))
    assert conjugate(Paravector(5, (0, 0))) == Paravector(5, (0, 0))
    assert norm_sq(x) == 2
    assert norm_sq(Paravector(0, (0, 0))) == 0


def test_cubic_expansion_of_two_generators():
    i, j = generator(1, 2), generator(2, 2)
    cube = (i + j) * (i + j) * (i + j)
    grouped = i * i * i + (i * i * j + i * j * i + j * i * i) + (i * j * j + j * i * j + j * j * i) + j * j * j
    assert cube == grouped
    assert cube == (i + j).scale(-2)
    assert i * i * i == -i
    assert i * i * j + i * j * i + j * i * i == -j
    assert i * j * j + j * i * j + j * j * i == -i


def test_quaternion_relation():
    i, j = generator(1, 2), generator(2, 2)
    k = i * j
    assert k * k == -1
    assert i * j * k == -1


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        geo_mul(generator(1, 2), generator(1, 3))
    with pytest.raises(ValueError):
        generator(3, 2)


def test_rendering_is_ascending_mask_order():
    mv = Multivector(3, {0b101: Fraction(-1, 3), 0: 2, 0b010: 1})
    assert str(mv) == "2 + 1 * e{2} - 1/3 * e{1,3}"
    assert str(Multivector(2)) == "0"
    assert str(-generator(1, 2)) == "-1 * e{1}"


def test_zero_coefficients_not_stored():
    mv = Multivector(2, {0: 0, 1: Fraction(1, 2)})
    assert list(mv.terms) == [1]
    assert (mv - mv).is_zero()

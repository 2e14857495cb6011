from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from tieknots.laurent import LaurentPolynomial

A = LaurentPolynomial.monomial(1)

polys = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=5).map(LaurentPolynomial)


def test_zero_coefficients_dropped():
    p = LaurentPolynomial({2: 0, -1: 3})
    assert p.terms == {-1: 3}
    assert LaurentPolynomial({0: 0}).is_zero()


def test_text_form():
    assert str(LaurentPolynomial.constant(1, var="q")) == "1*q^0"
    assert str(-(A**2) - A**-2) == "-1*A^-2+-1*A^2"
    assert str(LaurentPolynomial()) == "0"


def test_parse_round_trip():
    p = LaurentPolynomial({-3: 2, 4: -1}, var="q")
    assert LaurentPolynomial.parse(str(p)) == p


def test_span_and_degrees():
    p = A**-4 + 3 * A**6
    assert (p.min_degree(), p.max_degree(), p.span()) == (-4, 6, 10)
    assert LaurentPolynomial.constant(1).span() == 0


def test_inverted():
    assert (A**3 - 2 * A**-1).inverted() == A**-3 - 2 * A


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPolynomial()


@given(polys, st.integers(0, 4))
def test_power_matches_repeated_product(p, k):
    want = LaurentPolynomial.constant(1)
    for _ in range(k):
        want = want * p
    assert p**k == want


def test_negative_power_of_monomial():
    assert (A**-2) * (A**2) == 1
    with pytest.raises(ValueError):
        (A + 1) ** -1

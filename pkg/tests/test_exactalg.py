from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualfsig.exactalg import (
    AmbientMismatchError,
    Polynomial,
    binomial,
    exact_rank,
    lex_compare,
    monomials_of_degree,
    poly_add,
    poly_mul,
    poly_scale,
)


def x(i, n=2):
    return Polynomial.variable(i - 1, n)


def test_binomial_examples():
    assert binomial(5, 2) == 10
    for n in range(1, 9):
        assert binomial(n - 1, n - 1) == 1
    assert binomial(3, 2) == 3


def test_binomial_outside_range_is_zero():
    assert binomial(4, -1) == 0
    assert binomial(4, 5) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_pascal_rule():
    for a in range(1, 61):
        for b in range(0, a + 1):
            assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)


def test_lex_examples():
    assert lex_compare((2, 0), (1, 1)) == -1
    assert lex_compare((1, 1), (1, 1)) == 0
    assert lex_compare((0, 1), (5, 0)) == 1
    with pytest.raises(AmbientMismatchError):
        lex_compare((1,), (1, 0))


def _word_order_oracle(nvars, max_deg):
    # spell each monomial as a string of variable digits and sort as strings
    words = [""]
    for deg in range(1, max_deg + 1):
        for combo in combinations_with_replacement("123456789"[:nvars], deg):
            words.append("".join(combo))
    words.sort()
    return [tuple(w.count(str(i + 1)) for i in range(nvars)) for w in words]


def test_lex_matches_string_enumeration_two_vars():
    expected = _word_order_oracle(2, 5)
    got = sorted(expected, key=cmp_to_key(lex_compare))
    assert got == expected
    assert lex_compare((0, 1), (5, 0)) == 1


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("r", range(1, 9))
def test_lex_total_order_and_minimum(n, r):
    monos = monomials_of_degree(n, r)
    assert monos[0] == (r,) + (0,) * (n - 1)
    for a in monos:
        for b in monos:
            c = lex_compare(a, b)
            assert (c == 0) == (a == b)
            assert lex_compare(b, a) == -c
    for a, b in zip(monos, monos[1:]):
        assert lex_compare(a, b) == -1


def test_poly_examples():
    p = x(1) + x(2).scale(3)
    assert p + Polynomial.zero(2) == p
    assert poly_mul(x(1) + x(2), x(1) - x(2)) == x(1) * x(1) - x(2) * x(2)
    # det [[x1, x2], [0, x1]] expanded by hand
    det = poly_add(poly_mul(x(1), x(1)), poly_scale(poly_mul(x(2), Polynomial.zero(2)), -1))
    assert det == Polynomial.monomial((2, 0))


def test_poly_canonical_form():
    p = x(1) - x(1)
    assert p.is_zero() and p == 0 and len(p) == 0
    assert Polynomial(2, [((1, 0), 1), ((1, 0), -1)]).terms == {}
    assert (x(1) * 2).coeff((1, 0)) == 2


def test_homogeneity():
    assert (x(1) * x(2) + x(2) * x(2)).is_homogeneous()
    assert not (x(1) + x(1) * x(2)).is_homogeneous()


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        x(1, 2) + x(1, 3)


def test_str():
    assert str(x(1) * x(1) - x(2)) in {"-x2 + x1^2", "x1^2 - x2"}


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_poly = st.lists(
    st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)), coeffs),
    max_size=5,
).map(lambda terms: Polynomial(3, terms))


@settings(max_examples=60, deadline=None)
@given(small_poly, small_poly, small_poly)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == Polynomial.zero(3)


def test_exact_rank_rational_entries():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]
    assert exact_rank(rows) == 1
    assert exact_rank([[1, 0], [0, Fraction(1, 7)]]) == 2

from fractions import Fraction
from math import ceil, factorial, prod

import pytest

from dualfsig.exactalg import binomial
from dualfsig.errors import GuardError
from dualfsig.frobenius import FrobeniusParams, decompose_roots
from dualfsig.signature import (
    binomial_sum_form,
    closed_form_prop,
    closed_form_thm,
    convergence_table,
    f_signature_estimate,
    lower_bound,
    signature_report,
    surjection_chain,
    upper_bound,
)
from dualfsig.veronese import VeroneseContext, canonical_class

from conftest import grid_points


def test_chain_base_cases():
    ctx = VeroneseContext(2, 3)  # k = 1
    chain = surjection_chain(ctx)
    assert chain.k == 1
    assert (chain[1].e, chain[1].f) == (1, 1)
    assert (chain[0].e, chain[0].f) == (2, 1)


def test_chain_n3_k2():
    chain = surjection_chain(VeroneseContext(3, 5))
    assert chain.k == 2
    assert (chain[0].e, chain[0].f) == (12, 2)
    assert chain[0].ratio == Fraction(1, 6) == Fraction(binomial(2, 2), binomial(4, 2))


def test_chain_identities_exhaustive():
    for n in range(1, 11):
        for d in range(1, 31):
            chain = surjection_chain(VeroneseContext(n, d))
            k = chain.k
            for link in chain.links:
                i = link.i
                assert link.e == prod(n + j for j in range(i, k))
                assert link.f == factorial(k) // factorial(i)
                assert link.ratio == Fraction(binomial(n + i - 1, n - 1), binomial(n + k - 1, n - 1))
            if k >= 1:
                assert (chain[k - 1].e, chain[k - 1].f) == (n + k - 1, k)


def test_bound_examples():
    params = FrobeniusParams.of(2, 2, 3, 1)
    assert upper_bound(params) == 5
    assert lower_bound(params) == 5
    assert f_signature_estimate(params) == Fraction(5, 9)
    for e in (1, 2, 3):
        params = FrobeniusParams.of(3, 1, 2, e)
        assert upper_bound(params) == lower_bound(params) == params.rank
        assert f_signature_estimate(params) == 1


def test_upper_bound_n2_d2_p3_tends_to_half():
    params = FrobeniusParams.of(2, 2, 3, 8)
    assert abs(upper_bound(params) / params.rank - Fraction(1, 2)) <= Fraction(2 * 2, params.rank)


def test_closed_forms():
    for n in range(1, 8):
        ctx = VeroneseContext(n, n)
        assert closed_form_prop(ctx) == closed_form_thm(ctx) == Fraction(1, n)
    assert closed_form_prop(VeroneseContext(2, 3)) == Fraction(1, 2)
    assert closed_form_thm(VeroneseContext(2, 3)) == Fraction(2, 3)
    assert closed_form_prop(VeroneseContext(3, 2)) == Fraction(2, 3)
    assert closed_form_thm(VeroneseContext(3, 2)) == Fraction(1, 2)


def test_closed_form_binomial_identity():
    for n in range(1, 51):
        for d in range(1, 51):
            ctx = VeroneseContext(n, d)
            k = canonical_class(ctx)
            assert closed_form_prop(ctx) == binomial_sum_form(ctx) == Fraction(n + k, d * n)
            assert closed_form_prop(ctx) == Fraction(ceil(Fraction(n, d)), n)


def test_lower_never_exceeds_upper():
    for n, d, p, e in grid_points(10**9):
        params = FrobeniusParams.of(n, d, p, e)
        assert lower_bound(params) <= upper_bound(params)


def test_k_zero_bounds_coincide():
    for n, d, p, e in grid_points(10**9):
        ctx = VeroneseContext(n, d)
        if canonical_class(ctx) != 0:
            continue
        params = FrobeniusParams(ctx, p, e)
        n0 = decompose_roots(params, 0)[0]
        assert upper_bound(params) == lower_bound(params) == n0


def test_report_invariants():
    for n, d, p, e in grid_points(10**7):
        r = signature_report(FrobeniusParams.of(n, d, p, e))
        assert 0 <= r.lower_normalized <= r.upper_normalized <= 1
        assert r.closed_forms_agree == (r.closed_form_prop == r.closed_form_thm)


def test_convergence_table_bracketing():
    for n, d, p in [(2, 3, 7), (3, 5, 2), (4, 3, 5), (3, 2, 3)]:
        ctx = VeroneseContext(n, d)
        prop = closed_form_prop(ctx)
        for row in convergence_table(ctx, p, 4):
            slack = Fraction(d, row.rank)
            assert row.lower_normalized <= prop + slack
            assert row.upper_normalized >= prop - slack


def test_convergence_table_d1_rows():
    for row in convergence_table(VeroneseContext(3, 1), 5, 3):
        assert row.lower_bound_N == row.upper_bound_N == row.rank


def test_convergence_n2_d3_p7():
    table = convergence_table(VeroneseContext(2, 3), 7, 4)
    last = table[-1]
    assert abs(last.upper_normalized - Fraction(1, 2)) < Fraction(1, 1000)
    assert abs(last.lower_normalized - Fraction(1, 2)) < Fraction(1, 1000)
    assert not last.closed_forms_agree


def test_table_errors():
    with pytest.raises(GuardError):
        convergence_table(VeroneseContext(4, 3), 7, 40, max_rank=10**9)
    with pytest.raises(ValueError):
        convergence_table(VeroneseContext(2, 4), 2, 3)
    with pytest.raises(ValueError):
        convergence_table(VeroneseContext(2, 3), 2, 0)

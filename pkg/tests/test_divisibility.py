"""Cyclotomic machinery and divisibility checks for the q-polynomials."""

import random

import pytest

from altdes.divisibility import (
    Factorization,
    binomial_criterion,
    build_Ev,
    build_Gn,
    check_pochhammer_orders,
    check_qj_parity,
    check_specialized_recursion,
    check_thm42,
    cyclotomic,
    extract_Ehat,
    order_of_factor,
    thm411_bijection_check,
    verify_conj410,
)
from altdes.oracle import stat_multiset
from altdes.polynomials import IntPoly, NotDivisible, one_plus_pow, q_pochhammer
from altdes.recurrences import euler_numbers, faa_di_bruno_altmaj

rng = random.Random(99)


def test_cyclotomic_products():
    # x^n - 1 factors into the cyclotomics of the divisors of n
    for n in range(1, 31):
        prod = IntPoly.one()
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == IntPoly.monomial(n, 1) - IntPoly.one()
    assert cyclotomic(1) == IntPoly((-1, 1))
    assert cyclotomic(2) == IntPoly((1, 1))
    for p in (2, 3, 5, 7, 11):
        assert cyclotomic(p) == IntPoly((1,) * p)
    assert min(cyclotomic(105)) == -2  # first coefficient outside {-1,0,1}


def test_build_gn_methods_and_values():
    for n in range(1, 41):
        assert build_Gn(n, "product") == build_Gn(n, "cyclotomic")
    assert build_Gn(1) == IntPoly.one()
    assert build_Gn(2) == one_plus_pow(1)
    assert build_Gn(8) == one_plus_pow(1) ** 3 * one_plus_pow(2) ** 2 \
        * one_plus_pow(3) * one_plus_pow(4)
    with pytest.raises(ValueError):
        build_Gn(3, "table")


def test_build_ev_and_product_identity():
    assert build_Ev(1) == IntPoly((1, 1))
    assert build_Ev(2) == IntPoly((1, 1, 1, 1))
    assert build_Ev(6) == one_plus_pow(6) * one_plus_pow(3)
    for n in range(1, 9):
        prod = IntPoly.one()
        for k in range(1, n + 1):
            prod = prod * build_Ev(k)
        assert build_Gn(2 * n) == prod
        assert build_Gn(2 * n + 1) == prod


def test_order_of_factor():
    for _ in range(100):
        m = rng.randint(1, 4)
        r = rng.randint(0, 4)
        extra = IntPoly([rng.randint(-4, 4) for _ in range(5)] + [1])
        f = one_plus_pow(m) ** r * extra
        assert order_of_factor(f, m) >= r
    assert order_of_factor(q_pochhammer(4), 1) == 2
    assert order_of_factor(IntPoly((1, 1)) ** 3, 1) == 3
    assert order_of_factor(IntPoly((1, 2)), 1) == 0


def test_extract_ehat_identity_and_verdicts():
    E = euler_numbers(13)
    for n in range(2, 13):
        f = extract_Ehat(n)
        assert isinstance(f, Factorization)
        assert f.g_n * f.e_hat == faa_di_bruno_altmaj(n)
        assert f.verdicts.e_hat_palindromic
        assert f.verdicts.constant_term_is_euler
        assert f.e_hat[0] == E[n]
        assert extract_Ehat(n, source="quadratic").e_hat == f.e_hat


def test_extract_ehat_printed_values():
    assert extract_Ehat(3).e_hat == IntPoly((2, -1, 2))
    assert extract_Ehat(6).e_hat == IntPoly((61, -87, 66, -82, 129, -82, 66, -87, 61))


def test_check_thm42_and_orders():
    for n in range(2, 17):
        ok = check_thm42(n)
        assert ok.ok, ok.witness
    with pytest.raises(ValueError):
        check_thm42(1)
    for n in range(1, 19):
        ok = check_pochhammer_orders(n)
        assert ok.ok, ok.witness


def test_parity_checks():
    for n in range(1, 11):
        for j in range(5):
            ok = check_qj_parity(n, j)
            assert ok.ok, ok.witness
            if j:
                ok2 = check_specialized_recursion(n, j)
                assert ok2.ok, ok2.witness


def test_binomial_criterion_edges():
    assert binomial_criterion({0: 2}, 1, 1) is False
    assert binomial_criterion({0: 1, 1: 1}, 1, 1) is True
    assert binomial_criterion(stat_multiset(4, "altmaj"), 1, 2) is True
    assert binomial_criterion(stat_multiset(4, "altmaj"), 2, 1) is True
    with pytest.raises(ValueError):
        binomial_criterion({0: 1, 1: 1}, 1, 0)


def test_verify_conj410_small():
    for n in range(1, 9):
        ok = verify_conj410(n)
        assert ok.ok, ok.witness


def test_thm411_bijection():
    for n in range(2, 9):
        for m in range(1, n // 2 + 1):
            ok = thm411_bijection_check(n, m)
            assert ok.ok, ok.witness
    with pytest.raises(ValueError):
        thm411_bijection_check(5, 3)


def test_not_divisible_surfaces():
    # dividing out a factor the polynomial does not have must raise
    with pytest.raises(NotDivisible):
        from altdes.polynomials import exact_div
        exact_div(IntPoly((1, 0, 1)), one_plus_pow(1) ** 2)

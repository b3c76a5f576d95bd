"""Divisibility structure of the alternating major-index polynomials.

The generating function of altmaj over S_n factors as G_n times a
palindromic cofactor whose constant term is the zigzag number E_n,
where

    G_n = prod_{k>=1} prod_{i=1}^{floor(n/2^k)} (1 + q^i).

This module builds G_n two ways (direct product and cyclotomic
product), extracts the cofactor by exact division, measures orders of
(1+q^m) factors, and hosts the balanced-binomial-sum divisibility
criterion together with its prefix-reversal bijection witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Mapping, NamedTuple

import numpy as np

from . import oracle
from .oracle import StatMultiset
from .polynomials import (
    IntPoly,
    exact_div,
    one_plus_pow,
    q_pochhammer,
    shape_predicates,
)
from .recurrences import (
    alt_at_t_qpow,
    euler_numbers,
    faa_di_bruno_altmaj,
    quadratic_tq,
    specialized_recursion_check,
)
from .reporting import CheckResult


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPoly:
    """The k-th cyclotomic polynomial, by exact division of x^k - 1
    through the lower ones.

    >>> cyclotomic(6).coeffs
    (1, -1, 1)
    """
    if k < 1:
        raise ValueError("k must be positive")
    out = IntPoly((-1,) + (0,) * (k - 1) + (1,))
    for d in range(1, k):
        if k % d == 0:
            out = exact_div(out, cyclotomic(d))
    return out


def build_Gn(n: int, method: str = "product") -> IntPoly:
    """G_n as the double product over (1+q^i), or equivalently as
    prod_m Phi_2m(q)^floor(n/2m).

    >>> build_Gn(4).coeffs == (one_plus_pow(1)**2 * one_plus_pow(2)).coeffs
    True
    """
    if n < 1:
        raise ValueError("n must be positive")
    if method == "product":
        out = IntPoly.one()
        k = 1
        while n >> k:
            for i in range(1, (n >> k) + 1):
                out = out * one_plus_pow(i)
            k += 1
        return out
    if method == "cyclotomic":
        out = IntPoly.one()
        for m in range(1, n // 2 + 1):
            out = out * cyclotomic(2 * m) ** (n // (2 * m))
        return out
    raise ValueError(f"unknown method {method!r}")


def build_Ev(k: int) -> IntPoly:
    """Foata's factor Ev_k = prod_{j=0}^{l} (1 + q^(2^j m)) for
    k = 2^l m with m odd; cross-checked against prod_{d|k} Phi_2d.

    >>> build_Ev(2).coeffs
    (1, 1, 1, 1)
    """
    if k < 1:
        raise ValueError("k must be positive")
    direct = IntPoly.one()
    t = k
    direct = direct * one_plus_pow(t)
    while t % 2 == 0:
        t //= 2
        direct = direct * one_plus_pow(t)
    via_cyclotomic = IntPoly.one()
    for d in range(1, k + 1):
        if k % d == 0:
            via_cyclotomic = via_cyclotomic * cyclotomic(2 * d)
    if direct != via_cyclotomic:
        raise ArithmeticError(f"the two product forms disagree at k={k}")
    return direct


def order_of_factor(f: IntPoly, m: int) -> int:
    """Largest r with (1+q^m)^r dividing f; 0 for coprime inputs.

    >>> order_of_factor(q_pochhammer(4), 1)
    2
    """
    if not f:
        raise ValueError("order of the zero polynomial is undefined")
    if m < 1:
        raise ValueError("m must be positive")
    order = 0
    while True:
        quot, exact = f.div_binomial(m, +1)
        if not exact:
            return order
        f = quot
        order += 1


class FactorVerdicts(NamedTuple):
    e_hat_palindromic: bool
    constant_term_is_euler: bool


@dataclass(frozen=True)
class Factorization:
    """Exact split of the altmaj generating polynomial as g_n * e_hat."""

    n: int
    g_n: IntPoly
    e_hat: IntPoly
    verdicts: FactorVerdicts


def extract_Ehat(n: int, source: str = "faa") -> Factorization:
    """Divide the altmaj polynomial by G_n and report whether the
    cofactor is palindromic with constant term E_n.

    NotDivisible from the division would falsify the factorization
    claim; it propagates so callers can record the finding.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if source == "faa":
        alt1q = faa_di_bruno_altmaj(n)
    elif source == "quadratic":
        alt1q = quadratic_tq(n).at_t1()
    else:
        raise ValueError(f"unknown source {source!r}")
    g = build_Gn(n)
    e_hat = exact_div(alt1q, g)
    palindromic = shape_predicates(e_hat).palindromic_center is not None
    constant_ok = e_hat[0] == euler_numbers(n)[n]
    return Factorization(n, g, e_hat, FactorVerdicts(palindromic, constant_ok))


def check_thm42(n: int) -> CheckResult:
    """(1+q^m)^floor(n/2m) divides the altmaj polynomial for every
    1 <= m <= n/2 (higher m give empty requirements)."""
    if n < 2:
        raise ValueError("need n >= 2")
    f = faa_di_bruno_altmaj(n)
    for m in range(1, n // 2 + 1):
        need = n // (2 * m)
        got = order_of_factor(f, m)
        if got < need:
            return CheckResult.failed(f"n={n}, m={m}: order {got} < {need}")
    return CheckResult.passed()


def check_qj_parity(n: int, j: int) -> CheckResult:
    """(1+q)-divisibility of the t -> q^j specialization: exponent
    floor(n/2), dropping to floor((n-1)/2) when n is even and j odd."""
    expected = (n - 1) // 2 if (n % 2 == 0 and j % 2 == 1) else n // 2
    if expected == 0:
        return CheckResult.passed()
    got = order_of_factor(alt_at_t_qpow(n, j), 1)
    if got < expected:
        return CheckResult.failed(f"n={n}, j={j}: (1+q)-order {got} < {expected}")
    return CheckResult.passed()


def check_specialized_recursion(n: int, j: int) -> CheckResult:
    """The doubled quadratic recursion survives t -> q^j intact."""
    return specialized_recursion_check(n, j)


def check_pochhammer_orders(n: int) -> CheckResult:
    """order of (1+q^m) in (q;q)_n equals floor(n/2m) exactly, for
    every 1 <= m <= n."""
    f = q_pochhammer(n)
    for m in range(1, n + 1):
        got = order_of_factor(f, m)
        if got != n // (2 * m):
            return CheckResult.failed(f"n={n}, m={m}: order {got} != {n // (2 * m)}")
    return CheckResult.passed()


def binomial_criterion(ms: StatMultiset | Mapping[int, int], m: int, r: int) -> bool:
    """Balanced binomial sums: for every residue l mod m and every
    0 <= j < r, the sum of C(value, j) over the class l (mod 2m)
    equals the sum over the class l+m (mod 2m).

    Sufficient for (1+q^m)^r dividing the generating polynomial of the
    multiset; the converse is not claimed.
    """
    if m < 1 or r < 1:
        raise ValueError("m and r must be positive")
    counts = ms.values if isinstance(ms, StatMultiset) else dict(ms)
    mod = 2 * m
    for j in range(r):
        sums = [0] * mod
        for v, c in counts.items():
            sums[v % mod] += c * comb(v, j)
        if any(sums[l] != sums[l + m] for l in range(m)):
            return False
    return True


def verify_conj410(
    n: int, *, brute_max: int | None = None, jobs: int = 1
) -> CheckResult:
    """Run the binomial criterion on the altmaj multiset of S_n with
    r = floor(n/2m) for every 1 <= m <= n/2, and cross-check that the
    criterion's divisibility conclusion really holds."""
    ms = oracle.stat_multiset(n, "altmaj", brute_max=brute_max, jobs=jobs)
    poly = ms.polynomial()
    for m in range(1, n // 2 + 1):
        r = n // (2 * m)
        if not binomial_criterion(ms, m, r):
            return CheckResult.failed(f"n={n}, m={m}: binomial sums unbalanced")
        if order_of_factor(poly, m) < r:
            return CheckResult.failed(
                f"n={n}, m={m}: criterion held but (1+q^{m})^{r} does not divide"
            )
    return CheckResult.passed()


def thm411_bijection_check(
    n: int, m: int, *, brute_max: int | None = None
) -> CheckResult:
    """Reversing the first 2m letters is an involution on S_n that
    shifts altmaj by m mod 2m; consequently the altmaj residue classes
    l and l+m (mod 2m) are equinumerous."""
    if m < 1 or 2 * m > n:
        raise ValueError("need 1 <= 2m <= n")
    oracle._guard(n, brute_max)
    mod = 2 * m
    class_sizes = np.zeros(mod, dtype=np.int64)
    for P in oracle.iter_perm_arrays(n):
        Q = np.concatenate([P[:, mod - 1 :: -1], P[:, mod:]], axis=1)
        again = np.concatenate([Q[:, mod - 1 :: -1], Q[:, mod:]], axis=1)
        if not np.array_equal(again, P):
            return CheckResult.failed(f"n={n}, m={m}: prefix reversal not an involution")
        am = oracle._stat_vector(P, "altmaj")
        am2 = oracle._stat_vector(Q, "altmaj")
        off = (am2 - am - m) % mod
        if off.any():
            row = int(np.flatnonzero(off)[0])
            w = tuple(int(x) + 1 for x in P[row])
            return CheckResult.failed(f"n={n}, m={m}: shift fails at {w}")
        class_sizes += np.bincount(am % mod, minlength=mod)
    if any(class_sizes[l] != class_sizes[l + m] for l in range(m)):
        return CheckResult.failed(f"n={n}, m={m}: residue classes unbalanced")
    return CheckResult.passed()

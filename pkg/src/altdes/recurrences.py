"""Recurrences and generating-function identities for alternating
descent polynomials.

The polynomial family A_n(t) = sum over S_n of t^altdes and its
refinement A_n(t, q) = sum t^altdes q^altmaj are computed here by
recursion only; the oracle module recomputes the same objects by
enumeration so that each route checks the other.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb, factorial

from .polynomials import (
    BiPolyTQ,
    IntPoly,
    TruncSeries,
    one_minus_pow,
    one_plus_pow,
)
from .reporting import CheckResult


class ParityViolation(ArithmeticError):
    """A doubled recurrence produced an odd coefficient."""


class DenominatorNotCleared(ArithmeticError):
    """A rational function in q failed to reduce to a polynomial."""


# ---------------------------------------------------------------------------
# five-term coefficient recurrence

_alt_rows: list[tuple[int, ...]] = [(1,), (1,)]  # rows for n = 0, 1


def five_term(n: int) -> IntPoly:
    """A_n(t) from the five-term recurrence

        2 A_{n+1,k} = (k+1)(A_{n,k+1} + A_{n,k-1})
                      + (n-k+1)(A_{n,k} + A_{n,k-2}),

    with A_1 = 1.  Out-of-range coefficients read as zero.

    >>> five_term(5).coeffs
    (16, 26, 36, 26, 16)
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_alt_rows) <= n:
        m = len(_alt_rows) - 1  # extending row m to m+1
        row = _alt_rows[m]

        def at(row, i):
            return row[i] if 0 <= i < len(row) else 0

        nxt = []
        for k in range(m + 1):
            val = (k + 1) * (at(row, k + 1) + at(row, k - 1)) + (m - k + 1) * (
                at(row, k) + at(row, k - 2)
            )
            if val % 2:
                raise ParityViolation(f"odd total at n={m + 1}, k={k}")
            nxt.append(val // 2)
        _alt_rows.append(tuple(nxt))
    return IntPoly(_alt_rows[n])


def euler_numbers(upto: int) -> tuple[int, ...]:
    """E_0..E_upto, taken as the leading coefficients A_{n,n-1}.

    These are the zigzag numbers 1, 1, 1, 2, 5, 16, 61, ... counting
    down-up permutations; all positive.
    """
    five_term(max(upto, 1))
    out = [1]
    for n in range(1, upto + 1):
        out.append(_alt_rows[n][n - 1])
    return tuple(out)


def chebikin_check(n: int) -> CheckResult:
    """Convolution identity linking consecutive rows:

        sum_{i,j} C(n,i) A_{i,j} A_{n-i,k-j}
            = (n+1-k) A_{n,k} + (k+1) A_{n,k+1},

    for 0 <= k <= n-1, with A_0 = 1 and absent coefficients zero.
    """
    five_term(n)
    rows = _alt_rows

    def at(i, j):
        r = rows[i]
        return r[j] if 0 <= j < len(r) else 0

    for k in range(n):
        lhs = 0
        for i in range(n + 1):
            for j in range(k + 1):
                lhs += comb(n, i) * at(i, j) * at(n - i, k - j)
        rhs = (n + 1 - k) * at(n, k) + (k + 1) * at(n, k + 1)
        if lhs != rhs:
            return CheckResult.failed(f"n={n}, k={k}: {lhs} != {rhs}")
    return CheckResult.passed()


# ---------------------------------------------------------------------------
# bivariate quadratic recursion

_tq_rows: list[dict[int, int]] = [{0: 1}, {0: 1}]  # encoded dicts, n = 0, 1
_TQ_SHIFT = 24


def _tq_shift(d: dict[int, int], j: int) -> dict[int, int]:
    if j == 0:
        return d
    return {k + ((k >> _TQ_SHIFT) * j): c for k, c in d.items()}


def quadratic_tq(n: int) -> BiPolyTQ:
    """A_n(t, q) from the doubled product recursion

        2 A_{n+1}(t,q) = (1+tq) A_n(tq,q) + (1+tq^n) A_n(t,q)
          + sum_{i=1}^{n-1} (1+t^2 q^(2i+1)) C(n,i) A_i(t,q) A_{n-i}(tq^(i+1),q),

    with A_1 = 1.  Every doubled coefficient must be even.

    >>> quadratic_tq(3).terms()
    [(0, 0, 2), (1, 1, 1), (1, 2, 1), (2, 3, 2)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_tq_rows) <= n:
        m = len(_tq_rows) - 1
        total: dict[int, int] = {}

        def acc(d: dict[int, int], extra_key: int = 0) -> None:
            for k, c in d.items():
                k2 = k + extra_key
                total[k2] = total.get(k2, 0) + c

        shifted = _tq_shift(_tq_rows[m], 1)
        acc(shifted)
        acc(shifted, (1 << _TQ_SHIFT) + 1)  # times tq
        acc(_tq_rows[m])
        acc(_tq_rows[m], (1 << _TQ_SHIFT) + m)  # times tq^n
        for i in range(1, m):
            left = _tq_rows[i]
            right = _tq_shift(_tq_rows[m - i], i + 1)
            prod: dict[int, int] = {}
            get = prod.get
            for k1, c1 in left.items():
                for k2, c2 in right.items():
                    k = k1 + k2
                    prod[k] = get(k, 0) + c1 * c2
            cni = comb(m, i)
            tt = (2 << _TQ_SHIFT) + 2 * i + 1  # times t^2 q^(2i+1)
            for k, c in prod.items():
                c *= cni
                total[k] = total.get(k, 0) + c
                total[k + tt] = total.get(k + tt, 0) + c
        nxt: dict[int, int] = {}
        for k, c in total.items():
            if c % 2:
                te, qe = k >> _TQ_SHIFT, k & ((1 << _TQ_SHIFT) - 1)
                raise ParityViolation(f"odd total at n={m + 1}, t^{te} q^{qe}")
            if c:
                nxt[k] = c // 2
        _tq_rows.append(nxt)
    return BiPolyTQ._wrap(dict(_tq_rows[n]))


def alt_at_t_qpow(n: int, j: int) -> IntPoly:
    """A_n(q^j, q) as a univariate polynomial in q."""
    return quadratic_tq(n).at_t_qpow(j)


def specialized_recursion_check(n: int, j: int) -> CheckResult:
    """The quadratic recursion survives the substitution t -> q^j:

        2 A_{n+1}(q^j, q) = (1+q^(j+1)) A_n(q^(j+1), q)
          + (1+q^(n+j)) A_n(q^j, q)
          + sum_i (1+q^(2i+2j+1)) C(n,i) A_i(q^j,q) A_{n-i}(q^(i+j+1),q).

    Exercises the univariate specialization path end to end.
    """
    lhs = 2 * alt_at_t_qpow(n + 1, j)
    rhs = one_plus_pow(j + 1) * alt_at_t_qpow(n, j + 1)
    rhs = rhs + one_plus_pow(n + j) * alt_at_t_qpow(n, j)
    for i in range(1, n):
        rhs = rhs + comb(n, i) * one_plus_pow(2 * i + 2 * j + 1) * (
            alt_at_t_qpow(i, j) * alt_at_t_qpow(n - i, i + j + 1)
        )
    if lhs != rhs:
        return CheckResult.failed(f"n={n}, j={j}")
    return CheckResult.passed()


# ---------------------------------------------------------------------------
# Simsun descent polynomials

def simsun_rec(n: int, method: str = "derivative") -> IntPoly:
    """R_n(x), the Simsun descent polynomial.

    derivative:  R_n = ((n-1)x + 1) R_{n-1} + x(1-2x) R'_{n-1}
    quadratic:   R_{n+1} = R_n + x sum_{i=1}^n C(n,i) R_{i-1} R_{n-i}

    >>> simsun_rec(3).coeffs
    (1, 4)
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "derivative":
        r = IntPoly.one()
        for m in range(1, n + 1):
            r = IntPoly((1, m - 1)) * r + IntPoly((0, 1, -2)) * r.derivative()
        return r
    if method == "quadratic":
        rows = [IntPoly.one()]
        for m in range(n):
            s = IntPoly()
            for i in range(1, m + 1):
                s = s + comb(m, i) * rows[i - 1] * rows[m - i]
            rows.append(rows[m] + IntPoly((0, 1)) * s)
        return rows[n]
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# gamma vector recursion

def gamma_rec(n: int) -> IntPoly:
    """a_n(x) = sum_k a(n,k) x^k from

        a_{n+1} = (n + (n-1)x) a_n - (1+x)(1+2x) a_n',   a_1 = 1.

    >>> gamma_rec(5).coeffs
    (16, 19, 4)
    """
    if n < 1:
        raise ValueError("n must be positive")
    a = IntPoly.one()
    for m in range(1, n):
        a = IntPoly((m, m - 1)) * a - IntPoly((1, 3, 2)) * a.derivative()
    return a


# ---------------------------------------------------------------------------
# exponential generating function identity

def egf_check(order: int) -> CheckResult:
    """Compare 1 + sum_n t A_n(t) z^n / n! with the closed form

        (1-t) / (1 - t(sec((1-t)z) + tan((1-t)z)))

    through z^order.  The right side is expanded as the geometric series
    of W = sum_{m>=1} t E_m (1-t)^(m-1) z^m / m!, which keeps every
    z-coefficient inside Z[t] scaled by an integer.
    """
    E = euler_numbers(order)
    one_minus_t = IntPoly((1, -1))
    w = TruncSeries.from_terms(
        order,
        (
            (m, IntPoly((0, E[m])) * one_minus_t ** (m - 1), factorial(m))
            for m in range(1, order + 1)
        ),
    )
    rhs = TruncSeries.one(order)
    for _ in range(order):
        rhs = TruncSeries.one(order) + w * rhs
    lhs = TruncSeries.from_terms(
        order,
        ((m, IntPoly((0,) + five_term(m).coeffs), factorial(m)) for m in range(1, order + 1)),
    )
    lhs = TruncSeries.one(order) + lhs
    for m in range(order + 1):
        if lhs.coefficient(m) != rhs.coefficient(m):
            return CheckResult.failed(f"z^{m} coefficients differ")
    return CheckResult.passed()


# ---------------------------------------------------------------------------
# derivative oracle for A_n(1, q)

@dataclass(frozen=True)
class RationalFnQ:
    """numerator / prod (1-q^k)^mult, the product running over the
    multiset denominator_exponents."""

    numerator: IntPoly
    denominator_exponents: tuple[tuple[int, int], ...]  # (k, mult), sorted

    @classmethod
    def from_counter(cls, num: IntPoly, den: Counter) -> "RationalFnQ":
        return cls(num, tuple(sorted((k, m) for k, m in den.items() if m)))

    def counter(self) -> Counter:
        return Counter(dict(self.denominator_exponents))


def _den_product(den: Counter) -> IntPoly:
    out = IntPoly.one()
    for k, mult in den.items():
        for _ in range(mult):
            out = out * one_minus_pow(k)
    return out


def _reduce(num: IntPoly, den: Counter) -> tuple[IntPoly, Counter]:
    den = Counter({k: m for k, m in den.items() if m})
    for k in sorted(den, reverse=True):
        while den[k]:
            quot, exact = num.div_binomial(k, -1)
            if not exact:
                break
            num = quot
            den[k] -= 1
    return num, Counter({k: m for k, m in den.items() if m})


def faa_di_bruno_derivatives(n: int) -> RationalFnQ:
    """F^{(n)}(0) for F(z) = prod_{j>=0} (sec(z q^j) + tan(z q^j)),
    as an exact rational function of q.

    The logarithmic derivative of F collapses to the geometric sums
    h_r = sec^{(r)}(0) / (1 - q^{r+1}), so the derivatives follow the
    Leibniz convolution f_{m+1} = sum_k C(m,k) f_k h_{m-k}.
    """
    E = euler_numbers(max(n, 1))
    fs: list[tuple[IntPoly, Counter]] = [(IntPoly.one(), Counter())]
    for m in range(n):
        pieces: list[tuple[IntPoly, Counter]] = []
        for k in range(m + 1):
            r = m - k
            if r % 2:
                continue  # odd derivatives of sec vanish at 0
            fn, fd = fs[k]
            td = fd.copy()
            td[r + 1] += 1
            pieces.append((fn * (comb(m, k) * E[r]), td))
        den: Counter = Counter()
        for _, td in pieces:
            for key, mult in td.items():
                if mult > den[key]:
                    den[key] = mult
        num = IntPoly()
        for tn, td in pieces:
            missing = Counter({k: den[k] - td.get(k, 0) for k in den})
            num = num + tn * _den_product(missing)
        fs.append(_reduce(num, den))
    return RationalFnQ.from_counter(*fs[n])


def faa_di_bruno_altmaj(n: int) -> IntPoly:
    """A_n(1, q) = F^{(n)}(0) (q;q)_n, cleared to a polynomial.

    >>> faa_di_bruno_altmaj(3).coeffs
    (2, 1, 1, 2)
    """
    if n < 1:
        raise ValueError("n must be positive")
    frac = faa_di_bruno_derivatives(n)
    num = frac.numerator
    den = frac.counter()
    for i in range(1, n + 1):
        if den[i] > 0:
            den[i] -= 1
        else:
            num = num * one_minus_pow(i)
    for k, mult in den.items():
        for _ in range(mult):
            num, exact = num.div_binomial(k, -1)
            if not exact:
                raise DenominatorNotCleared(
                    f"(1-q^{k}) does not divide the cleared numerator at n={n}"
                )
    return num

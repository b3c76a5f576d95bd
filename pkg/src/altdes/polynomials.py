"""Exact polynomial arithmetic over the integers.

Four carriers, all with arbitrary-precision integer coefficients:

* ``IntPoly``      dense univariate polynomials,
* ``BiPolyTQ``     sparse bivariate polynomials (slots named t and q,
                   reused as (s, t) for two-sided statistics),
* ``NCPoly``       noncommutative polynomials on words over a two
                   letter alphabet (descent words, cd-words),
* ``TruncSeries``  truncated power series whose coefficients are
                   univariate polynomials with an exact integer
                   denominator.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, NamedTuple


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class NotPalindromic(ValueError):
    """Raised when a gamma expansion is requested for a polynomial that
    is not palindromic about the required center."""


class NonIntegralGamma(ArithmeticError):
    """Raised when a gamma expansion would need non-integer entries."""


class IntPoly:
    """Immutable dense univariate polynomial with int coefficients.

    Coefficients are stored ascending; trailing zeros are stripped, so
    the zero polynomial is the empty tuple.

    >>> p = IntPoly([1, 2, 1])
    >>> p * p
    IntPoly((1, 4, 6, 4, 1))
    >>> p(3)
    16
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "IntPoly":
        if exp < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * exp + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, exp: int) -> int:
        if 0 <= exp < len(self.coeffs):
            return self.coeffs[exp]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"

    def __add__(self, other) -> "IntPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "IntPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            if other == 0:
                return IntPoly()
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner; works for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: "IntPoly"):
        """Long division over the integers.

        Raises NotDivisible when a leading-coefficient division is not
        exact, which cannot happen for the monic-up-to-sign divisors
        used throughout this package.
        """
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dv = len(rem) - 1, other.degree
        lead = other.coeffs[-1]
        if dd < dv:
            return IntPoly(), self
        quot = [0] * (dd - dv + 1)
        for i in range(dd - dv, -1, -1):
            c = rem[i + dv]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by {lead}")
            quot[i] = q
            for j, oc in enumerate(other.coeffs):
                rem[i + j] -= q * oc
        return IntPoly(quot), IntPoly(rem)

    def reverse(self) -> "IntPoly":
        """Coefficients reversed over 0..degree."""
        return IntPoly(tuple(reversed(self.coeffs)))

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def compose(self, other: "IntPoly") -> "IntPoly":
        """Substitution self(other(x)), by Horner."""
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + IntPoly((c,))
        return acc

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero poly)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def div_binomial(self, k: int, sign: int) -> "tuple[IntPoly, bool]":
        """Fast division by (1 + sign*x^k), sign in {+1, -1}.

        Returns (quotient, exact).  Linear time in the degree; used for
        the cyclotomic-free divisibility bookkeeping.
        """
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if k <= 0:
            raise ValueError("k must be positive")
        if not self.coeffs:
            return IntPoly(), True
        d = self.degree
        if d < k:
            return IntPoly(), False
        # (1 + s x^k) * B = A  means  a_i = b_i + s b_{i-k}
        b = list(self.coeffs)
        for i in range(k, d + 1):
            b[i] -= sign * b[i - k]
        if any(b[i] for i in range(d - k + 1, d + 1)):
            return IntPoly(), False
        return IntPoly(b[: d - k + 1]), True

    def pretty(self, var: str = "t") -> str:
        """Human-readable form, ascending powers: '16 + 26t + 36t^2'."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for exp, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            elif mag == 1:
                body = var if exp == 1 else f"{var}^{exp}"
            else:
                body = f"{mag}{var}" if exp == 1 else f"{mag}{var}^{exp}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _coerce(v) -> "IntPoly":
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly((v,)) if v else IntPoly()
    return NotImplemented


def exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """Exact quotient f/g; raises NotDivisible when the division is not
    exact over Z[x].

    >>> exact_div(IntPoly([1, 0, 0, 1]), IntPoly([1, 1]))
    IntPoly((1, -1, 1))
    """
    quot, rem = divmod(f, g)
    if rem:
        raise NotDivisible(f"remainder {rem.coeffs} is nonzero")
    return quot


def one_minus_pow(k: int) -> IntPoly:
    """1 - x^k."""
    return IntPoly((1,) + (0,) * (k - 1) + (-1,))


def one_plus_pow(k: int) -> IntPoly:
    """1 + x^k."""
    return IntPoly((1,) + (0,) * (k - 1) + (1,))


def q_pochhammer(n: int) -> IntPoly:
    """(q;q)_n = prod_{i=1..n} (1 - q^i)."""
    out = IntPoly.one()
    for i in range(1, n + 1):
        out = out * one_minus_pow(i)
    return out


def q_factorial(n: int) -> IntPoly:
    """[n]_q! = prod_{i=1..n} (1 + q + ... + q^(i-1))."""
    out = IntPoly.one()
    for i in range(1, n + 1):
        out = out * IntPoly((1,) * i)
    return out


class Shape(NamedTuple):
    palindromic_center: Fraction | None
    unimodal: bool
    log_concave: bool


def shape_predicates(f: IntPoly) -> Shape:
    """Palindromicity, unimodality, and log-concavity of a coefficient
    sequence.

    The palindromic center is reported as a Fraction when the stored
    coefficients 0..deg read the same reversed, else None.  Unimodality
    is over the full 0..deg range; log-concavity (c_i^2 >= c_{i-1} c_{i+1})
    is over the interior of the support.
    """
    cs = f.coeffs
    if not cs:
        return Shape(None, True, True)
    center = Fraction(len(cs) - 1, 2) if cs == tuple(reversed(cs)) else None
    unimodal = True
    falling = False
    for i in range(1, len(cs)):
        if cs[i] < cs[i - 1]:
            falling = True
        elif cs[i] > cs[i - 1] and falling:
            unimodal = False
            break
    lo = f.valuation()
    hi = f.degree
    log_concave = all(
        cs[i] * cs[i] >= cs[i - 1] * cs[i + 1] for i in range(lo + 1, hi)
    )
    return Shape(center, unimodal, log_concave)


class GammaVector(NamedTuple):
    """Entries a(n, k) of the expansion
    f(t) = sum_k a(n,k) (-2t)^k (1+t)^(n-1-2k)."""

    n: int
    coeffs: tuple[int, ...]

    def reconstruct(self) -> IntPoly:
        out = IntPoly()
        one_plus_t = IntPoly((1, 1))
        for k, a in enumerate(self.coeffs):
            out = out + a * IntPoly.monomial(k, (-2) ** k) * one_plus_t ** (
                self.n - 1 - 2 * k
            )
        return out

    def polynomial(self) -> IntPoly:
        """The generating polynomial sum_k a(n,k) x^k."""
        return IntPoly(self.coeffs)


def gamma_expand(f: IntPoly, n: int) -> GammaVector:
    """Expand a palindromic polynomial of center (n-1)/2 in the basis
    (-2t)^k (1+t)^(n-1-2k), 0 <= k <= (n-1)/2.

    >>> gamma_expand(IntPoly([5, 7, 7, 5]), 4).coeffs
    (5, 4)
    """
    if n < 1:
        raise ValueError("n must be positive")
    d = n - 1
    if f.degree > d:
        raise NotPalindromic(f"degree {f.degree} exceeds {d}")
    padded = f.coeffs + (0,) * (d + 1 - len(f.coeffs))
    if padded != tuple(reversed(padded)):
        raise NotPalindromic(f"not palindromic about {d}/2")
    residual = f
    one_plus_t = IntPoly((1, 1))
    out: list[int] = []
    for k in range(d // 2 + 1):
        c = residual[k]
        sign = (-2) ** k
        a, r = divmod(c, sign)
        if r:
            raise NonIntegralGamma(f"entry {k}: {c} not divisible by {sign}")
        out.append(a)
        residual = residual - c * IntPoly.monomial(k) * one_plus_t ** (d - 2 * k)
    if residual:
        raise NotPalindromic("nonzero residual after the peel")
    return GammaVector(n, tuple(out))


# ---------------------------------------------------------------------------
# bivariate polynomials

_SHIFT = 24
_MASK = (1 << _SHIFT) - 1


class BiPolyTQ:
    """Sparse bivariate polynomial, exponent pairs mapped to ints.

    The two slots are called t and q.  For two-sided descent
    polynomials the same carrier is used with slots read as (s, t).
    Internally a term t^k q^j is keyed by the single integer
    (k << 24) | j, which keeps the convolution loops fast.
    """

    __slots__ = ("_d",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] = ()):
        d: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for (k, j), c in items:
            if c == 0:
                continue
            if k < 0 or j < 0 or j > _MASK:
                raise ValueError(f"bad exponent pair ({k}, {j})")
            d[(k << _SHIFT) | j] = c
        self._d = d

    @classmethod
    def _wrap(cls, d: dict[int, int]) -> "BiPolyTQ":
        obj = cls.__new__(cls)
        obj._d = d
        return obj

    @classmethod
    def zero(cls) -> "BiPolyTQ":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "BiPolyTQ":
        return cls._wrap({0: 1})

    @classmethod
    def term(cls, k: int, j: int, c: int = 1) -> "BiPolyTQ":
        return cls({(k, j): c})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return {(k >> _SHIFT, k & _MASK): c for k, c in self._d.items()}

    def terms(self) -> list[tuple[int, int, int]]:
        """Sorted (t_exp, q_exp, coeff) triples."""
        return sorted((k >> _SHIFT, k & _MASK, c) for k, c in self._d.items())

    def __bool__(self) -> bool:
        return bool(self._d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPolyTQ):
            return NotImplemented
        return self._d == other._d

    def __repr__(self) -> str:
        return f"BiPolyTQ({self.coeffs!r})"

    def __add__(self, other: "BiPolyTQ") -> "BiPolyTQ":
        if not isinstance(other, BiPolyTQ):
            return NotImplemented
        out = dict(self._d)
        for k, c in other._d.items():
            nc = out.get(k, 0) + c
            if nc:
                out[k] = nc
            else:
                out.pop(k, None)
        return BiPolyTQ._wrap(out)

    def __sub__(self, other: "BiPolyTQ") -> "BiPolyTQ":
        if not isinstance(other, BiPolyTQ):
            return NotImplemented
        out = dict(self._d)
        for k, c in other._d.items():
            nc = out.get(k, 0) - c
            if nc:
                out[k] = nc
            else:
                out.pop(k, None)
        return BiPolyTQ._wrap(out)

    def __neg__(self) -> "BiPolyTQ":
        return BiPolyTQ._wrap({k: -c for k, c in self._d.items()})

    def __mul__(self, other) -> "BiPolyTQ":
        if isinstance(other, int):
            if other == 0:
                return BiPolyTQ.zero()
            return BiPolyTQ._wrap({k: c * other for k, c in self._d.items()})
        if not isinstance(other, BiPolyTQ):
            return NotImplemented
        if not self._d or not other._d:
            return BiPolyTQ.zero()
        if (self.max_q_degree() + other.max_q_degree()) > _MASK:
            raise OverflowError("q exponent overflow in product")
        out: dict[int, int] = {}
        get = out.get
        for k1, c1 in self._d.items():
            for k2, c2 in other._d.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return BiPolyTQ._wrap({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPolyTQ":
        if n < 0:
            raise ValueError("negative power")
        result = BiPolyTQ.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def max_t_degree(self) -> int:
        return max((k >> _SHIFT for k in self._d), default=-1)

    def max_q_degree(self) -> int:
        return max((k & _MASK for k in self._d), default=-1)

    def substitute_tq(self, j: int) -> "BiPolyTQ":
        """The substitution t -> t q^j (a t-graded q-shift)."""
        if j < 0:
            raise ValueError("shift must be nonnegative")
        if j == 0:
            return self
        out: dict[int, int] = {}
        for k, c in self._d.items():
            te = k >> _SHIFT
            qe = (k & _MASK) + te * j
            if qe > _MASK:
                raise OverflowError("q exponent overflow in substitution")
            out[(te << _SHIFT) | qe] = c
        return BiPolyTQ._wrap(out)

    def at_q1(self) -> IntPoly:
        """Set q = 1, leaving a polynomial in t."""
        out: dict[int, int] = {}
        for k, c in self._d.items():
            te = k >> _SHIFT
            out[te] = out.get(te, 0) + c
        if not out:
            return IntPoly()
        cs = [0] * (max(out) + 1)
        for e, c in out.items():
            cs[e] = c
        return IntPoly(cs)

    def at_t1(self) -> IntPoly:
        """Set t = 1, leaving a polynomial in q."""
        out: dict[int, int] = {}
        for k, c in self._d.items():
            qe = k & _MASK
            out[qe] = out.get(qe, 0) + c
        if not out:
            return IntPoly()
        cs = [0] * (max(out) + 1)
        for e, c in out.items():
            cs[e] = c
        return IntPoly(cs)

    def at_t_qpow(self, j: int) -> IntPoly:
        """Set t = q^j, leaving a polynomial in q."""
        if j < 0:
            raise ValueError("power must be nonnegative")
        out: dict[int, int] = {}
        for k, c in self._d.items():
            e = (k >> _SHIFT) * j + (k & _MASK)
            out[e] = out.get(e, 0) + c
        if not out:
            return IntPoly()
        cs = [0] * (max(out) + 1)
        for e, c in out.items():
            cs[e] = c
        return IntPoly(cs)

    def slice_t(self, k: int) -> IntPoly:
        """Coefficient of t^k as a polynomial in q."""
        terms = {kk & _MASK: c for kk, c in self._d.items() if (kk >> _SHIFT) == k}
        if not terms:
            return IntPoly()
        cs = [0] * (max(terms) + 1)
        for e, c in terms.items():
            cs[e] = c
        return IntPoly(cs)

    def min_t_degree(self) -> int:
        return min((k >> _SHIFT for k in self._d), default=-1)

    def swap(self) -> "BiPolyTQ":
        """Exchange the two slots."""
        return BiPolyTQ._wrap(
            {((k & _MASK) << _SHIFT) | (k >> _SHIFT): c for k, c in self._d.items()}
        )

    def total(self) -> int:
        """Sum of all coefficients (evaluation at t = q = 1)."""
        return sum(self._d.values())

    def pretty(self, tvar: str = "t", qvar: str = "q") -> str:
        if not self._d:
            return "0"
        parts: list[str] = []
        for te, qe, c in self.terms():
            mag = abs(c)
            body = ""
            if te:
                body += tvar if te == 1 else f"{tvar}^{te}"
            if qe:
                body += qvar if qe == 1 else f"{qvar}^{qe}"
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def substitute_tq(p: BiPolyTQ, j: int) -> BiPolyTQ:
    """Module-level alias for the t -> t q^j substitution."""
    return p.substitute_tq(j)


# ---------------------------------------------------------------------------
# noncommutative word polynomials

class NCPoly:
    """Polynomial in noncommuting letters; terms are string words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[str, int] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.terms: dict[str, int] = {w: c for w, c in items if c}

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls({})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls({"": 1})

    @classmethod
    def word(cls, w: str, c: int = 1) -> "NCPoly":
        return cls({w: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        inner = " + ".join(
            f"{c}*{w or '1'}" for w, c in sorted(self.terms.items())
        )
        return f"NCPoly({inner or '0'})"

    def __add__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) + c
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
        res = NCPoly.__new__(NCPoly)
        res.terms = out
        return res

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-1) * other

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, int):
            return NCPoly({w: c * other for w, c in self.terms.items()})
        if not isinstance(other, NCPoly):
            return NotImplemented
        out: dict[str, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                nc = out.get(w, 0) + c1 * c2
                if nc:
                    out[w] = nc
                else:
                    out.pop(w, None)
        res = NCPoly.__new__(NCPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def substitute(self, images: Mapping[str, "NCPoly"]) -> "NCPoly":
        """Replace each letter by a noncommutative polynomial; letters
        missing from the mapping stand for themselves."""
        out = NCPoly.zero()
        for w, c in self.terms.items():
            prod = NCPoly.one()
            for letter in w:
                prod = prod * images.get(letter, NCPoly.word(letter))
            out = out + c * prod
        return out

    def eval_commutative(self, images: Mapping[str, IntPoly]) -> IntPoly:
        """Evaluate with letters sent to commuting polynomials."""
        out = IntPoly()
        for w, c in self.terms.items():
            prod = IntPoly.one()
            for letter in w:
                prod = prod * images[letter]
            out = out + c * prod
        return out


# ---------------------------------------------------------------------------
# truncated series with exact rational polynomial coefficients

class TruncSeries:
    """Power series in z truncated at a fixed order.

    The coefficient of z^n is stored as a pair (IntPoly numerator,
    positive int denominator), kept in lowest terms.
    """

    __slots__ = ("order", "pairs")

    def __init__(self, order: int, pairs: Iterable[tuple[IntPoly, int]]):
        ps = [_norm_pair(p, d) for p, d in pairs]
        if len(ps) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        self.order = order
        self.pairs = tuple(ps)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order, [(IntPoly(), 1)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls(order, [(IntPoly.one(), 1)] + [(IntPoly(), 1)] * order)

    @classmethod
    def from_terms(
        cls, order: int, terms: Iterable[tuple[int, IntPoly, int]]
    ) -> "TruncSeries":
        pairs: list[tuple[IntPoly, int]] = [(IntPoly(), 1)] * (order + 1)
        for n, p, d in terms:
            if 0 <= n <= order:
                pairs[n] = (p, d)
        return cls(order, pairs)

    def coefficient(self, n: int) -> tuple[IntPoly, int]:
        return self.pairs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.pairs == other.pairs

    def __repr__(self) -> str:
        return f"TruncSeries(order={self.order})"

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("order mismatch")
        pairs = []
        for (p1, d1), (p2, d2) in zip(self.pairs, other.pairs):
            pairs.append((p1 * d2 + p2 * d1, d1 * d2))
        return TruncSeries(self.order, pairs)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("order mismatch")
        nums = [IntPoly() for _ in range(self.order + 1)]
        dens = [1] * (self.order + 1)
        for i, (p1, d1) in enumerate(self.pairs):
            if not p1:
                continue
            for j in range(self.order + 1 - i):
                p2, d2 = other.pairs[j]
                if not p2:
                    continue
                # accumulate p1 p2 / (d1 d2) into slot i+j
                k = i + j
                nums[k] = nums[k] * (d1 * d2) + (p1 * p2) * dens[k]
                dens[k] = dens[k] * d1 * d2
        return TruncSeries(self.order, zip(nums, dens))


def _norm_pair(p: IntPoly, d: int) -> tuple[IntPoly, int]:
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if not p:
        return (IntPoly(), 1)
    if d < 0:
        p, d = -p, -d
    g = d
    for c in p.coeffs:
        g = gcd(g, c)
        if g == 1:
            return (p, d)
    return (IntPoly(tuple(c // g for c in p.coeffs)), d // g)

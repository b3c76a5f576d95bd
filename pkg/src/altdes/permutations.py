"""Permutation statistics and transforms.

Permutations are plain tuples of distinct positive ints, usually the
word form of a member of S_n.  Positions are 1-based throughout: the
alternating descent set of w is

    {i odd : w_i > w_{i+1}}  union  {i even : w_i < w_{i+1}}.

Most functions only compare letters, so they accept arbitrary words
with distinct letters, not just permutations of 1..n.
"""

from __future__ import annotations

from itertools import permutations as _perms
from math import comb
from typing import Iterable, NamedTuple

from .reporting import CheckResult


class PrefixTooLong(ValueError):
    """Raised when a prefix reversal does not fit inside the word."""


Word = tuple[int, ...]


def as_word(seq: Iterable[int]) -> Word:
    w = tuple(seq)
    if len(set(w)) != len(w):
        raise ValueError("letters must be distinct")
    return w


def check_permutation(w: Iterable[int]) -> Word:
    """Validate that w is a permutation of 1..n and return it."""
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


class AltStats(NamedTuple):
    alt_descent_set: frozenset[int]
    altdes: int
    altmaj: int


class ClassicStats(NamedTuple):
    des: int
    maj: int
    des3: int


def alt_stats(w: Iterable[int]) -> AltStats:
    """Alternating descent set, its size, and the alternating major
    index (sum of the set).

    >>> alt_stats((9, 4, 2, 3, 5, 7, 8, 6, 1))[1:]
    (4, 18)
    """
    w = tuple(w)
    dset = []
    for i in range(1, len(w)):
        if (w[i - 1] > w[i]) == (i % 2 == 1):
            dset.append(i)
    return AltStats(frozenset(dset), len(dset), sum(dset))


def classic_stats(w: Iterable[int]) -> ClassicStats:
    """Descent number, major index, and the number of 3-descents
    (windows whose pattern is 132, 213, or 321)."""
    w = tuple(w)
    des = 0
    maj = 0
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            des += 1
            maj += i
    d3 = 0
    for i in range(len(w) - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        if a > b > c:
            d3 += 1
        elif a < b < c:
            pass
        elif a < c:
            d3 += 1
    return ClassicStats(des, maj, d3)


def complement(w: Iterable[int]) -> Word:
    """Send the l-th largest letter to the l-th smallest.

    >>> complement((3, 6, 7, 5, 2))
    (6, 3, 2, 5, 7)
    """
    w = tuple(w)
    s = sorted(w)
    m = {a: b for a, b in zip(s, reversed(s))}
    return tuple(m[x] for x in w)


def reversal(w: Iterable[int]) -> Word:
    return tuple(reversed(tuple(w)))


def inverse(w: Iterable[int]) -> Word:
    w = check_permutation(w)
    out = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        out[val - 1] = pos
    return tuple(out)


def normalize(w: Iterable[int]) -> Word:
    """Replace letters by their ranks (the standardization pattern).

    >>> normalize((3, 6, 7, 5, 2))
    (2, 4, 5, 3, 1)
    """
    w = tuple(w)
    rank = {v: i + 1 for i, v in enumerate(sorted(w))}
    return tuple(rank[x] for x in w)


def theta(w: Iterable[int]) -> Word:
    """Involution flipping altdes to n-1-altdes.

    Reversal alone does this in even length; in odd length reversal
    preserves altdes, so the complement is applied on top.  Either way
    altmaj moves by the affine rule tested in theta_check.
    """
    w = tuple(w)
    r = reversal(w)
    return r if len(w) % 2 == 0 else complement(r)


def reverse_prefix(w: Iterable[int], m: int) -> Word:
    """Reverse the first 2m letters, fixing the rest.

    >>> reverse_prefix((9, 4, 2, 3, 5, 7, 8, 6, 1), 3)
    (7, 5, 3, 2, 4, 9, 8, 6, 1)
    """
    w = tuple(w)
    if m < 1 or 2 * m > len(w):
        raise PrefixTooLong(f"2m = {2 * m} does not fit in length {len(w)}")
    return w[2 * m - 1 :: -1] + w[2 * m :]


def insertions(w: Iterable[int], j: int, kind: str) -> Word:
    """Insert a new smallest respectively largest letter into space j
    (0 <= j <= n), complementing the suffix.

    The min insertion is normalize(w_1..w_j, 0, complement(w_{j+1}..w_n));
    the max insertion keeps the prefix and places n+1 in the space.

    >>> insertions((2, 4, 3, 1, 5), 2, "min")
    (3, 5, 1, 4, 6, 2)
    >>> insertions((2, 4, 3, 1, 5), 2, "max")
    (2, 4, 6, 3, 5, 1)
    """
    w = check_permutation(w)
    n = len(w)
    if not 0 <= j <= n:
        raise ValueError(f"space {j} out of range 0..{n}")
    suffix = complement(w[j:])
    if kind == "min":
        return normalize(w[:j] + (0,) + suffix)
    if kind == "max":
        return w[:j] + (n + 1,) + suffix
    raise ValueError(f"kind must be 'min' or 'max', got {kind!r}")


# ---------------------------------------------------------------------------
# Simsun machinery

def _has_double_descent(w: tuple[int, ...]) -> bool:
    return any(w[i] > w[i + 1] > w[i + 2] for i in range(len(w) - 2))


def is_simsun(w: Iterable[int]) -> bool:
    """No double descents, even after repeatedly deleting the largest
    letter.  The empty word is Simsun."""
    w = list(w)
    while len(w) >= 3:
        for i in range(len(w) - 2):
            if w[i] > w[i + 1] > w[i + 2]:
                return False
        w.remove(max(w))
    return True


def is_down_up(w: Iterable[int]) -> bool:
    """w_1 > w_2 < w_3 > w_4 ..."""
    w = tuple(w)
    return all(
        (w[i] > w[i + 1]) == (i % 2 == 0) for i in range(len(w) - 1)
    )


def cd_word(w: Iterable[int]) -> str | None:
    """The cd-monomial of a Simsun permutation ending in its largest
    letter; None when w is outside that class.

    The descent word over {a, b} is scanned left to right, each 'ba'
    contributing a d and each remaining 'a' a c.

    >>> cd_word((4, 2, 3, 5, 1, 6))
    'dcd'
    """
    w = tuple(w)
    if not w:
        return ""
    if w[-1] != max(w) or not is_simsun(w):
        return None
    u = "".join("b" if w[i] > w[i + 1] else "a" for i in range(len(w) - 1))
    out = []
    i = 0
    while i < len(u):
        if u[i] == "b":
            # Simsun forbids 'bb' and the final letter is 'a'
            out.append("d")
            i += 2
        else:
            out.append("c")
            i += 1
    return "".join(out)


class SimsunTests(NamedTuple):
    is_simsun: bool
    is_down_up: bool
    cd_word: str | None


def simsun_tests(w: Iterable[int]) -> SimsunTests:
    w = tuple(w)
    return SimsunTests(is_simsun(w), is_down_up(w), cd_word(w))


# ---------------------------------------------------------------------------
# word serialization for the command line

def format_word(w: Iterable[int]) -> str:
    w = tuple(w)
    if w and max(w) > 9:
        return ",".join(str(x) for x in w)
    return "".join(str(x) for x in w)


def parse_word(s: str) -> Word:
    s = s.strip()
    if "," in s:
        return tuple(int(p) for p in s.split(","))
    if not s.isdigit() or "0" in s:
        raise ValueError(f"cannot parse permutation {s!r}")
    return tuple(int(ch) for ch in s)


# ---------------------------------------------------------------------------
# exhaustive structural checks (small n)

def theta_check(n: int) -> CheckResult:
    """theta is an involution with altdes(theta w) = n-1-altdes(w) and
    altmaj(theta w) = C(n,2) - n*altdes(w) + altmaj(w), for all of S_n."""
    base = comb(n, 2)
    for w in _perms(range(1, n + 1)):
        v = theta(w)
        if theta(v) != w:
            return CheckResult.failed(f"not an involution at {format_word(w)}")
        _, ad, am = alt_stats(w)
        _, ad2, am2 = alt_stats(v)
        if ad2 != n - 1 - ad or am2 != base - n * ad + am:
            return CheckResult.failed(
                f"statistics mismatch at {format_word(w)} -> {format_word(v)}"
            )
    return CheckResult.passed()


def double_count_check(n: int) -> CheckResult:
    """Min and max insertions over all spaces hit every member of
    S_{n+1} exactly twice."""
    hits: dict[Word, int] = {}
    for w in _perms(range(1, n + 1)):
        for j in range(n + 1):
            for kind in ("min", "max"):
                v = insertions(w, j, kind)
                hits[v] = hits.get(v, 0) + 1
    target = [tuple(p) for p in _perms(range(1, n + 2))]
    if len(hits) != len(target):
        return CheckResult.failed(f"covered {len(hits)} of {len(target)} targets")
    for v in target:
        if hits.get(v, 0) != 2:
            return CheckResult.failed(
                f"{format_word(v)} constructed {hits.get(v, 0)} times"
            )
    return CheckResult.passed()


def equidist_check(n: int) -> CheckResult:
    """altdes on S_n is equidistributed with the 3-descent number on
    permutations of S_{n+1} whose first letter is 1."""
    lhs: dict[int, int] = {}
    for w in _perms(range(1, n + 1)):
        k = alt_stats(w).altdes
        lhs[k] = lhs.get(k, 0) + 1
    rhs: dict[int, int] = {}
    for tail in _perms(range(2, n + 2)):
        k = classic_stats((1,) + tail).des3
        rhs[k] = rhs.get(k, 0) + 1
    if lhs != rhs:
        return CheckResult.failed(f"distributions differ: {lhs} vs {rhs}")
    return CheckResult.passed()

"""Brute-force ground truth over symmetric groups.

Every function here enumerates all of S_n (or a filtered subset) and
tallies statistics straight from the definitions, independently of any
recurrence.  Enumeration is in lexicographic order, materialized block
by block as numpy int8 arrays and partitioned by the first letter, which
is also the parallelism seam for the jobs knob.  Counts live in int64
(safe up to n = 20, far beyond any enumerable size) and are converted to
Python ints on the way out.

Pure-Python definitional loops for the same quantities exist in the
test-suite for small n; the vectorized routines must and do agree with
them.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations as _perms
from math import factorial
from typing import Iterator, NamedTuple

import numpy as np

from .permutations import alt_stats, cd_word, is_down_up, is_simsun
from .polynomials import BiPolyTQ, IntPoly, NCPoly

DEFAULT_BRUTE_MAX = 11

STATS = ("altdes", "altmaj", "des", "maj", "des3")


class LimitExceeded(ValueError):
    """Raised when an enumeration would exceed the configured bound."""


def _guard(n: int, brute_max: int | None) -> int:
    limit = DEFAULT_BRUTE_MAX if brute_max is None else brute_max
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise LimitExceeded(f"n = {n} exceeds brute-force bound {limit}")
    if factorial(n) >= 1 << 62:
        raise LimitExceeded(f"n = {n} would overflow int64 tallies")
    return limit


_BLOCK_CACHE: dict[int, np.ndarray] = {}
_BLOCK_CACHE_MAX = 10  # block(10) is 36 MB; never materialize 11!


def _perm_block(k: int) -> np.ndarray:
    """All permutations of 0..k-1 as a (k!, k) int8 array in
    lexicographic order."""
    if k in _BLOCK_CACHE:
        return _BLOCK_CACHE[k]
    arr = np.zeros((1, 1), dtype=np.int8)
    for m in range(2, k + 1):
        sub = arr
        fact = sub.shape[0]
        arr = np.empty((fact * m, m), dtype=np.int8)
        base = np.arange(m, dtype=np.int8)
        for v in range(m):
            rest = np.concatenate([base[:v], base[v + 1 :]])
            blk = arr[v * fact : (v + 1) * fact]
            blk[:, 0] = v
            blk[:, 1:] = rest[sub]
    if k <= _BLOCK_CACHE_MAX:
        _BLOCK_CACHE[k] = arr
    return arr


def iter_perm_arrays(n: int) -> Iterator[np.ndarray]:
    """Yield S_n as 0-based int8 arrays, one partition per first letter
    (a single block for small n).  Concatenated top to bottom the rows
    are exactly S_n in lexicographic order."""
    if n == 0:
        yield np.zeros((1, 0), dtype=np.int8)
        return
    if n <= _BLOCK_CACHE_MAX:
        yield _perm_block(n)
        return
    sub = _perm_block(n - 1)
    base = np.arange(n, dtype=np.int8)
    for v in range(n):
        rest = np.concatenate([base[:v], base[v + 1 :]])
        block = np.empty((sub.shape[0], n), dtype=np.int8)
        block[:, 0] = v
        block[:, 1:] = rest[sub]
        yield block


def _n_partitions(n: int) -> int:
    return 1 if n <= _BLOCK_CACHE_MAX else n


def _partition_array(n: int, idx: int) -> np.ndarray:
    if n <= _BLOCK_CACHE_MAX:
        return _perm_block(n)
    sub = _perm_block(n - 1)
    base = np.arange(n, dtype=np.int8)
    rest = np.concatenate([base[:idx], base[idx + 1 :]])
    block = np.empty((sub.shape[0], n), dtype=np.int8)
    block[:, 0] = idx
    block[:, 1:] = rest[sub]
    return block


# ---------------------------------------------------------------------------
# vectorized per-row statistics

def _alt_mask(P: np.ndarray) -> np.ndarray:
    """Boolean (rows, n-1) mask of alternating descent positions."""
    n = P.shape[1]
    cmp = P[:, :-1] > P[:, 1:]
    pattern = (np.arange(1, n) % 2) == 1
    return cmp == pattern


def _stat_vector(P: np.ndarray, stat: str) -> np.ndarray:
    n = P.shape[1]
    if stat in ("altdes", "altmaj"):
        mask = _alt_mask(P)
        if stat == "altdes":
            return mask.sum(1).astype(np.int64)
        acc = np.zeros(P.shape[0], dtype=np.int64)
        for i in range(n - 1):
            acc += mask[:, i] * (i + 1)
        return acc
    if stat in ("des", "maj"):
        cmp = P[:, :-1] > P[:, 1:]
        if stat == "des":
            return cmp.sum(1).astype(np.int64)
        acc = np.zeros(P.shape[0], dtype=np.int64)
        for i in range(n - 1):
            acc += cmp[:, i] * (i + 1)
        return acc
    if stat == "des3":
        a, b, c = P[:, :-2], P[:, 1:-1], P[:, 2:]
        ab = a > b
        bc = b > c
        mask = (ab & bc) | ((ab ^ bc) & (a < c))
        return mask.sum(1).astype(np.int64)
    raise ValueError(f"unknown statistic {stat!r}")


def _row_inverse(P: np.ndarray) -> np.ndarray:
    M, n = P.shape
    inv = np.empty_like(P)
    inv[np.arange(M)[:, None], P] = np.arange(n, dtype=np.int8)[None, :]
    return inv


# ---------------------------------------------------------------------------
# per-partition workers (module level so they pickle for process pools)

def _work_hist(args) -> list[int]:
    n, idx, stat, length = args
    P = _partition_array(n, idx)
    vec = _stat_vector(P, stat)
    return np.bincount(vec, minlength=length).tolist()


def _work_qalt(args) -> list[int]:
    n, idx, width = args
    P = _partition_array(n, idx)
    mask = _alt_mask(P)
    ad = mask.sum(1).astype(np.int64)
    am = np.zeros(P.shape[0], dtype=np.int64)
    for i in range(n - 1):
        am += mask[:, i] * (i + 1)
    return np.bincount(ad * width + am, minlength=n * width).tolist()


def _work_two_sided(args) -> list[int]:
    n, idx = args
    P = _partition_array(n, idx)
    ad = _stat_vector(P, "altdes")
    ad_inv = _stat_vector(_row_inverse(P), "altdes")
    return np.bincount(ad_inv * n + ad, minlength=n * n).tolist()


def _work_simsun(args) -> list[int]:
    n, idx = args
    P = _partition_array(n, idx)
    des = (P[:, :-1] > P[:, 1:]).sum(1).astype(np.int64)
    W = P
    k = n
    while k >= 3:
        dd = (W[:, :-2] > W[:, 1:-1]) & (W[:, 1:-1] > W[:, 2:])
        keep = ~dd.any(1)
        W = W[keep]
        des = des[keep]
        if k == 3:
            break
        # delete the largest letter from every surviving row
        M = W.shape[0]
        pos = (W == (k - 1)).argmax(1)
        cols = np.arange(k - 1)
        idx2 = cols[None, :] + (cols[None, :] >= pos[:, None])
        W = W[np.arange(M)[:, None], idx2]
        k -= 1
    return np.bincount(des, minlength=n).tolist()


def _merge(worker, tasks, jobs: int) -> list[int]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(worker, tasks))
    else:
        partials = [worker(t) for t in tasks]
    out = [0] * len(partials[0])
    for p in partials:
        for i, c in enumerate(p):
            out[i] += c
    return out


# ---------------------------------------------------------------------------
# public oracle surface

@dataclass(frozen=True)
class StatMultiset:
    """Multiset of a statistic over S_n, as value -> multiplicity."""

    n: int
    stat: str
    values: dict[int, int]

    def total(self) -> int:
        return sum(self.values.values())

    def polynomial(self) -> IntPoly:
        """Generating polynomial sum q^stat."""
        if not self.values:
            return IntPoly()
        cs = [0] * (max(self.values) + 1)
        for v, c in self.values.items():
            cs[v] = c
        return IntPoly(cs)


def stat_multiset(
    n: int, stat: str, *, brute_max: int | None = None, jobs: int = 1
) -> StatMultiset:
    """Distribution of a statistic over all of S_n."""
    _guard(n, brute_max)
    if stat not in STATS:
        raise ValueError(f"stat must be one of {STATS}")
    if n == 0:
        return StatMultiset(0, stat, {0: 1})
    top = {"altdes": n, "des": n, "des3": n}.get(stat, n * (n - 1) // 2 + 1)
    tasks = [(n, i, stat, top + 1) for i in range(_n_partitions(n))]
    hist = _merge(_work_hist, tasks, jobs)
    return StatMultiset(n, stat, {v: int(c) for v, c in enumerate(hist) if c})


def brute_alt_eulerian(
    n: int, *, brute_max: int | None = None, jobs: int = 1
) -> IntPoly:
    """sum over S_n of t^altdes.

    >>> brute_alt_eulerian(3).coeffs
    (2, 2, 2)
    """
    if n == 0:
        return IntPoly.one()
    return stat_multiset(n, "altdes", brute_max=brute_max, jobs=jobs).polynomial()


def brute_qalt(n: int, *, brute_max: int | None = None, jobs: int = 1) -> BiPolyTQ:
    """sum over S_n of t^altdes q^altmaj."""
    _guard(n, brute_max)
    if n == 0:
        return BiPolyTQ.one()
    width = n * (n - 1) // 2 + 1
    tasks = [(n, i, width) for i in range(_n_partitions(n))]
    hist = _merge(_work_qalt, tasks, jobs)
    return BiPolyTQ(
        {(k // width, k % width): int(c) for k, c in enumerate(hist) if c}
    )


def brute_two_sided(
    n: int, *, brute_max: int | None = None, jobs: int = 1
) -> BiPolyTQ:
    """sum over S_n of s^altdes(w^-1) t^altdes(w), slots read as (s, t)."""
    _guard(n, brute_max)
    if n == 0:
        return BiPolyTQ.one()
    tasks = [(n, i) for i in range(_n_partitions(n))]
    hist = _merge(_work_two_sided, tasks, jobs)
    return BiPolyTQ({(k // n, k % n): int(c) for k, c in enumerate(hist) if c})


def brute_simsun(n: int, *, brute_max: int | None = None, jobs: int = 1) -> IntPoly:
    """Descent polynomial of the Simsun permutations of length n.

    >>> brute_simsun(3).coeffs
    (1, 4)
    """
    _guard(n, brute_max)
    if n == 0:
        return IntPoly.one()
    tasks = [(n, i) for i in range(_n_partitions(n))]
    hist = _merge(_work_simsun, tasks, jobs)
    return IntPoly([int(c) for c in hist])


class CdIndex(NamedTuple):
    """phi: cd-index over Simsun permutations ending in n;
    psi, psi_hat: ab-indexes of the descent and alternating descent
    statistics over all of S_n."""

    phi: NCPoly
    psi: NCPoly
    psi_hat: NCPoly


def brute_cd_index(n: int, *, brute_max: int | None = None) -> CdIndex:
    """Enumerate S_n and tally the three word-valued generating
    functions.  Pure Python; meant for small n."""
    _guard(n, brute_max)
    phi: dict[str, int] = {}
    psi: dict[str, int] = {}
    psi_hat: dict[str, int] = {}
    for w in _perms(range(1, n + 1)):
        u = "".join("b" if w[i] > w[i + 1] else "a" for i in range(n - 1))
        psi[u] = psi.get(u, 0) + 1
        uh = "".join(
            "b" if (w[i] > w[i + 1]) == (i % 2 == 0) else "a" for i in range(n - 1)
        )
        psi_hat[uh] = psi_hat.get(uh, 0) + 1
        cd = cd_word(w)
        if cd is not None:
            phi[cd] = phi.get(cd, 0) + 1
    return CdIndex(NCPoly(phi), NCPoly(psi), NCPoly(psi_hat))


def brute_des3_first1(n: int, *, brute_max: int | None = None) -> StatMultiset:
    """Distribution of 3-descents over permutations of S_{n+1} whose
    first letter is 1 (the comparison class for altdes on S_n)."""
    _guard(n, brute_max)
    if n == 0:
        return StatMultiset(0, "des3", {0: 1})
    values: dict[int, int] = {}
    for sub in iter_perm_arrays(n):
        P = np.empty((sub.shape[0], n + 1), dtype=np.int8)
        P[:, 0] = 0
        P[:, 1:] = sub + 1
        hist = np.bincount(_stat_vector(P, "des3"), minlength=n + 2)
        for v, c in enumerate(hist):
            if c:
                values[v] = values.get(v, 0) + int(c)
    return StatMultiset(n + 1, "des3", values)


def down_up_simsun_count(n: int, *, brute_max: int | None = None) -> int:
    """Number of length-n permutations that are both down-up and
    Simsun."""
    _guard(n, brute_max)
    if n <= 1:
        return 1
    count = 0
    for w in _perms(range(1, n + 1)):
        if is_down_up(w) and is_simsun(w):
            count += 1
    return count

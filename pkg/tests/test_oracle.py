"""Brute-force enumeration cross-checked against scalar recomputation."""

import itertools
import math

import pytest

from altdes.oracle import (
    LimitExceeded,
    brute_alt_eulerian,
    brute_cd_index,
    brute_des3_first1,
    brute_qalt,
    brute_simsun,
    brute_two_sided,
    down_up_simsun_count,
    iter_perm_arrays,
    stat_multiset,
)
from altdes.permutations import alt_stats, cd_word, classic_stats, inverse, is_down_up, is_simsun
from altdes.polynomials import BiPolyTQ, NCPoly


def scalar_hist(n, key):
    hist = {}
    for w in itertools.permutations(range(1, n + 1)):
        v = key(w)
        hist[v] = hist.get(v, 0) + 1
    return hist


def test_iter_perm_arrays_covers_sn():
    for n in range(1, 8):
        seen = set()
        total = 0
        for block in iter_perm_arrays(n):
            assert block.shape[1] == n
            total += block.shape[0]
            for row in block[:: max(1, block.shape[0] // 7)]:
                seen.add(tuple(int(x) for x in row))
        assert total == math.factorial(n)
        # rows are zero-based letter arrays
        assert all(sorted(w) == list(range(n)) for w in seen)


def test_stat_multiset_matches_scalar():
    keys = {
        "altdes": lambda w: alt_stats(w).altdes,
        "altmaj": lambda w: alt_stats(w).altmaj,
        "des": lambda w: classic_stats(w).des,
        "maj": lambda w: classic_stats(w).maj,
        "des3": lambda w: classic_stats(w).des3,
    }
    for n in range(0, 7):
        for stat, key in keys.items():
            ms = stat_multiset(n, stat)
            assert ms.total() == math.factorial(n)
            if n == 0:
                assert ms.values == {0: 1}
                continue
            assert ms.values == scalar_hist(n, key), (n, stat)


def test_stat_multiset_rejects_unknown():
    with pytest.raises(ValueError):
        stat_multiset(3, "exc")


def test_polynomial_wrappers_agree():
    for n in range(0, 7):
        assert brute_alt_eulerian(n) == stat_multiset(n, "altdes").polynomial()
        q = brute_qalt(n)
        assert q.at_q1() == brute_alt_eulerian(n)
        assert q.at_t1() == stat_multiset(n, "altmaj").polynomial()


def test_qalt_matches_scalar():
    for n in range(1, 7):
        expected = {}
        for w in itertools.permutations(range(1, n + 1)):
            st = alt_stats(w)
            k = (st.altdes, st.altmaj)
            expected[k] = expected.get(k, 0) + 1
        assert brute_qalt(n) == BiPolyTQ(expected)


def test_two_sided_matches_scalar_and_is_symmetric():
    for n in range(1, 7):
        expected = {}
        for w in itertools.permutations(range(1, n + 1)):
            k = (alt_stats(inverse(w)).altdes, alt_stats(w).altdes)
            expected[k] = expected.get(k, 0) + 1
        a = brute_two_sided(n)
        assert a == BiPolyTQ(expected)
        assert a.swap() == a


def test_simsun_matches_scalar():
    for n in range(1, 8):
        expected = {}
        for w in itertools.permutations(range(1, n + 1)):
            if is_simsun(w):
                d = classic_stats(w).des
                expected[d] = expected.get(d, 0) + 1
        got = brute_simsun(n)
        assert {e: c for e, c in enumerate(got) if c} == expected


def test_cd_index_matches_scalar():
    for n in range(1, 7):
        phi = {}
        for w in itertools.permutations(range(1, n + 1)):
            word = cd_word(w)
            if word is not None:
                phi[word] = phi.get(word, 0) + 1
        cd = brute_cd_index(n)
        assert cd.phi == NCPoly(phi)
        # both variation indexes add up over the whole group
        assert cd.psi.eval_commutative({"a": 1, "b": 1})[0] == math.factorial(n)
        assert cd.psi_hat.eval_commutative({"a": 1, "b": 1})[0] == math.factorial(n)


def test_des3_first1_matches_scalar():
    for n in range(1, 7):
        expected = {}
        for w in itertools.permutations(range(2, n + 2)):
            v = classic_stats((1,) + w).des3
            expected[v] = expected.get(v, 0) + 1
        got = brute_des3_first1(n)
        assert got.n == n + 1 and got.stat == "des3"
        assert got.values == expected


def test_down_up_simsun_count_scalar():
    for n in range(1, 8):
        expected = sum(
            1
            for w in itertools.permutations(range(1, n + 1))
            if is_simsun(w) and is_down_up(w)
        )
        assert down_up_simsun_count(n) == expected


def test_jobs_do_not_change_results():
    for n in (5, 8):
        assert brute_alt_eulerian(n, jobs=2) == brute_alt_eulerian(n)
        assert brute_qalt(n, jobs=2) == brute_qalt(n)
        assert stat_multiset(n, "maj", jobs=2).values == stat_multiset(n, "maj").values


def test_brute_max_guard():
    with pytest.raises(LimitExceeded):
        brute_alt_eulerian(7, brute_max=6)
    with pytest.raises(LimitExceeded):
        brute_two_sided(12)
    with pytest.raises(LimitExceeded):
        down_up_simsun_count(5, brute_max=4)
    assert brute_alt_eulerian(6, brute_max=6)(1) == 720

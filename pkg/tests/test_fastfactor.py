"""Stack factorizer: oracle agreement, comparison bound, engine correctness."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from nyldon import (
    BINARY,
    TERNARY,
    Word,
    factorize_with_stats,
    is_nyldon,
    is_nyldon_bruteforce,
    nyldon_factorization_bruteforce,
    nyldon_factorize,
    words_up_to,
)
from nyldon.fastfactor import AUTO_ENGINE_MIN, build_engine

letters_st = st.lists(st.integers(0, 1), min_size=1, max_size=60).map(tuple)


def test_agrees_with_oracle_exhaustively():
    for alphabet, max_len in ((BINARY, 11), (TERNARY, 7)):
        for w in words_up_to(alphabet, max_len):
            assert (
                nyldon_factorize(w).factors
                == nyldon_factorization_bruteforce(w).factors
            )


@given(letters_st)
def test_agrees_with_oracle_random(t):
    w = Word(t, BINARY)
    assert nyldon_factorize(w).factors == nyldon_factorization_bruteforce(w).factors


@given(letters_st)
def test_modes_agree(t):
    w = Word(t, BINARY)
    f_naive, c_naive = factorize_with_stats(w, mode="naive")
    f_engine, c_engine = factorize_with_stats(w, mode="engine")
    assert f_naive.factors == f_engine.factors
    assert c_naive == c_engine


@settings(max_examples=30)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=5000).map(tuple))
def test_comparison_bound(t):
    w = Word(t, BINARY)
    _, comparisons = factorize_with_stats(w, mode="auto")
    assert comparisons <= 2 * len(w) - 1


def test_long_words_use_engine_and_stay_in_bound():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(AUTO_ENGINE_MIN, 4 * AUTO_ENGINE_MIN)
        w = Word(tuple(rng.randrange(2) for _ in range(n)), BINARY)
        f, comparisons = factorize_with_stats(w, mode="auto")
        assert comparisons <= 2 * n - 1
        assert f.word == w
        assert f.verify(w)


def test_engine_matches_tuple_comparison():
    rng = random.Random(13)
    n = 300
    t = tuple(rng.randrange(2) for _ in range(n))
    engine = build_engine(Word(t, BINARY))
    for _ in range(2000):
        a1, a2 = rng.randrange(n), rng.randrange(n)
        b1 = rng.randint(a1 + 1, n)
        b2 = rng.randint(a2 + 1, n)
        u, v = t[a1:b1], t[a2:b2]
        assert engine.compare(a1, b1, a2, b2) == (u > v) - (u < v)
        i, j = rng.randrange(n), rng.randrange(n)
        suf_i, suf_j = t[i:], t[j:]
        lcp = 0
        while lcp < min(len(suf_i), len(suf_j)) and suf_i[lcp] == suf_j[lcp]:
            lcp += 1
        assert engine.lcp_of_suffixes(i, j) == lcp


def test_is_nyldon_examples():
    assert is_nyldon(Word.parse("1011111"))
    # the worked example: the rotation is a member, the original is not
    assert is_nyldon(Word.parse("10110101011000"))
    assert not is_nyldon(Word.parse("10001011010101"))


def test_member_iff_single_factor():
    for w in words_up_to(BINARY, 10):
        assert is_nyldon(w) == (len(nyldon_factorize(w)) == 1)
        assert is_nyldon(w) == is_nyldon_bruteforce(w)


def test_factors_nondecreasing_and_members():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(1, 200)
        w = Word(tuple(rng.randrange(3) for _ in range(n)), TERNARY)
        f = nyldon_factorize(w)
        assert f.verify(w)
        assert all(is_nyldon(x) for x in f.factors)

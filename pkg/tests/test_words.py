"""Word primitives: parsing, order, periods, conjugates, Lyndon tools."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nyldon import (
    BINARY,
    TERNARY,
    Alphabet,
    AlphabetMismatchError,
    Factorization,
    Word,
    conjugates,
    is_lyndon,
    is_primitive,
    lyndon_words,
    words_up_to,
)
from nyldon.words import (
    duval_lyndon_factorization,
    lex_compare,
    minimal_period,
    minimal_period_length,
)

letters_st = st.lists(st.integers(0, 1), min_size=1, max_size=30).map(tuple)
word_st = letters_st.map(lambda t: Word(t, BINARY))


def test_parse_and_render_roundtrip():
    w = Word.parse("10011")
    assert w.letters == (1, 0, 0, 1, 1)
    assert str(w) == "10011"
    big = Alphabet(12)
    v = Word.parse("11,0,3", big)
    assert v.letters == (11, 0, 3)
    assert str(v) == "11,0,3"


def test_word_validation():
    with pytest.raises(ValueError):
        Word((), BINARY)
    with pytest.raises(ValueError):
        Word((2,), BINARY)
    with pytest.raises(ValueError):
        Word.parse("")
    with pytest.raises(ValueError):
        Alphabet(1)


def test_concat_power_slice_rotate():
    w = Word.parse("101")
    assert str(w + Word.parse("0")) == "1010"
    assert str(w * 3) == "101101101"
    assert str(w[1:]) == "01"
    assert w[0] == 1
    assert str(w.rotate(1)) == "011"
    assert str(w.rotate(-1)) == "110"
    with pytest.raises(ValueError):
        w * 0


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        Word.parse("1") + Word.parse("1", TERNARY)
    with pytest.raises(AlphabetMismatchError):
        Word.parse("1") < Word.parse("1", TERNARY)


def test_prefix_sorts_before_extension():
    assert Word.parse("10") < Word.parse("100")
    assert Word.parse("10") < Word.parse("101")
    assert lex_compare(Word.parse("10"), Word.parse("100")) == -1
    assert lex_compare(Word.parse("10"), Word.parse("10")) == 0


@given(word_st, word_st, word_st)
def test_lex_is_a_total_order(u, v, w):
    assert lex_compare(u, v) == -lex_compare(v, u)
    if lex_compare(u, v) <= 0 and lex_compare(v, w) <= 0:
        assert lex_compare(u, w) <= 0
    assert (lex_compare(u, v) == 0) == (u.letters == v.letters)


@given(word_st, st.integers(1, 5))
def test_minimal_period_divides_and_generates(w, k):
    p = minimal_period(w * k)
    assert len(w * k) % len(p) == 0
    assert p * (len(w * k) // len(p)) == w * k
    assert minimal_period(p) == p
    assert is_primitive(p)


def test_minimal_period_examples():
    assert minimal_period_length((1, 0, 1, 0)) == 2
    assert minimal_period_length((1, 0, 1)) == 3
    assert str(minimal_period(Word.parse("101101"))) == "101"


def test_conjugates():
    w = Word.parse("100")
    assert [str(c) for c in conjugates(w)] == ["100", "001", "010"]


def test_duval_factorization_examples():
    f = duval_lyndon_factorization(Word.parse("10010110"))
    assert f.verify(Word.parse("10010110"))
    assert f.order_witness == "lex:nonincreasing"
    assert [str(x) for x in f.factors] == ["1", "001011", "0"]


@given(word_st)
def test_duval_factors_are_lyndon_and_nonincreasing(w):
    f = duval_lyndon_factorization(w)
    assert f.word == w
    assert all(is_lyndon(x) for x in f.factors)
    assert all(a >= b for a, b in zip(f.factors, f.factors[1:]))


def test_lyndon_words_enumeration():
    got = [str(w) for w in lyndon_words(BINARY, 4)]
    assert got == ["0", "0001", "001", "0011", "01", "011", "0111", "1"]
    assert all(is_lyndon(w) for w in lyndon_words(TERNARY, 4))


def test_words_up_to_is_shortlex():
    got = [str(w) for w in words_up_to(BINARY, 2)]
    assert got == ["0", "1", "00", "01", "10", "11"]


def test_factorization_verify():
    f = Factorization((Word.parse("1000"), Word.parse("1011010101")))
    assert f.verify(Word.parse("10001011010101"))
    assert not f.verify(Word.parse("1000"))
    bad = Factorization((Word.parse("11"), Word.parse("10")))
    assert not bad.verify()
    with pytest.raises(ValueError):
        Factorization(())

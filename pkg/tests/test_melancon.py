"""Contraction algorithm: conjugates, factorization variant, traces, policies."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nyldon import (
    BINARY,
    LEX,
    RLEX,
    NotPrimitiveError,
    Word,
    conjugate,
    conjugates,
    contraction_trace,
    factorize,
    is_nyldon,
    lyndon_words,
    nyldon_factorize,
    words_up_to,
)
from nyldon.words import is_lyndon, is_primitive

primitive_st = (
    st.lists(st.integers(0, 1), min_size=2, max_size=40)
    .map(tuple)
    .map(lambda t: Word(t, BINARY))
    .filter(is_primitive)
)


def test_worked_example_conjugate():
    w = Word.parse("10001011010101")
    assert str(conjugate(w)) == "10110101011000"


def test_worked_example_factorization():
    f = factorize(Word.parse("10001011010101"))
    assert tuple(str(x) for x in f.factors) == ("1000", "1011010101")


def test_conjugate_variants_agree():
    for rep in lyndon_words(BINARY, 9):
        if len(rep) < 2:
            continue
        pq = conjugate(rep, LEX, variant="pq")
        ph = conjugate(rep, LEX, variant="phases")
        assert pq == ph
        assert is_nyldon(pq)


@given(primitive_st)
def test_conjugate_is_rotation_invariant(w):
    base = conjugate(w)
    assert base in conjugates(w)
    assert is_nyldon(base)
    for c in conjugates(w):
        assert conjugate(c) == base


def test_single_letter_conjugate():
    assert conjugate(Word.parse("0")) == Word.parse("0")


def test_imprimitive_rejected():
    with pytest.raises(NotPrimitiveError):
        conjugate(Word.parse("1010"))
    with pytest.raises(NotPrimitiveError):
        contraction_trace(Word.parse("11"), LEX, mode="circular")


def test_factorize_agrees_with_stack():
    for w in words_up_to(BINARY, 11):
        assert factorize(w).factors == nyldon_factorize(w).factors


def test_growth_check_passes_under_lex():
    for w in words_up_to(BINARY, 10):
        factorize(w, LEX, check_growth=True)
    for rep in lyndon_words(BINARY, 10):
        if len(rep) >= 2:
            conjugate(rep, LEX, variant="pq", check_growth=True)
            conjugate(rep, LEX, variant="phases", check_growth=True)


def test_rlex_policy_yields_lyndon_conjugates():
    for rep in lyndon_words(BINARY, 8):
        if len(rep) < 2:
            continue
        for c in conjugates(rep):
            got = conjugate(c, RLEX)
            assert is_lyndon(got)
            assert got == rep  # the Lyndon rotation is lex-least, FKM emits it


def test_circular_trace_matches_reference():
    tr = contraction_trace(Word.parse("10001011010101"), LEX, mode="circular")
    assert tr.mode == "circular"
    assert [", ".join(str(w) for w in snap) for snap in tr.snapshots] == [
        "1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1",
        "1000, 10, 1, 10, 10, 10, 1",
        "1000, 101, 10, 10, 101",
        "1000, 1011010, 101",
        "1011010, 1011000",
        "10110101011000",
    ]
    assert str(tr.conjugate) == "10110101011000"
    assert tr.factorization is None


def test_linear_trace_matches_reference():
    tr = contraction_trace(Word.parse("10001011010101"), LEX, mode="linear")
    assert tr.mode == "linear"
    assert [", ".join(str(w) for w in snap) for snap in tr.snapshots] == [
        "1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1",
        "1000, 10, 1, 10, 10, 10, 1",
        "1000, 101, 10, 10, 101",
        "1000, 1011010, 101",
        "1011010, 101",
        "1011010101",
    ]
    assert tr.conjugate is None
    assert tuple(str(x) for x in tr.factorization.factors) == (
        "1000",
        "1011010101",
    )


def test_trace_sequence_protocol():
    tr = contraction_trace(Word.parse("100"), LEX, mode="circular")
    assert len(tr) == len(tr.snapshots)
    assert list(iter(tr)) == list(tr.snapshots)

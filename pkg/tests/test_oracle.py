"""Definitional oracles: membership, factorization, enumeration, counts."""

import pytest

from nyldon import (
    BINARY,
    Word,
    enumerate_members,
    enumerate_nyldon,
    is_member_bruteforce,
    is_nyldon_bruteforce,
    longest_nyldon_suffix,
    nyldon_factorization_bruteforce,
    primitive_necklace_count,
    words_up_to,
)
from nyldon.acceptance import TABLE1_COUNTS, TABLE1_WORDS
from nyldon.order import RLEX
from nyldon.words import is_lyndon


def test_membership_smoke():
    assert is_nyldon_bruteforce(Word.parse("0"))
    assert is_nyldon_bruteforce(Word.parse("10"))
    assert is_nyldon_bruteforce(Word.parse("101"))
    assert not is_nyldon_bruteforce(Word.parse("01"))
    assert not is_nyldon_bruteforce(Word.parse("11"))
    assert not is_nyldon_bruteforce(Word.parse("110"))


def test_no_member_starts_with_two_top_letters(binary10):
    assert all(w.letters[:2] != (1, 1) for w in binary10.words() if len(w) >= 2)


def test_reference_word_list():
    got = tuple(str(w) for w in enumerate_nyldon(BINARY, 7).words())
    assert got == TABLE1_WORDS


def test_counts_match_primitive_necklaces(binary10, ternary6):
    for gset, size in ((binary10, 2), (ternary6, 3)):
        counts = gset.counts_by_length()
        for n, c in counts.items():
            assert c == primitive_necklace_count(size, n)


def test_necklace_count_values():
    assert [primitive_necklace_count(2, n) for n in range(1, 8)] == [
        2, 1, 2, 3, 6, 9, 18,
    ]
    assert primitive_necklace_count(3, 4) == 18


def test_factorization_is_unique_and_nondecreasing(binary10_tuples):
    for w in words_up_to(BINARY, 9):
        f = nyldon_factorization_bruteforce(w)
        assert f.word == w
        assert all(x.letters in binary10_tuples for x in f.factors)
        assert all(a <= b for a, b in zip(f.factors, f.factors[1:]))
        # single factor exactly for members
        assert (len(f) == 1) == (w.letters in binary10_tuples)


def test_factorization_examples():
    f = nyldon_factorization_bruteforce(Word.parse("10001011010101"))
    assert tuple(str(x) for x in f.factors) == ("1000", "1011010101")
    f2 = nyldon_factorization_bruteforce(Word.parse("11"))
    assert tuple(str(x) for x in f2.factors) == ("1", "1")


def test_longest_member_suffix():
    assert str(longest_nyldon_suffix(Word.parse("11011"))) == "1011"
    assert str(longest_nyldon_suffix(Word.parse("00"))) == "0"


def test_generated_set_protocol(binary10):
    words = binary10.words()
    assert list(words) == sorted(words, key=lambda w: (len(w), w.letters))
    assert sum(binary10.counts_by_length().values()) == len(words)


def test_enumerate_members_rlex_gives_lyndon_like_set():
    gset = enumerate_members(BINARY, 6, RLEX)
    assert all(is_lyndon(w) for w in gset.words())
    assert is_member_bruteforce(Word.parse("0011"), gset)
    assert not is_member_bruteforce(Word.parse("0101"), gset)


def test_counts_reference():
    assert [
        TABLE1_COUNTS[n - 1] for n in range(1, 8)
    ] == [primitive_necklace_count(2, n) for n in range(1, 8)]


def test_length_cap():
    with pytest.raises(ValueError):
        nyldon_factorization_bruteforce(Word((0,) * 65, BINARY))
    long = nyldon_factorization_bruteforce(Word((0,) * 65, BINARY), length_cap=70)
    assert len(long) == 65


def test_generated_set_save_load_roundtrip(tmp_path, binary10):
    path = tmp_path / "members.txt"
    binary10.save(path)
    loaded = type(binary10).load(path)
    assert loaded.member_tuples == binary10.member_tuples
    assert loaded.policy_id == binary10.policy_id
    assert loaded.max_len == binary10.max_len
    assert Word.parse("1011") in loaded
    assert Word.parse("1101") not in loaded
    # a tampered count is rejected
    lines = path.read_text().splitlines()
    path.write_text("\n".join(lines[:-1]) + "\n")
    with pytest.raises(ValueError):
        type(binary10).load(path)


def test_ternary_members_smoke(ternary6):
    tuples = {w.letters for w in ternary6.words()}
    assert (2, 0) in tuples
    assert (2, 1) in tuples
    assert (2, 0, 2) in tuples
    # 102 factors as 10 . 2, a nondecreasing pair of members
    assert (1, 0, 2) not in tuples
    assert (0, 1) not in tuples

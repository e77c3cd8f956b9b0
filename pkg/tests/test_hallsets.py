"""Policy-generated sets and their Hall/Viennot verdicts."""

import pytest

from nyldon import (
    BINARY,
    LEX,
    RLEX,
    PolicyViolationError,
    generate,
    verify_hall,
)
from nyldon.hallsets import validate_nyldon_like, verify_factorization_property
from nyldon.order import OrderPolicy, register_policy
from nyldon.words import is_lyndon


def test_lex_set_matches_oracle(binary10):
    gset = generate(LEX, BINARY, 7)
    expected = {w.letters for w in binary10.words() if len(w) <= 7}
    assert gset.member_tuples == expected


def test_lex_verdict():
    gset = generate(LEX, BINARY, 7)
    verdict = verify_hall(gset, LEX)
    assert verdict.is_factorization
    assert verdict.is_right_hall
    assert not verdict.is_left_hall
    assert not verdict.is_viennot
    assert verdict.nyldon_like_ok
    clauses = {c for _, _, c in verdict.counterexamples}
    assert clauses == {"left_hall"}
    d = verdict.to_dict()
    assert d["policy_id"] == "lex"
    assert d["is_right_hall"] is True


def test_rlex_set_is_lyndon_and_viennot():
    gset = generate(RLEX, BINARY, 7, validate=False)
    assert all(is_lyndon(w) for w in gset.words())
    verdict = verify_hall(gset, RLEX)
    assert verdict.is_viennot
    assert verdict.is_right_hall and verdict.is_left_hall
    assert not verdict.nyldon_like_ok
    assert verdict.is_factorization


def test_rlex_generate_raises_without_validate_off():
    with pytest.raises(PolicyViolationError):
        generate(RLEX, BINARY, 5)


def test_growth_counterexample_is_concrete():
    gset = generate(RLEX, BINARY, 5, validate=False)
    check = validate_nyldon_like(gset, RLEX)
    assert not check
    f, g, clause = check.counterexamples[0]
    assert clause == "nyldon_like"
    # under rlex, f < fg fails: fg precedes f in reversed lex order
    assert RLEX.compare(f.letters, (f + g).letters) >= 0
    assert (f + g).letters in gset.member_tuples


def test_factorization_uniqueness_standalone():
    gset = generate(LEX, BINARY, 6)
    assert verify_factorization_property(gset, LEX)
    assert verify_factorization_property(gset, LEX, test_len=4)
    with pytest.raises(ValueError):
        verify_factorization_property(gset, LEX, test_len=7)


def test_custom_policy_roundtrip():
    # colex: compare reversed tuples lexicographically
    def colex(u, v):
        ru, rv = u[::-1], v[::-1]
        if ru == rv:
            return 0
        return -1 if ru < rv else 1

    policy = OrderPolicy("colex-test", colex, assume_nyldon_like=False)
    register_policy(policy)
    gset = generate(policy, BINARY, 6, validate=False)
    verdict = verify_hall(gset, policy)
    assert verdict.is_factorization  # uniqueness holds for any total order
    assert gset.member_tuples >= {(0,), (1,)}


def test_counts_by_length_lex():
    gset = generate(LEX, BINARY, 7)
    assert gset.counts_by_length() == {1: 2, 2: 1, 3: 2, 4: 3, 5: 6, 6: 9, 7: 18}

import pytest

from altperm import (
    AWord,
    GroupParams,
    SWord,
    canonical_a_word,
    canonical_s_word,
    enumerate_alternating,
    enumerate_group,
    eval_a_word,
    eval_s_word,
    generator_a,
    generator_s,
    identity,
    inv_colored,
    is_alternating,
    length_LA,
    multiply,
    ordered_target,
    parse_window,
    structured_decomposition,
    translate_pairs,
)
from altperm.canonical import (
    A0,
    A1,
    A1INV,
    TRIVIAL,
    WITH_PREFIX,
    WITHOUT_PREFIX,
    a0_run_exponents,
    gamma_pattern,
    ordering_pattern,
)
from altperm.core import colored_offset, csum, oslash, power
from altperm.errors import NotAlternating, OddLength, ParseError
from altperm.oracle import bfs_lengths

from conftest import WORKED_A_WORD, WORKED_S_WORD

SMALL = [GroupParams(6, 1), GroupParams(6, 2), GroupParams(6, 3), GroupParams(10, 2), GroupParams(2, 3)]


def w(text, r=6):
    return parse_window(text, r)


def test_word_text_round_trip():
    assert str(SWord.parse(WORKED_S_WORD)) == WORKED_S_WORD
    assert str(AWord.parse(WORKED_A_WORD)) == WORKED_A_WORD
    assert AWord.parse("a1^-1 a0^2") == AWord([A1INV, A0, A0])
    assert str(SWord()) == ""
    for bad in ("b1", "a2'", "s0'", "a"):
        with pytest.raises(ParseError):
            AWord.parse(bad) if bad[0] != "s" else SWord.parse(bad)


def test_generator_a_examples():
    p = GroupParams(6, 2)
    assert generator_a(p, A0) == w("1^2 2")
    # a_1 = s_0^3 s_1: color position 1, then swap positions 1 and 2
    s0, s1 = generator_s(p, 0), generator_s(p, 1)
    assert generator_a(p, A1) == multiply(power(s0, 3), s1) == w("2 1^3")
    assert power(generator_a(p, A0), 3).is_identity()
    assert multiply(generator_a(p, A1), generator_a(p, A1INV)).is_identity()


def test_eval_worked_words(worked, p65):
    assert eval_s_word(p65, SWord()).is_identity()
    assert eval_a_word(p65, AWord()).is_identity()
    assert eval_s_word(p65, SWord.parse(WORKED_S_WORD)) == worked
    assert eval_a_word(p65, AWord.parse(WORKED_A_WORD)) == worked


def test_membership_examples(worked):
    assert is_alternating(identity(GroupParams(6, 3)))
    assert not is_alternating(w("1^1 2 3"))
    assert is_alternating(worked)
    with pytest.raises(NotAlternating):
        length_LA(w("1^1 2 3"))


def test_ordered_target(worked):
    assert ordered_target(worked) == w("5^1 3^3 2^2 1 4")
    for pi in enumerate_group(GroupParams(6, 3)):
        assert inv_colored(ordered_target(pi)) == 0


def test_canonical_s_word(worked):
    assert canonical_s_word(identity(GroupParams(6, 4))) == SWord()
    assert str(canonical_s_word(worked)) == WORKED_S_WORD
    assert canonical_s_word(w("2 1 3")) == SWord([1])


def test_canonical_s_word_evaluates_everywhere():
    for p in (GroupParams(6, 3), GroupParams(3, 3)):
        for pi in enumerate_group(p):
            assert eval_s_word(p, canonical_s_word(pi)) == pi


def test_translate_pairs(worked, p65):
    assert translate_pairs(p65, []) == AWord()
    assert str(translate_pairs(p65, SWord.parse(WORKED_S_WORD))) == WORKED_A_WORD
    assert translate_pairs(GroupParams(6, 2), [1, 0]) == AWord([A1INV, A0, A0])
    with pytest.raises(OddLength):
        translate_pairs(p65, [1])


def test_translation_preserves_value():
    for p in (GroupParams(6, 3), GroupParams(10, 3)):
        for pi in enumerate_alternating(p):
            word = canonical_s_word(pi)
            assert len(word) % 2 == 0
            assert eval_a_word(p, translate_pairs(p, word)) == pi


def test_length_LA_examples(worked):
    assert length_LA(identity(GroupParams(6, 3))) == 0
    assert length_LA(worked) == 17
    for n in (1, 2, 4):
        assert length_LA(generator_a(GroupParams(6, n), A0)) == 1


@pytest.mark.parametrize("params", SMALL, ids=str)
def test_canonical_a_word_round_trip_and_length(params):
    for pi in enumerate_alternating(params):
        word = canonical_a_word(pi)
        assert eval_a_word(params, word) == pi
        assert len(word) == length_LA(pi)


@pytest.mark.parametrize("params", SMALL[:4], ids=str)
def test_a0_runs_halve_s0_runs(params):
    for pi in enumerate_alternating(params):
        for z, exponent in a0_run_exponents(params, canonical_s_word(pi)):
            assert exponent == oslash(z, params.r)


@pytest.mark.parametrize("params", [GroupParams(6, 2), GroupParams(6, 3), GroupParams(10, 2)], ids=str)
def test_parity_criterion(params):
    full = bfs_lengths(params, "full")
    for k, pi in enumerate(enumerate_group(params)):
        parity = (colored_offset(pi) + inv_colored(pi) + csum(pi)) % 2
        assert is_alternating(pi) == (parity == 0) == (full[k] % 2 == 0)


def test_enumerate_alternating_counts():
    assert [pi.colors for pi in enumerate_alternating(GroupParams(6, 1))] == [(0,), (2,), (4,)]
    assert sum(1 for _ in enumerate_alternating(GroupParams(6, 2))) == 36
    assert sum(1 for _ in enumerate_alternating(GroupParams(6, 3))) == 648


# -- structured decomposition --------------------------------------------------

def test_decomposition_of_identity():
    dec = structured_decomposition(identity(GroupParams(6, 3)))
    assert all(g.branch == TRIVIAL and not g.word for g in dec.gammas)
    assert all(not o.word for o in dec.orderings)
    assert dec.letter_count == 0 and dec.is_valid()


def test_decomposition_of_worked_example(worked):
    dec = structured_decomposition(worked)
    assert str(dec.gammas[-1].word) == "a0^2"
    assert [g.branch for g in dec.gammas] == [
        TRIVIAL, WITHOUT_PREFIX, WITH_PREFIX, TRIVIAL, WITHOUT_PREFIX, WITH_PREFIX]
    assert str(dec.word()) == WORKED_A_WORD
    assert dec.letter_count == 17
    assert dec.evaluate() == worked
    assert dec.is_valid()


def test_gamma_patterns():
    p = GroupParams(6, 4)
    assert gamma_pattern(p, 1, WITHOUT_PREFIX, 2) == AWord([A0, A0])
    assert gamma_pattern(p, 2, WITHOUT_PREFIX, 0) == AWord([A1INV])
    assert gamma_pattern(p, 2, WITH_PREFIX, 0) == AWord([A0, A0, A1])
    assert gamma_pattern(p, 3, WITHOUT_PREFIX, 1) == AWord([2, A1, A0])
    assert gamma_pattern(p, 3, WITH_PREFIX, 0) == AWord([A0, A0, 2, A1INV])
    # each pattern is the pair translation of its S-chunk
    assert gamma_pattern(p, 2, WITH_PREFIX, 1) == translate_pairs(p, [0, 1, 0, 0])
    assert gamma_pattern(p, 4, WITHOUT_PREFIX, 1) == translate_pairs(p, [3, 2, 1, 0, 0, 0, 0, 0])
    assert gamma_pattern(p, 5, WITH_PREFIX, 0) == AWord([A0, A0])
    assert ordering_pattern(p, 1, 3) == AWord([2, A1])
    assert ordering_pattern(p, 1, 4) == AWord([3, 2, A1INV])
    assert ordering_pattern(p, 2, 4) == AWord([3, 2])


@pytest.mark.parametrize("params", [GroupParams(6, 2), GroupParams(6, 3), GroupParams(10, 2), GroupParams(2, 3)], ids=str)
def test_decomposition_bijective(params):
    seen = {}
    for pi in enumerate_alternating(params):
        dec = structured_decomposition(pi)
        assert dec.is_valid()
        assert dec.evaluate() == pi
        assert dec.letter_count == length_LA(pi)
        assert dec.key() not in seen
        seen[dec.key()] = pi
    assert len(seen) == params.alternating_order


def test_decomposition_serializes(worked):
    record = structured_decomposition(worked).to_dict()
    assert record["letter_count"] == 17
    assert len(record["gammas"]) == 6 and len(record["orderings"]) == 4

import pytest
from hypothesis import given, strategies as st

from clgenus.errors import DomainError, ParseError
from clgenus.words import (
    Chain,
    CyclicWord,
    Letter,
    Word,
    cyclic_reduce,
    exponent_sums,
    free_reduce,
    invert,
    is_boundary,
    is_cyclically_reduced,
    is_related,
    least_rotation,
    parse_chain,
    parse_word,
    rotate,
)

from .strategies import raw_words


def test_letters():
    assert Letter.from_char("A") == Letter("a", -1)
    assert Letter("b", 1).inverse().to_char() == "B"
    assert Word("aB").letters == (Letter("a", 1), Letter("b", -1))


def test_free_reduce_examples():
    assert free_reduce("aAb") == "b"
    assert free_reduce("abBA") == ""
    assert free_reduce("abAB") == "abAB"


def test_cyclic_reduce_examples():
    assert cyclic_reduce("abAB") == (Word("abAB"), Word(""))
    core, conj = cyclic_reduce("aabAA")
    assert core == "b" and conj == "aa"


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as e:
        parse_word("ab1")
    assert e.value.position == 2
    with pytest.raises(ParseError):
        parse_word("abc", alphabet="ab")
    with pytest.raises(ParseError) as e:
        parse_chain("ab + a?")
    assert e.value.position == 6


def test_chain_reduces_terms():
    c = Chain(["aabAA", "xX", "abAB"])
    assert c.terms == (Word("b"), Word("abAB"))
    assert c.conjugators == (Word("aa"), Word(""))
    assert str(parse_chain("abAB + ab + BA")) == "abAB + ab + BA"


def test_relatedness():
    assert is_related("aab", "aba")
    assert not is_related("aab", "abb")
    with pytest.raises(DomainError):
        is_related("aB", "Ba")


def test_boundary():
    assert is_boundary(["abAB"])
    assert is_boundary(parse_chain("ab + BA"))
    assert not is_boundary(["ab"])
    assert exponent_sums(["aab", "B"]) == {"a": 2, "b": 0}


def test_cyclic_word_equality():
    assert CyclicWord("abc") == CyclicWord("cab")
    assert CyclicWord("abc") != CyclicWord("acb")
    assert CyclicWord("baab").canonical == "aabb"


@given(raw_words("abc", 0, 16))
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(Word(r.text)) == r
    assert len(r) <= len(w)


@given(raw_words("abc", 0, 16))
def test_invert_involution(w):
    assert invert(invert(w)) == w
    assert free_reduce(Word(w) + invert(w)) == ""


@given(raw_words("abc", 1, 12), st.integers(0, 30))
def test_canonical_rotation_invariant(w, k):
    assert CyclicWord(rotate(w, k)).canonical == CyclicWord(w).canonical


@given(raw_words("abc", 1, 12))
def test_least_rotation_is_minimal(w):
    key = lambda s: [2 * (ord(ch.lower()) - 97) + ch.isupper() for ch in s]
    best = min((rotate(w, k).text for k in range(len(w))), key=key)
    assert rotate(w, least_rotation(w)).text == best


@given(raw_words("abc", 0, 16))
def test_cyclic_reduce_conjugates_back(w):
    core, conj = cyclic_reduce(w)
    assert is_cyclically_reduced(core)
    assert free_reduce(conj + core + invert(conj)) == free_reduce(w)

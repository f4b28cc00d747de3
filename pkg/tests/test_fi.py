import pytest
from hypothesis import given

from clgenus.errors import NotBoundary, PreconditionError
from clgenus.fi import (
    CommutatorFactorization,
    apply_decomposition,
    commutator,
    decide_cl_leq,
    factorize,
    find_decompositions,
)
from clgenus.genus import cl_word
from clgenus.words import Chain, free_reduce

from .strategies import boundary_words


def test_commutator_convention():
    assert commutator("a", "b") == "abAB"


def test_decompositions_are_lexicographic():
    ds = list(find_decompositions("abAB"))
    assert [d.positions for d in ds] == [(0, 1, 2, 3)]
    assert ds[0].x.to_char() == "A" and ds[0].y.to_char() == "B"


def test_decompositions_need_reduced_input():
    with pytest.raises(PreconditionError):
        list(find_decompositions("abBA"))


def test_decomposition_identity_on_commutator():
    d = next(find_decompositions("abAB"))
    rem, (u, t) = apply_decomposition(d)
    assert rem == ""
    assert free_reduce(commutator(u, t) + rem) == "abAB"


@given(boundary_words("abc", 6))
def test_every_decomposition_reconstructs(w):
    core = Chain([w]).terms
    if not core:
        return
    for d in list(find_decompositions(core[0]))[:40]:
        rem, (u, t) = apply_decomposition(d)
        assert free_reduce(commutator(u, t).text + rem.text) == core[0]


def test_decide_examples():
    assert decide_cl_leq("abAB", 1)
    assert not decide_cl_leq("abAB", 0)
    assert decide_cl_leq("", 0)
    # [a,b]^2 is not a single commutator
    assert not decide_cl_leq("abABabAB", 1)
    assert decide_cl_leq("abABabAB", 2)


def test_decide_requires_boundary():
    with pytest.raises(NotBoundary):
        decide_cl_leq("ab", 3)


def test_factorize_square():
    f = factorize("abABabAB")
    assert len(f) == 2
    assert f.product() == "abABabAB"


def test_factorization_json():
    f = factorize("aabbABAB")
    back = CommutatorFactorization.from_json(f.to_json())
    assert back.product() == f.product()


@given(boundary_words("ab", 5))
def test_factorize_has_genus_many_pairs(w):
    f = factorize(w)
    assert len(f) == cl_word(w)
    assert f.product() == free_reduce(w)


@given(boundary_words("ab", 4))
def test_decide_matches_genus(w):
    g = cl_word(w)
    assert decide_cl_leq(w, g)
    if g:
        assert not decide_cl_leq(w, g - 1)

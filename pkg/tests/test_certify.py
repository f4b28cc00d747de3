import pytest
from hypothesis import given, strategies as st

from clgenus.cbi import BlockInterchange, apply_interchange, oracle_distances
from clgenus.certify import (
    NU_WEIGHTS,
    exhaustive_delta_check,
    nu_lower_bound,
    nu_profile,
    nu_total,
    nu_xy,
)
from clgenus.errors import DomainError, NotRelated
from clgenus.words import Letter

from .strategies import positive_words, words_over


def test_nu_xy_examples():
    assert nu_xy("a", "a", "aaa") == 3
    assert nu_xy("a", "b", "ba") == 1
    assert nu_xy("c", "c", "abcd") == 0
    assert nu_xy(Letter("a", 1), Letter("b", 1), "ab") == 1


def test_alphabet_violation():
    with pytest.raises(DomainError):
        nu_total("abx")
    with pytest.raises(DomainError):
        nu_xy("a", "b", "aB")


def test_exhaustive_check():
    rep = exhaustive_delta_check()
    assert rep.maxDelta == 6
    assert rep.minDelta == -6
    assert rep.deltaSixCcCuts == 0
    assert rep.casesChecked == 65536 + 4096
    assert rep.ok


def test_broken_table_is_caught():
    rep = exhaustive_delta_check({**NU_WEIGHTS, "aa": 5})
    assert rep.maxDelta > 6 and not rep.ok


def test_lower_bound_examples():
    assert nu_lower_bound("ababab", "aaabbb") <= 1
    assert nu_lower_bound("abcdd", "dabcd") == 0
    with pytest.raises(NotRelated):
        nu_lower_bound("ab", "aa")


@given(positive_words("abcd", 1, 12), st.integers(0, 20))
def test_rotation_invariance(w, k):
    r = w[k % len(w):] + w[: k % len(w)]
    assert nu_profile(r).counts == nu_profile(w).counts
    assert nu_total(r) == nu_total(w)


@given(positive_words("abcd", 1, 12))
def test_profile_sums_to_length(w):
    assert sum(nu_profile(w).counts.values()) == len(w)


@given(positive_words("abcd", 1, 12), st.data())
def test_single_move_changes_nu_by_at_most_six(w, data):
    n = len(w)
    r = data.draw(st.integers(0, n - 1))
    cuts = sorted(data.draw(st.lists(st.integers(0, n), min_size=3, max_size=3)))
    moved = apply_interchange(w, BlockInterchange(r, tuple(cuts)))
    assert abs(nu_total(w) - nu_total(moved)) <= 6


@pytest.mark.parametrize("n", range(1, 8))
def test_lower_bound_below_oracle(n):
    seen = set()
    for v in words_over("abcd", n):
        key = "".join(sorted(v))
        if key in seen:
            continue
        seen.add(key)
        for w, d in oracle_distances(v).items():
            assert nu_lower_bound(v, w) <= d

import itertools

from hypothesis import strategies as st

from clgenus.words import free_reduce


def raw_words(alphabet="ab", min_size=0, max_size=12):
    letters = list(alphabet) + [ch.upper() for ch in alphabet]
    return st.lists(st.sampled_from(letters), min_size=min_size, max_size=max_size).map("".join)


def reduced_words(alphabet="ab", max_size=12):
    return raw_words(alphabet, 0, max_size).map(lambda s: free_reduce(s).text)


def positive_words(alphabet="ab", min_size=1, max_size=8):
    return st.lists(st.sampled_from(list(alphabet)), min_size=min_size, max_size=max_size).map("".join)


@st.composite
def related_pair(draw, alphabet="ab", min_size=1, max_size=8):
    v = draw(positive_words(alphabet, min_size, max_size))
    w = "".join(draw(st.permutations(list(v))))
    return v, w


@st.composite
def boundary_words(draw, alphabet="ab", max_half=5):
    """Words whose exponent sums vanish: a random word times a shuffled inverse multiset."""
    u = draw(raw_words(alphabet, 0, max_half))
    inv = list(u.swapcase())
    rest = "".join(draw(st.permutations(inv)))
    return free_reduce(u + rest).text


def words_over(alphabet, length):
    return ("".join(p) for p in itertools.product(alphabet, repeat=length))


def related_pairs(alphabet, max_length):
    """Every ordered pair of related positive words of length 1..max_length."""
    for n in range(1, max_length + 1):
        by_counts = {}
        for w in words_over(alphabet, n):
            by_counts.setdefault(tuple(sorted(w)), []).append(w)
        for group in by_counts.values():
            for v in group:
                for w in group:
                    yield v, w

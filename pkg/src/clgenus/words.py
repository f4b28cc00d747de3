"""Words in a free group, cyclic words and chains.

A word is stored as a plain string: a lowercase ASCII letter is a generator,
the matching uppercase letter is its inverse.  ``"abAB"`` is the commutator
``[a, b] = a b a^-1 b^-1``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import DomainError, ParseError

__all__ = [
    "Letter",
    "Word",
    "CyclicWord",
    "Chain",
    "as_word",
    "parse_word",
    "parse_chain",
    "free_reduce",
    "cyclic_reduce",
    "invert",
    "rotate",
    "rotations",
    "least_rotation",
    "is_positive",
    "is_cyclically_reduced",
    "is_related",
    "letter_counts",
    "exponent_sums",
    "is_boundary",
]


class Letter(NamedTuple):
    generator: str
    sign: int

    @classmethod
    def from_char(cls, ch: str) -> "Letter":
        return cls(ch.lower(), -1 if ch.isupper() else 1)

    def to_char(self) -> str:
        return self.generator if self.sign > 0 else self.generator.upper()

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters; ``reduced`` records that it is freely reduced."""

    text: str = ""
    reduced: bool = False

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_char(ch) for ch in self.text)

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self):
        return iter(self.text)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.text[item])
        return self.text[item]

    def __add__(self, other) -> "Word":
        return Word(self.text + as_word(other).text)

    def __mul__(self, other) -> "Word":
        """Group product (concatenation followed by free reduction)."""
        return free_reduce(self + other)

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.text == other.text
        if isinstance(other, str):
            return self.text == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.text)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Word({self.text!r})"

    def __bool__(self) -> bool:
        return bool(self.text)


def as_word(obj) -> Word:
    if isinstance(obj, Word):
        return obj
    if isinstance(obj, str):
        if not all(ch.isascii() and ch.isalpha() for ch in obj):
            raise ParseError(f"not a word: {obj!r}")
        return Word(obj)
    if isinstance(obj, (list, tuple)):
        return Word("".join(Letter(*l).to_char() if not isinstance(l, str) else l for l in obj))
    raise TypeError(f"cannot interpret {type(obj).__name__} as a word")


def parse_word(text: str, alphabet: Iterable[str] | None = None) -> Word:
    """Parse ``text`` letter by letter, without any reduction.

    If ``alphabet`` is given, every letter must be one of its generators
    (case-insensitively); otherwise any ASCII letter is accepted.
    """
    allowed = None if alphabet is None else {g.lower() for g in alphabet}
    for i, ch in enumerate(text):
        if not (ch.isascii() and ch.isalpha()):
            raise ParseError(f"invalid character {ch!r}", i)
        if allowed is not None and ch.lower() not in allowed:
            raise ParseError(f"symbol {ch!r} outside alphabet", i)
    return Word(text)


def free_reduce(w) -> Word:
    w = as_word(w)
    if w.reduced:
        return w
    stack: list[str] = []
    for ch in w.text:
        if stack and stack[-1] == ch.swapcase():
            stack.pop()
        else:
            stack.append(ch)
    return Word("".join(stack), reduced=True)


def cyclic_reduce(w) -> tuple[Word, Word]:
    """Return ``(core, conjugator)`` with ``w = conjugator * core * conjugator^-1``."""
    s = free_reduce(w).text
    i, j = 0, len(s) - 1
    while i < j and s[i] == s[j].swapcase():
        i += 1
        j -= 1
    return Word(s[i : j + 1], reduced=True), Word(s[:i], reduced=True)


def invert(w) -> Word:
    w = as_word(w)
    return Word(w.text[::-1].swapcase(), reduced=w.reduced)


def rotate(w, k: int) -> Word:
    """Cyclic left shift by ``k``: ``rotate("abc", 1) == "bca"``."""
    w = as_word(w)
    if not w.text:
        return w
    k %= len(w.text)
    return Word(w.text[k:] + w.text[:k])


def rotations(w) -> list[Word]:
    w = as_word(w)
    return [rotate(w, k) for k in range(len(w))] or [w]


def is_positive(w) -> bool:
    return all(ch.islower() for ch in as_word(w).text)


def is_cyclically_reduced(w) -> bool:
    s = as_word(w).text
    if any(a == b.swapcase() for a, b in zip(s, s[1:])):
        return False
    return len(s) < 2 or s[0] != s[-1].swapcase()


def _order_key(ch: str) -> int:
    # generators alphabetically, each generator before its inverse
    return 2 * (ord(ch.lower()) - ord("a")) + ch.isupper()


def least_rotation(s: str) -> int:
    """Booth's algorithm: start index of the least rotation of ``s``."""
    n = len(s)
    if n == 0:
        return 0
    keys = [_order_key(ch) for ch in s]
    keys = keys + keys
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = keys[j]
        i = f[j - k - 1]
        while i != -1 and sj != keys[k + i + 1]:
            if sj < keys[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != keys[k + i + 1]:
            if sj < keys[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


class CyclicWord:
    """A word up to rotation, stored as its least rotation."""

    __slots__ = ("canonical",)

    def __init__(self, w):
        w = as_word(w)
        self.canonical = rotate(w, least_rotation(w.text))

    def __eq__(self, other):
        if not isinstance(other, CyclicWord):
            other = CyclicWord(other)
        return self.canonical.text == other.canonical.text

    def __hash__(self):
        return hash(self.canonical.text)

    def __len__(self):
        return len(self.canonical)

    def __str__(self):
        return self.canonical.text

    def __repr__(self):
        return f"CyclicWord({self.canonical.text!r})"


def letter_counts(w) -> Counter:
    return Counter(as_word(w).text)


def is_related(v, w) -> bool:
    """Whether two positive words contain the same number of each letter."""
    v, w = as_word(v), as_word(w)
    for x in (v, w):
        if not is_positive(x):
            raise DomainError(f"{x.text!r} is not a positive word")
    return letter_counts(v) == letter_counts(w)


def exponent_sums(words: Iterable) -> dict[str, int]:
    sums: dict[str, int] = {}
    for w in words:
        for ch in as_word(w).text:
            g = ch.lower()
            sums[g] = sums.get(g, 0) + (-1 if ch.isupper() else 1)
    return sums


class Chain:
    """A formal sum of words.

    Terms are cyclically reduced on construction (commutator length of a
    chain is invariant under conjugating individual terms); the conjugators
    are kept in ``conjugators``.  Terms that reduce to the empty word are
    dropped.
    """

    __slots__ = ("terms", "conjugators")

    def __init__(self, terms: Iterable):
        cores, conj = [], []
        for t in terms:
            core, c = cyclic_reduce(t)
            if core.text:
                cores.append(core)
                conj.append(c)
        self.terms: tuple[Word, ...] = tuple(cores)
        self.conjugators: tuple[Word, ...] = tuple(conj)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def total_length(self) -> int:
        return sum(len(t) for t in self.terms)

    def __eq__(self, other):
        return isinstance(other, Chain) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        return " + ".join(t.text for t in self.terms) if self.terms else ""

    def __repr__(self):
        return f"Chain({str(self)!r})"


def parse_chain(text: str, alphabet: Iterable[str] | None = None) -> Chain:
    """Parse ``"abAB + ab + BA"`` into a chain."""
    parts = [p.strip() for p in text.split("+")]
    words = []
    offset = 0
    for raw, p in zip(text.split("+"), parts):
        lead = len(raw) - len(raw.lstrip())
        try:
            words.append(parse_word(p, alphabet))
        except ParseError as e:
            raise ParseError(f"bad chain term {p!r}", offset + lead + (e.position or 0)) from None
        offset += len(raw) + 1
    return Chain(words)


def is_boundary(c) -> bool:
    """Whether every generator has exponent sum zero over all terms."""
    terms = c.terms if isinstance(c, Chain) else c
    return all(v == 0 for v in exponent_sums(terms).values())

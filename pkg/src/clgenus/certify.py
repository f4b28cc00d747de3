"""Cyclic two-letter counts and the lower bound they give on block-interchange distance.

``nu_xy(w)`` counts cyclic occurrences of ``xy`` in a positive word over
``{a, b, c, d}``; ``nu`` is a fixed signed combination of them.  One block
interchange changes ``nu`` by at most 6, which :func:`exhaustive_delta_check`
confirms by enumerating every configuration of block boundary letters.
Telescoping along a move sequence then bounds the distance from below.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import DomainError, NotRelated
from .words import Letter, as_word, is_related

__all__ = [
    "ALPHABET",
    "NU_WEIGHTS",
    "NuProfile",
    "nu_xy",
    "nu_profile",
    "nu_total",
    "DeltaReport",
    "exhaustive_delta_check",
    "nu_lower_bound",
]

ALPHABET = "abcd"

NU_WEIGHTS: dict[str, int] = {
    "aa": 1, "bc": 1, "cd": 1, "db": 1,
    "ac": -1, "cc": -1, "dd": -1, "da": -1, "bb": -1,
}


def _letters(w) -> str:
    s = as_word(w).text
    bad = [ch for ch in s if ch not in ALPHABET]
    if bad:
        raise DomainError(f"{s!r} is not a positive word over {{a, b, c, d}}")
    return s


def nu_xy(x: str, y: str, w) -> int:
    """Number of cyclic occurrences of ``xy`` in ``w`` (the wrap-around pair included)."""
    s = _letters(w)
    x = x.to_char() if isinstance(x, Letter) else x
    y = y.to_char() if isinstance(y, Letter) else y
    n = len(s)
    return sum(1 for i in range(n) if s[i] == x and s[(i + 1) % n] == y)


@dataclass(frozen=True)
class NuProfile:
    counts: Mapping[str, int]

    def __getitem__(self, xy: str) -> int:
        return self.counts[xy]

    def total(self, weights: Mapping[str, int] = NU_WEIGHTS) -> int:
        return sum(c * self.counts[xy] for xy, c in weights.items())


def nu_profile(w) -> NuProfile:
    s = _letters(w)
    counts = {x + y: 0 for x in ALPHABET for y in ALPHABET}
    n = len(s)
    for i in range(n):
        counts[s[i] + s[(i + 1) % n]] += 1
    return NuProfile(counts)


def nu_total(w, weights: Mapping[str, int] = NU_WEIGHTS) -> int:
    return nu_profile(w).total(weights)


@dataclass(frozen=True)
class DeltaReport:
    maxDelta: int
    minDelta: int
    deltaSixCcCuts: int
    casesChecked: int

    @property
    def ok(self) -> bool:
        return self.maxDelta <= 6 and self.deltaSixCcCuts == 0

    def to_json(self) -> dict:
        return {
            "maxDelta": self.maxDelta,
            "minDelta": self.minDelta,
            "deltaSixCcCuts": self.deltaSixCcCuts,
            "casesChecked": self.casesChecked,
        }


def _weight_matrix(weights: Mapping[str, int]) -> np.ndarray:
    W = np.zeros((4, 4), dtype=np.int64)
    for xy, c in weights.items():
        W[ALPHABET.index(xy[0]), ALPHABET.index(xy[1])] = c
    return W


def _cyclic_nu(W: np.ndarray, words: np.ndarray) -> np.ndarray:
    return W[words, np.roll(words, -1, axis=1)].sum(axis=1)


def _sweep(W: np.ndarray, nblocks: int) -> tuple[int, int, int, int]:
    """All tuples of ``nblocks`` two-letter blocks; moves the last block to second place."""
    C = ALPHABET.index("c")
    grid = np.array(list(itertools.product(range(4), repeat=2 * nblocks)), dtype=np.int64)
    blocks = [grid[:, 2 * i : 2 * i + 2] for i in range(nblocks)]
    # four blocks: x1 x2 x3 x4 -> x1 x4 x3 x2;  three blocks: z1 z2 z3 -> z1 z3 z2
    before = np.hstack(blocks)
    after = np.hstack([blocks[0], blocks[-1]] + blocks[2:-1] + [blocks[1]])
    delta = _cyclic_nu(W, before) - _cyclic_nu(W, after)
    # every junction of the original word is separated by the move
    cut_cc = np.zeros(len(grid), dtype=bool)
    for i in range(nblocks):
        left, right = blocks[i], blocks[(i + 1) % nblocks]
        cut_cc |= (left[:, 1] == C) & (right[:, 0] == C)
    six_cc = int(np.count_nonzero((delta == 6) & cut_cc))
    return int(delta.max()), int(delta.min()), six_cc, len(grid)


def exhaustive_delta_check(weights: Mapping[str, int] = NU_WEIGHTS) -> DeltaReport:
    """Largest change of ``nu`` under a single block interchange, over all boundary letters.

    A block's contribution to the change depends only on its first and last
    letter, so two-letter blocks cover every case: 4^8 four-block tuples
    plus 4^6 three-block tuples for moves with an empty block.
    """
    W = _weight_matrix(weights)
    hi4, lo4, cc4, n4 = _sweep(W, 4)
    hi3, lo3, cc3, n3 = _sweep(W, 3)
    return DeltaReport(max(hi4, hi3), min(lo4, lo3), cc4 + cc3, n4 + n3)


def nu_lower_bound(v, w, weights: Mapping[str, int] = NU_WEIGHTS) -> int:
    """``ceil(|nu(v) - nu(w)| / 6)``, a lower bound on the block-interchange distance."""
    _letters(v), _letters(w)
    if not is_related(v, w):
        raise NotRelated(f"{as_word(v).text!r} and {as_word(w).text!r} are not related")
    return math.ceil(abs(nu_total(v, weights) - nu_total(w, weights)) / 6)

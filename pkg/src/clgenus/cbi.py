"""Cyclic block-interchange distance between positive words.

A move rotates a word and then swaps two of four consecutive blocks:
``w1 w2 w3 w4 -> w1 w4 w3 w2`` (blocks may be empty).  For related words
``v`` and ``w`` the least number of moves equals ``cl(v + w^-1)``, so the
distance is computed by the pairing search of :mod:`clgenus.genus`.  An optimal
pairing also yields an optimal move sequence: every move below is chosen so
that the orbit count of ``sigma p`` grows by exactly two.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DomainError, NotRelated, OutOfBounds, SizeGuard
from .genus import cl_chain
from .words import Chain, CyclicWord, Word, as_word, invert, is_positive, is_related, least_rotation

__all__ = [
    "BlockInterchange",
    "InterchangeSequence",
    "GammaMap",
    "Exceeded",
    "EXCEEDED",
    "interchange_positions",
    "apply_interchange",
    "gamma_map",
    "d_cbi",
    "optimal_pairing",
    "extract_sequence",
    "verify_sequence",
    "neighbors",
    "oracle_bfs",
    "oracle_distances",
]

ORACLE_MAX_LENGTH = 12


@dataclass(frozen=True)
class BlockInterchange:
    """Rotate left by ``rotation``, cut at ``i1 <= i2 <= i3`` and emit ``w1 w4 w3 w2``."""

    rotation: int
    cuts: tuple[int, int, int]

    def to_json(self) -> dict:
        return {"rotation": self.rotation, "cuts": list(self.cuts)}

    @classmethod
    def from_json(cls, data: dict) -> "BlockInterchange":
        return cls(int(data["rotation"]), tuple(int(c) for c in data["cuts"]))


@dataclass(frozen=True)
class InterchangeSequence:
    start: Word
    moves: tuple[BlockInterchange, ...] = ()

    def __len__(self):
        return len(self.moves)

    def words(self) -> list[Word]:
        out = [self.start]
        for m in self.moves:
            out.append(apply_interchange(out[-1], m))
        return out

    def result(self) -> Word:
        return self.words()[-1]

    def to_json(self) -> dict:
        return {"start": self.start.text, "moves": [m.to_json() for m in self.moves]}

    @classmethod
    def from_json(cls, data: dict) -> "InterchangeSequence":
        return cls(Word(data["start"]), tuple(BlockInterchange.from_json(m) for m in data["moves"]))


@dataclass(frozen=True)
class GammaMap:
    """Index permutation of ``v + w^-1`` induced by a block interchange on ``v``.

    Indices ``0..n-1`` are the letters of ``v``; ``n..2n-1`` (the letters of
    ``w^-1``) are fixed.
    """

    cuts: tuple[int, ...]
    perm: tuple[int, ...] = field(repr=False)

    @property
    def kind(self) -> str:
        return "two-block" if len(self.cuts) == 2 else "three-block"


class Exceeded:
    """Marker returned by :func:`oracle_bfs` when the distance exceeds the cap."""

    def __repr__(self):
        return "Exceeded"


EXCEEDED = Exceeded()


def interchange_positions(n: int, m: BlockInterchange) -> list[int]:
    """``newpos[i]``: where the letter at position ``i`` ends up after ``m``."""
    i1, i2, i3 = m.cuts
    if not (0 <= i1 <= i2 <= i3 <= n):
        raise OutOfBounds(f"cuts {m.cuts} invalid for length {n}")
    r = m.rotation % n if n else 0
    start4, start3 = i1, i1 + (n - i3)
    start2 = start3 + (i3 - i2)
    newpos = [0] * n
    for i in range(n):
        q = (i - r) % n
        if q < i1:
            newpos[i] = q
        elif q < i2:
            newpos[i] = start2 + (q - i1)
        elif q < i3:
            newpos[i] = start3 + (q - i2)
        else:
            newpos[i] = start4 + (q - i3)
    return newpos


def apply_interchange(v, m: BlockInterchange) -> Word:
    v = as_word(v)
    if not is_positive(v):
        raise DomainError(f"{v.text!r} is not a positive word")
    n = len(v)
    if n == 0:
        if m.cuts != (0, 0, 0):
            raise OutOfBounds(f"cuts {m.cuts} invalid for the empty word")
        return v
    out = [""] * n
    for i, j in enumerate(interchange_positions(n, m)):
        out[j] = v.text[i]
    return Word("".join(out))


def gamma_map(n: int, cuts: tuple[int, ...]) -> GammaMap:
    """Two cuts ``(i1, i2)``: ``v1 v2 v3 -> v1 v3 v2``; three cuts: ``v1 v2 v3 v4 -> v1 v4 v3 v2``."""
    # for two cuts, v3 plays the role of w4 and w3 is empty
    full = (cuts[0], cuts[1], cuts[1]) if len(cuts) == 2 else tuple(cuts)
    pos = interchange_positions(n, BlockInterchange(0, full))
    return GammaMap(tuple(cuts), tuple(pos) + tuple(range(n, 2 * n)))


def _check_related(v, w) -> tuple[Word, Word]:
    v, w = as_word(v), as_word(w)
    try:
        ok = is_related(v, w)
    except DomainError as e:
        raise NotRelated(str(e)) from None
    if not ok:
        raise NotRelated(f"{v.text!r} and {w.text!r} are not related")
    return v, w


def d_cbi(v, w, workers: int | None = None) -> int:
    v, w = _check_related(v, w)
    if CyclicWord(v) == CyclicWord(w):
        return 0
    return cl_chain(Chain([v, invert(w)]), workers=workers).genus


def optimal_pairing(v, w, workers: int | None = None) -> tuple[list[int], int]:
    """Optimal pairing of ``v + w^-1`` as a map ``f`` from positions of ``v`` to positions of ``w``."""
    v, w = _check_related(v, w)
    n = len(v)
    cert = cl_chain(Chain([v, invert(w)]), workers=workers)
    # chain positions n..2n-1 read w backwards
    f = [2 * n - 1 - cert.pairing[i] for i in range(n)]
    return f, cert.genus


def _beta(f: list[int]) -> list[int]:
    # square of alpha = sigma o p restricted to the letters of v
    n = len(f)
    finv = [0] * n
    for i, j in enumerate(f):
        finv[j] = i
    return [(finv[(f[i] - 1) % n] + 1) % n for i in range(n)]


def _cycles(perm: list[int]) -> int:
    seen = [False] * len(perm)
    c = 0
    for x in range(len(perm)):
        if not seen[x]:
            c += 1
            while not seen[x]:
                seen[x] = True
                x = perm[x]
    return c


def _surgery_move(beta: list[int]) -> BlockInterchange:
    """Move that splits orbits of ``sigma p``, located from the closest non-fixed point."""
    n = len(beta)
    M, i0 = min(((beta[i] - i) % n, i) for i in range(n) if beta[i] != i)
    K = next(k for k in range(1, n) if beta[(i0 + k) % n] != (i0 + k) % n)
    if not 0 < K < M:
        raise AssertionError(f"secondary point outside the minimal arc: K={K}, M={M}")
    i1 = (i0 + K) % n
    orbit = {i0}
    x = beta[i0]
    while x != i0:
        orbit.add(x)
        x = beta[x]
    if i1 in orbit:
        return BlockInterchange(i0, (K, M, M))
    i3 = (beta[i1] - i0) % n
    if not M < i3:
        raise AssertionError(f"points not cyclically ordered: K={K}, M={M}, i3={i3}")
    return BlockInterchange(i0, (K, M, i3))


def extract_sequence(v, w, workers: int | None = None) -> InterchangeSequence:
    """An optimal sequence of moves taking ``v`` to a rotation of ``w``."""
    v, w = _check_related(v, w)
    if CyclicWord(v) == CyclicWord(w):
        return InterchangeSequence(v, ())
    f, distance = optimal_pairing(v, w, workers=workers)
    n = len(v)
    cur = v
    moves = []
    beta = _beta(f)
    orbits = _cycles(beta)
    while orbits < n:
        m = _surgery_move(beta)
        newpos = interchange_positions(n, m)
        f2 = [0] * n
        for i, j in enumerate(newpos):
            f2[j] = f[i]
        beta2 = _beta(f2)
        orbits2 = _cycles(beta2)
        if orbits2 != orbits + 2:
            raise AssertionError(f"orbit surgery changed {orbits} orbits into {orbits2}")
        cur = apply_interchange(cur, m)
        moves.append(m)
        f, beta, orbits = f2, beta2, orbits2
    if len(moves) != distance or CyclicWord(cur) != CyclicWord(w):
        raise AssertionError("extracted sequence does not realise the distance")
    return InterchangeSequence(v, tuple(moves))


def verify_sequence(v, w, s: InterchangeSequence) -> bool:
    """Whether ``s`` starts at ``v`` and ends at a rotation of ``w``."""
    v, w = as_word(v), as_word(w)
    if s.start.text != v.text:
        return False
    try:
        end = s.result()
    except (OutOfBounds, DomainError, ValueError, TypeError):
        return False
    return CyclicWord(end) == CyclicWord(w)


def _canon(s: str) -> str:
    k = least_rotation(s)
    return s[k:] + s[:k]


@lru_cache(maxsize=4096)
def neighbors(s: str) -> frozenset[str]:
    """Canonical forms of every word one move away from ``s`` (itself excluded)."""
    n = len(s)
    raw = set()
    for r in range(n):
        t = s[r:] + s[:r]
        for i1 in range(n + 1):
            for i2 in range(i1, n + 1):
                for i3 in range(i2, n + 1):
                    raw.add(t[:i1] + t[i3:] + t[i2:i3] + t[i1:i2])
    here = _canon(s)
    return frozenset(c for c in map(_canon, raw) if c != here)


def _oracle_args(v, w, max_length):
    v, w = _check_related(v, w)
    if len(v) > max_length:
        raise SizeGuard(f"length {len(v)} exceeds oracle limit {max_length}")
    return _canon(v.text), _canon(w.text)


def oracle_bfs(v, w, cap: int | None = None, max_length: int = ORACLE_MAX_LENGTH):
    """Exact distance by breadth-first search on rotation classes.

    Returns :data:`EXCEEDED` when the distance is larger than ``cap``
    (default ``len(v)``).
    """
    src, dst = _oracle_args(v, w, max_length)
    if cap is None:
        cap = len(src)
    if src == dst:
        return 0
    frontier, seen = [src], {src}
    for depth in range(1, cap + 1):
        nxt = []
        for s in frontier:
            for t in neighbors(s):
                if t == dst:
                    return depth
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
        if not frontier:
            break
    return EXCEEDED


def oracle_distances(v, max_length: int = ORACLE_MAX_LENGTH) -> dict[str, int]:
    """Distances from ``v`` to every rotation class of related words."""
    v = as_word(v)
    if not is_positive(v):
        raise DomainError(f"{v.text!r} is not a positive word")
    if len(v) > max_length:
        raise SizeGuard(f"length {len(v)} exceeds oracle limit {max_length}")
    src = _canon(v.text)
    dist = {src: 0}
    queue = deque([src])
    while queue:
        s = queue.popleft()
        for t in neighbors(s):
            if t not in dist:
                dist[t] = dist[s] + 1
                queue.append(t)
    return dist

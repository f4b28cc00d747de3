"""Exact commutator length of chains in a free group via pairings.

A chain ``w_1 + ... + w_k`` of total length ``L`` is flattened onto the index
set ``0..L-1``.  ``sigma`` advances one position inside each term (cyclically)
and a *pairing* is a fixed-point-free involution matching every letter with an
occurrence of its inverse.  For a pairing ``p`` whose terms are all linked
together (one connected component),

    genus = L/4 - orb(sigma p)/2 + (2 - k)/2,

and the commutator length is the minimum over pairings.  A pairing that splits
the terms into ``c`` separately closed groups describes a disconnected surface;
its genus is the sum over the groups, which is the same expression with
``(2c - k)/2`` in place of ``(2 - k)/2``.  The search minimises that quantity,
so chains such as ``g + g^-1 + c`` are handled correctly.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .errors import NotBoundary
from .words import Chain, Word, as_word, is_boundary, is_cyclically_reduced

__all__ = [
    "IndexedChain",
    "Pairing",
    "GenusCertificate",
    "orbit_count",
    "component_count",
    "genus_from_orbits",
    "max_orbits",
    "cl_chain",
    "cl_word",
    "cl_unreduced_word",
    "cl_at_most",
    "verify_certificate",
    "explain_certificate",
]


@dataclass(frozen=True)
class IndexedChain:
    """Flattened index set of a chain together with the permutation ``sigma``."""

    terms: tuple[str, ...]
    letters: str
    offsets: tuple[int, ...]
    sigma: tuple[int, ...]
    term_of: tuple[int, ...]
    fixed_point_free: bool

    @classmethod
    def from_terms(cls, terms: Sequence) -> "IndexedChain":
        texts = tuple(as_word(t).text for t in terms if as_word(t).text)
        offsets, sigma, term_of = [], [], []
        pos = 0
        for j, t in enumerate(texts):
            offsets.append(pos)
            n = len(t)
            sigma.extend(pos + (i + 1) % n for i in range(n))
            term_of.extend([j] * n)
            pos += n
        # alpha = sigma o p has no fixed point as long as no letter is followed
        # (cyclically) by its own inverse
        fpf = all(is_cyclically_reduced(t) for t in texts)
        return cls(texts, "".join(texts), tuple(offsets), tuple(sigma), tuple(term_of), fpf)

    @classmethod
    def from_chain(cls, chain: Chain) -> "IndexedChain":
        return cls.from_terms(chain.terms)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def k(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class Pairing:
    map: tuple[int, ...]

    def __len__(self):
        return len(self.map)

    def __getitem__(self, i):
        return self.map[i]

    def to_list(self) -> list[int]:
        return list(self.map)


@dataclass(frozen=True)
class GenusCertificate:
    pairing: Pairing
    orbits: int
    genus: int
    components: int = 1

    def to_json(self) -> dict:
        return {"pairing": self.pairing.to_list(), "orbits": self.orbits, "genus": self.genus}

    @classmethod
    def from_json(cls, data: dict) -> "GenusCertificate":
        return cls(Pairing(tuple(data["pairing"])), int(data["orbits"]), int(data["genus"]))


def orbit_count(sigma: Sequence[int], pairing) -> int:
    """Number of cycles of ``x -> sigma[pairing[x]]``."""
    p = pairing.map if isinstance(pairing, Pairing) else pairing
    n = len(sigma)
    seen = bytearray(n)
    cycles = 0
    for x in range(n):
        if seen[x]:
            continue
        cycles += 1
        while not seen[x]:
            seen[x] = 1
            x = sigma[p[x]]
    return cycles


def component_count(ic: IndexedChain, pairing) -> int:
    """Number of groups of terms linked to each other by the pairing."""
    p = pairing.map if isinstance(pairing, Pairing) else pairing
    parent = list(range(ic.k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x, y in enumerate(p):
        a, b = find(ic.term_of[x]), find(ic.term_of[y])
        if a != b:
            parent[a] = b
    return sum(1 for j in range(ic.k) if find(j) == j)


def genus_from_orbits(length: int, orbits: int, k: int, components: int = 1) -> int:
    twice = length // 2 - orbits - k + 2 * components
    if length % 2 or twice % 2 or twice < 0:
        raise ArithmeticError(
            f"non-integral or negative genus: L={length} orbits={orbits} k={k} c={components}"
        )
    return twice // 2


def _pairing_problem(ic: IndexedChain) -> str | None:
    """Reason why ``ic`` admits no pairing, or None."""
    counts: dict[str, int] = {}
    for ch in ic.letters:
        counts[ch] = counts.get(ch, 0) + 1
    for ch, n in counts.items():
        if counts.get(ch.swapcase(), 0) != n:
            return f"generator {ch.lower()!r} has unbalanced occurrences"
    return None


class _Search:
    """Depth-first enumeration of pairings with branch and bound.

    The partial permutation ``alpha = sigma o p`` is kept as a set of disjoint
    paths; adding a pair (x, y) adds the edges x -> sigma(y) and
    y -> sigma(x), each of which either merges two paths or closes one into
    a cycle.
    """

    def __init__(self, ic: IndexedChain, penalize_components: bool, target: int | None):
        self.ic = ic
        self.L = len(ic)
        self.penalize = penalize_components and ic.k > 1
        self.target = target
        letters = ic.letters
        self.partners = [
            [y for y in range(self.L) if letters[y] == letters[x].swapcase()] for x in range(self.L)
        ]
        self.parity = (ic.k + self.L // 2) % 2
        self.pair = [-1] * self.L
        self.start_of_end = list(range(self.L))
        self.end_of_start = list(range(self.L))
        self.size = [1] * self.L
        self.closed = 0
        self.in_closed = 0
        self.best_score: int | None = None
        self.best_pairing: tuple[int, ...] | None = None
        self.best_orbits = 0
        self.leaves = 0

    # path bookkeeping -------------------------------------------------
    def _link(self, u: int, t: int):
        s = self.start_of_end[u]
        if s == t:
            self.closed += 1
            self.in_closed += self.size[t]
            return (True, t, None)
        e = self.end_of_start[t]
        self.end_of_start[s] = e
        self.start_of_end[e] = s
        self.size[s] += self.size[t]
        return (False, s, e)

    def _unlink(self, u: int, t: int, rec):
        closed, a, e = rec
        if closed:
            self.closed -= 1
            self.in_closed -= self.size[a]
            return
        s = a
        self.size[s] -= self.size[t]
        self.end_of_start[s] = u
        self.start_of_end[e] = t

    # bound --------------------------------------------------------------
    def _bound(self, remaining_pairs: int) -> int:
        future = 2 * remaining_pairs
        if self.ic.fixed_point_free:
            future = min(future, (self.L - self.in_closed) // 2)
        ub = self.closed + future
        if (ub - self.parity) % 2:
            ub -= 1
        return ub - 2 if self.penalize else ub

    def _score_leaf(self) -> tuple[int, int]:
        orbits = self.closed
        if self.penalize:
            return orbits - 2 * component_count(self.ic, self.pair), orbits
        return orbits, orbits

    def run(self, forced: tuple[int, int] | None = None) -> None:
        if forced is not None:
            x, y = forced
            self._assign(x, y)
            self._dfs(1, self.L // 2 - 1)
        else:
            self._dfs(0, self.L // 2)

    def _assign(self, x, y):
        sigma = self.ic.sigma
        self.pair[x], self.pair[y] = y, x
        r1 = self._link(x, sigma[y])
        r2 = self._link(y, sigma[x])
        return r1, r2

    def _release(self, x, y, recs):
        sigma = self.ic.sigma
        r1, r2 = recs
        self._unlink(y, sigma[x], r2)
        self._unlink(x, sigma[y], r1)
        self.pair[x] = self.pair[y] = -1

    def _done(self) -> bool:
        return self.target is not None and self.best_score is not None and self.best_score >= self.target

    def _dfs(self, cursor: int, remaining: int) -> None:
        if remaining == 0:
            self.leaves += 1
            score, orbits = self._score_leaf()
            if self.best_score is None or score > self.best_score:
                self.best_score, self.best_orbits = score, orbits
                self.best_pairing = tuple(self.pair)
            return
        if self.best_score is not None and self._bound(remaining) <= self.best_score:
            return
        pair = self.pair
        while pair[cursor] != -1:
            cursor += 1
        x = cursor
        for y in self.partners[x]:
            if pair[y] != -1:
                continue
            recs = self._assign(x, y)
            self._dfs(x + 1, remaining - 1)
            self._release(x, y, recs)
            if self._done():
                return


def _run_branch(args):
    ic, penalize, target, forced = args
    s = _Search(ic, penalize, target)
    s.run(forced)
    return s.best_score, s.best_orbits, s.best_pairing


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        env = os.environ.get("CLGENUS_THREADS")
        workers = int(env) if env else 1
    return max(1, workers)


def _best_pairing(ic: IndexedChain, penalize: bool, target=None, workers=None):
    """Return ``(orbits, pairing)`` of the first optimal pairing in enumeration order."""
    if len(ic) == 0:
        return 0, ()
    problem = _pairing_problem(ic)
    if problem:
        raise NotBoundary(problem)
    workers = _resolve_workers(workers)
    if workers == 1:
        s = _Search(ic, penalize, target)
        s.run()
        return s.best_orbits, s.best_pairing
    # fan out over the partners of position 0; keeping the earliest branch
    # among equal scores reproduces the serial witness
    tasks = [(ic, penalize, target, (0, y)) for y in range(len(ic)) if ic.letters[y] == ic.letters[0].swapcase()]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_run_branch, tasks))
    best = None
    for score, orbits, pairing in results:
        if pairing is None:
            continue
        if best is None or score > best[0]:
            best = (score, orbits, pairing)
    return best[1], best[2]


def _indexed(chain) -> IndexedChain:
    if not isinstance(chain, Chain):
        chain = Chain([chain]) if isinstance(chain, (str, Word)) else Chain(chain)
    if not is_boundary(chain):
        raise NotBoundary(f"{chain} is not in the commutator subgroup")
    return IndexedChain.from_chain(chain)


def max_orbits(chain, target: int | None = None, workers: int | None = None) -> tuple[int, Pairing]:
    """Maximum of ``orb(sigma p)`` over all pairings, with a witness.

    With ``target`` the search stops as soon as a pairing reaching that many
    orbits is found.
    """
    ic = _indexed(chain)
    o, p = _best_pairing(ic, penalize=False, target=target, workers=workers)
    return o, Pairing(p)


def _certificate(ic: IndexedChain, orbits: int, pairing: tuple[int, ...]) -> GenusCertificate:
    if ic.k == 0:
        return GenusCertificate(Pairing(()), 0, 0, 0)
    c = component_count(ic, pairing)
    return GenusCertificate(Pairing(pairing), orbits, genus_from_orbits(len(ic), orbits, ic.k, c), c)


def cl_chain(chain, workers: int | None = None) -> GenusCertificate:
    """Commutator length of a chain (or a single word) with its certificate."""
    ic = _indexed(chain)
    orbits, pairing = _best_pairing(ic, penalize=True, workers=workers)
    return _certificate(ic, orbits, pairing)


def cl_word(w, workers: int | None = None) -> int:
    return cl_chain(Chain([w]), workers=workers).genus


def cl_unreduced_word(w, workers: int | None = None) -> GenusCertificate:
    """Commutator length of a single word, searching pairings of ``w`` as written.

    Cancelling pairs of letters may be matched to each other, so the minimum
    is the same as for the reduced word.
    """
    w = as_word(w)
    if not is_boundary([w]):
        raise NotBoundary(f"{w} is not in the commutator subgroup")
    ic = IndexedChain.from_terms([w])
    orbits, pairing = _best_pairing(ic, penalize=False, workers=workers)
    return _certificate(ic, orbits, pairing)


def cl_at_most(chain, k: int, workers: int | None = None) -> bool:
    """Decide ``cl(chain) <= k`` with an early-exit search."""
    ic = _indexed(chain)
    if ic.k == 0:
        return k >= 0
    # genus <= k  <=>  orbits - 2c >= L/2 - k_terms - 2k
    target = len(ic) // 2 - ic.k - 2 * k
    orbits, pairing = _best_pairing(ic, penalize=True, target=target, workers=workers)
    return _certificate(ic, orbits, pairing).genus <= k


def explain_certificate(chain, pairing, k: int) -> str | None:
    """Reason why ``pairing`` fails to certify ``cl(chain) <= k``, or None if it does."""
    if not isinstance(chain, Chain):
        chain = Chain([chain]) if isinstance(chain, (str, Word)) else Chain(chain)
    ic = IndexedChain.from_chain(chain)
    p = pairing.map if isinstance(pairing, Pairing) else tuple(pairing)
    L = len(ic)
    if len(p) != L:
        return "length-mismatch"
    if not all(isinstance(y, int) and 0 <= y < L for y in p):
        return "out-of-range"
    for x, y in enumerate(p):
        if y == x:
            return "fixed-point"
        if p[y] != x:
            return "not-involution"
        if ic.letters[y] != ic.letters[x].swapcase():
            return "not-inverse"
    if ic.k == 0:
        return None if k >= 0 else "exceeds-bound"
    orbits = orbit_count(ic.sigma, p)
    genus = genus_from_orbits(L, orbits, ic.k, component_count(ic, p))
    return None if genus <= k else "exceeds-bound"


def verify_certificate(chain, pairing, k: int) -> bool:
    """Linear-time check that ``pairing`` witnesses ``cl(chain) <= k``."""
    return explain_certificate(chain, pairing, k) is None

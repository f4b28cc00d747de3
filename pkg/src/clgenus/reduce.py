"""Encoders and decoders for the hardness reductions.

* 3-PARTITION to block-interchange distance over ``{a, b, c, d}``, with a
  decoder turning a partition into a witness of length ``3n``.
* The letter substitution ``lambda`` to the binary alphabet ``{x, y}`` and the
  matching lift of block interchanges.
* Block-interchange distance to the commutator length of single words.
* Exact bin packing to chains of genus zero.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path

from .cbi import BlockInterchange, InterchangeSequence, apply_interchange
from .errors import DomainError, InvalidInstance, NotASolution, NotRelated, OutOfBounds
from .genus import cl_unreduced_word
from .words import Chain, Word, as_word, invert, is_related, rotate

__all__ = [
    "ThreePartitionInstance",
    "EbpInstance",
    "CbiInstance",
    "SHIPPED_INSTANCES",
    "encode_3p",
    "solve_3p",
    "decode_3p_solution",
    "EPSILON",
    "lambda_repetitions",
    "lambda_encode",
    "lift_interchange",
    "lift_sequence",
    "cbi_to_cl_single",
    "single_word_distance",
    "encode_ebp",
    "load_instance",
]


@dataclass(frozen=True)
class ThreePartitionInstance:
    n: int
    N: int
    a: tuple[int, ...]
    solution: tuple[tuple[int, int, int], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.solution is not None:
            object.__setattr__(self, "solution", tuple(tuple(int(i) for i in t) for t in self.solution))

    def validate(self) -> "ThreePartitionInstance":
        if self.n < 1 or self.N < 1:
            raise InvalidInstance(f"n and N must be positive (n={self.n}, N={self.N})")
        if len(self.a) != 3 * self.n:
            raise InvalidInstance(f"expected {3 * self.n} integers, got {len(self.a)}")
        for i, x in enumerate(self.a):
            if not 4 * x > self.N:
                raise InvalidInstance(f"a[{i}] = {x} is not greater than N/4 = {self.N / 4}")
            if not 2 * x < self.N:
                raise InvalidInstance(f"a[{i}] = {x} is not less than N/2 = {self.N / 2}")
        if sum(self.a) != self.n * self.N:
            raise InvalidInstance(f"sum of a is {sum(self.a)}, expected nN = {self.n * self.N}")
        return self

    def to_json(self) -> dict:
        out = {"n": self.n, "N": self.N, "a": list(self.a)}
        if self.solution is not None:
            out["solution"] = [list(t) for t in self.solution]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ThreePartitionInstance":
        try:
            return cls(int(data["n"]), int(data["N"]), tuple(data["a"]), data.get("solution"))
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInstance(f"malformed 3-PARTITION instance: {e}") from None


@dataclass(frozen=True)
class EbpInstance:
    sizes: tuple[int, ...]
    N: int
    B: int

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(x) for x in self.sizes))

    def validate(self) -> "EbpInstance":
        if self.N < 1 or self.B < 1 or not self.sizes or min(self.sizes) < 1:
            raise InvalidInstance("sizes, N and B must be positive")
        if sum(self.sizes) != self.N * self.B:
            raise InvalidInstance(f"sum of sizes is {sum(self.sizes)}, expected N*B = {self.N * self.B}")
        return self

    def to_json(self) -> dict:
        return {"sizes": list(self.sizes), "N": self.N, "B": self.B}

    @classmethod
    def from_json(cls, data: dict) -> "EbpInstance":
        try:
            return cls(tuple(data["sizes"]), int(data["N"]), int(data["B"]))
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInstance(f"malformed bin packing instance: {e}") from None


@dataclass(frozen=True)
class CbiInstance:
    v: Word
    w: Word
    k: int

    def __post_init__(self):
        try:
            ok = is_related(self.v, self.w)
        except DomainError as e:
            raise NotRelated(str(e)) from None
        if not ok:
            raise NotRelated(f"{self.v} and {self.w} are not related")

    def to_json(self) -> dict:
        return {"v": self.v.text, "w": self.w.text, "k": self.k}


SHIPPED_INSTANCES = {
    "solvable-n1": ThreePartitionInstance(1, 12, (4, 4, 4), ((0, 1, 2),)),
    "solvable-n2": ThreePartitionInstance(2, 12, (4, 4, 4, 4, 4, 4), ((0, 1, 2), (3, 4, 5))),
    "unsolvable-n2": ThreePartitionInstance(2, 16, (5, 5, 5, 5, 5, 7)),
}


def encode_3p(inst: ThreePartitionInstance) -> CbiInstance:
    inst.validate()
    n, N = inst.n, inst.N
    v = "a" * (n + 1) + "".join("b" + "c" * x + "d" for x in inst.a) + "b"
    w = ("a" + "c" * N + "ddd") * n + "a" + "b" * (3 * n + 1)
    return CbiInstance(Word(v), Word(w), 3 * n)


def solve_3p(inst: ThreePartitionInstance) -> tuple[tuple[int, int, int], ...] | None:
    """A partition into triples summing to ``N`` by backtracking, or None (small instances only)."""
    inst.validate()
    a, N = inst.a, inst.N

    def go(left: tuple[int, ...]):
        if not left:
            return ()
        i = left[0]
        for j, k in itertools.combinations(left[1:], 2):
            if a[i] + a[j] + a[k] == N:
                rest = go(tuple(x for x in left if x not in (i, j, k)))
                if rest is not None:
                    return ((i, j, k),) + rest
        return None

    return go(tuple(range(len(a))))


def _check_partition(inst: ThreePartitionInstance, partition) -> list[tuple[int, ...]]:
    triples = [tuple(int(i) for i in t) for t in partition]
    if len(triples) != inst.n or any(len(t) != 3 for t in triples):
        raise NotASolution(f"expected {inst.n} triples")
    flat = sorted(i for t in triples for i in t)
    if flat != list(range(3 * inst.n)):
        raise NotASolution("triples must use every index 0..3n-1 exactly once")
    for t in triples:
        s = sum(inst.a[i] for i in t)
        if s != inst.N:
            raise NotASolution(f"triple {t} sums to {s}, not {inst.N}")
    return triples


def _layout(inst, groups, tail) -> str:
    body = "".join("a" + "c" * sum(inst.a[i] for i in g) + "d" * len(g) for g in groups)
    # a block already moved away leaves two adjacent b's behind
    rest = "".join(("c" * x + "d" if i in tail else "") + "b" for i, x in enumerate(inst.a))
    return body + "a" + "b" + rest


def decode_3p_solution(inst: ThreePartitionInstance, partition) -> InterchangeSequence:
    """Witness of length ``3n`` for the encoded instance, built from a solution.

    Indices in ``partition`` are 0-based.  Each move lifts one block
    ``c^(a_i) d`` out of the ``b`` region: the first block of a triple goes
    between two ``a``'s, the other two just in front of the ``d``'s already
    placed there.
    """
    inst.validate()
    triples = _check_partition(inst, partition)
    enc = encode_3p(inst)
    n = len(enc.v)
    groups: list[list[int]] = [[] for _ in triples]
    tail = list(range(3 * inst.n))
    intended = _layout(inst, groups, tail)
    actual = enc.v
    offset = 0  # actual == rotate(intended, offset)
    moves = []
    for g, t in enumerate(triples):
        for i in t:
            # source block inside the tail
            src = sum(1 + sum(inst.a[j] for j in h) + len(h) for h in groups) + 2
            src += sum(inst.a[j] + 2 if j in tail else 1 for j in range(i))
            size = inst.a[i] + 1
            # insertion point: in front of the d's of group g
            dest = sum(1 + sum(inst.a[j] for j in h) + len(h) for h in groups[:g])
            dest += 1 + sum(inst.a[j] for j in groups[g])
            r = (src + size) % n
            q = (dest - r) % n
            m = BlockInterchange((r - offset) % n, (q, n - size, n - size))
            actual = apply_interchange(actual, m)
            moves.append(m)
            groups[g].append(i)
            tail.remove(i)
            intended = _layout(inst, groups, tail)
            offset = (intended + intended).find(actual.text)
            if offset < 0:
                raise AssertionError("decoded move left the intended layout")
    seq = InterchangeSequence(enc.v, tuple(moves))
    if intended != enc.w.text:
        raise AssertionError("decoded sequence does not reach the target word")
    return seq


EPSILON = {"a": 2, "b": 3, "c": 4, "d": 5}


def lambda_repetitions(n: int) -> int:
    return 4 * n * n + 1


def _blocks(v: Word) -> list[str]:
    bad = [ch for ch in v.text if ch not in EPSILON]
    if bad:
        raise DomainError(f"{v.text!r} is not a positive word over {{a, b, c, d}}")
    R = lambda_repetitions(len(v))
    return [("x" + "y" * EPSILON[ch] + "x") * R for ch in v.text]


def lambda_encode(v) -> Word:
    """Replace each letter ``l`` by ``(x y^e x)^(4n^2+1)`` with ``e = EPSILON[l]``, ``n = |v|``."""
    return Word("".join(_blocks(as_word(v))))


def lift_interchange(v, m: BlockInterchange) -> BlockInterchange:
    """The move on ``lambda(v)`` that cuts at the images of the cuts of ``m``."""
    v = as_word(v)
    n = len(v)
    i1, i2, i3 = m.cuts
    if not (0 <= i1 <= i2 <= i3 <= n):
        raise OutOfBounds(f"cuts {m.cuts} invalid for length {n}")
    blocks = _blocks(v)
    r = m.rotation % n if n else 0
    sizes = [len(b) for b in blocks]
    prefix = list(itertools.accumulate(sizes, initial=0))
    rotated = list(itertools.accumulate(sizes[r:] + sizes[:r], initial=0))
    return BlockInterchange(prefix[r], (rotated[i1], rotated[i2], rotated[i3]))


def lift_sequence(seq: InterchangeSequence) -> InterchangeSequence:
    moves = []
    cur = seq.start
    for m in seq.moves:
        moves.append(lift_interchange(cur, m))
        cur = apply_interchange(cur, m)
    return InterchangeSequence(lambda_encode(seq.start), tuple(moves))


def cbi_to_cl_single(v, w) -> list[Word]:
    """The words ``v w~^-1`` over all rotations ``w~`` of ``w``, left unreduced."""
    v, w = as_word(v), as_word(w)
    try:
        ok = is_related(v, w)
    except DomainError as e:
        raise NotRelated(str(e)) from None
    if not ok:
        raise NotRelated(f"{v.text!r} and {w.text!r} are not related")
    return [v + invert(rotate(w, k)) for k in range(len(w))]


def single_word_distance(v, w, workers: int | None = None) -> int:
    """Minimum commutator length over :func:`cbi_to_cl_single`."""
    words = cbi_to_cl_single(v, w)
    if not words:
        return 0
    return min(cl_unreduced_word(u, workers=workers).genus for u in words)


def encode_ebp(inst: EbpInstance) -> Chain:
    """``[a, b^n1] + ... + [a, b^nk] + [a^N, b^B]^-1``."""
    inst.validate()
    terms = ["a" + "b" * m + "A" + "B" * m for m in inst.sizes]
    terms.append("b" * inst.B + "a" * inst.N + "B" * inst.B + "A" * inst.N)
    return Chain(terms)


def load_instance(path, kind: str):
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if kind == "three-partition":
        return ThreePartitionInstance.from_json(data)
    if kind == "ebp":
        return EbpInstance.from_json(data)
    raise ValueError(f"unknown instance kind {kind!r}")

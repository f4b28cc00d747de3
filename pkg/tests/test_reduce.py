import json
import random

import pytest
from hypothesis import given

from clgenus.cbi import BlockInterchange, apply_interchange, d_cbi, extract_sequence, verify_sequence
from clgenus.certify import nu_lower_bound, nu_total
from clgenus.errors import InvalidInstance, NotASolution, NotRelated, OutOfBounds
from clgenus.genus import cl_chain
from clgenus.reduce import (
    SHIPPED_INSTANCES,
    CbiInstance,
    EbpInstance,
    ThreePartitionInstance,
    cbi_to_cl_single,
    decode_3p_solution,
    encode_3p,
    encode_ebp,
    lambda_encode,
    lift_interchange,
    lift_sequence,
    load_instance,
    single_word_distance,
    solve_3p,
)
from clgenus.words import CyclicWord, Word, is_boundary, is_related

from .strategies import related_pair, related_pairs

SMALL = SHIPPED_INSTANCES["solvable-n1"]


def test_encode_small_instance():
    enc = encode_3p(SMALL)
    assert enc.v == "aa" + "bccccd" * 3 + "b"
    assert enc.w == "a" + "c" * 12 + "ddd" + "a" + "bbbb"
    assert len(enc.v) == len(enc.w) == 21
    assert enc.k == 3
    assert is_related(enc.v, enc.w)


@pytest.mark.parametrize(
    "a",
    [(3, 4, 5), (6, 3, 3), (4, 4, 5)],
)
def test_invalid_instances(a):
    with pytest.raises(InvalidInstance):
        encode_3p(ThreePartitionInstance(1, 12, a))


@pytest.mark.parametrize("name", sorted(SHIPPED_INSTANCES))
def test_nu_values(name):
    inst = SHIPPED_INSTANCES[name]
    enc = encode_3p(inst)
    n, N = inst.n, inst.N
    assert nu_total(enc.v) == 13 * n - n * N
    assert nu_total(enc.w) == -5 * n - n * N
    assert nu_lower_bound(enc.v, enc.w) == 3 * n
    assert len(enc.v) == (n + 1) + 3 * n + sum(inst.a) + 3 * n + 1


@pytest.mark.parametrize("name", ["solvable-n1", "solvable-n2"])
def test_decoded_witness(name):
    inst = SHIPPED_INSTANCES[name]
    enc = encode_3p(inst)
    seq = decode_3p_solution(inst, inst.solution)
    assert len(seq) == 3 * inst.n
    assert verify_sequence(enc.v, enc.w, seq)
    steps = seq.words()
    assert all(nu_total(x) - nu_total(y) == 6 for x, y in zip(steps, steps[1:]))


def test_decoded_witness_any_triple_order():
    inst = ThreePartitionInstance(2, 20, (6, 7, 7, 6, 6, 8))
    sol = solve_3p(inst)
    assert sol is not None
    enc = encode_3p(inst)
    assert verify_sequence(enc.v, enc.w, decode_3p_solution(inst, sol))
    rev = [tuple(reversed(t)) for t in reversed(sol)]
    assert verify_sequence(enc.v, enc.w, decode_3p_solution(inst, rev))


def test_unsolvable_instance_has_no_witness():
    inst = SHIPPED_INSTANCES["unsolvable-n2"]
    assert solve_3p(inst) is None
    with pytest.raises(NotASolution):
        decode_3p_solution(inst, [(0, 1, 2), (3, 4, 5)])


def test_not_a_solution():
    with pytest.raises(NotASolution):
        decode_3p_solution(SMALL, [(0, 1)])
    with pytest.raises(NotASolution):
        decode_3p_solution(SMALL, [(0, 0, 1)])


def test_instance_json(tmp_path):
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(SMALL.to_json()))
    back = load_instance(path, "three-partition")
    assert back == SMALL and back.solution == SMALL.solution
    with pytest.raises(InvalidInstance):
        ThreePartitionInstance.from_json({"n": 1})
    assert EbpInstance.from_json({"sizes": [1, 2], "N": 1, "B": 3}).to_json() == {"sizes": [1, 2], "N": 1, "B": 3}


def test_cbi_instance_checks_relatedness():
    assert CbiInstance(Word("ab"), Word("ba"), 0).to_json() == {"v": "ab", "w": "ba", "k": 0}
    with pytest.raises(NotRelated):
        CbiInstance(Word("ab"), Word("aa"), 0)


def test_lambda_examples():
    assert lambda_encode("ab") == "xyyx" * 17 + "xyyyx" * 17
    assert len(lambda_encode("ab")) == 153
    assert lambda_encode("a") == "xyyx" * 5


def test_lambda_preserves_relatedness():
    rng = random.Random(7)
    for _ in range(30):
        v = "".join(rng.choice("abcd") for _ in range(rng.randint(1, 5)))
        w = "".join(rng.sample(v, len(v)))
        assert is_related(lambda_encode(v), lambda_encode(w))


def test_lift_identity_move():
    assert lift_interchange("abc", BlockInterchange(0, (0, 0, 0))) == BlockInterchange(0, (0, 0, 0))
    with pytest.raises(OutOfBounds):
        lift_interchange("abc", BlockInterchange(0, (0, 2, 5)))


def test_lift_commutes_with_move():
    m = extract_sequence("ababab", "aaabbb").moves[0]
    lifted = lift_interchange("ababab", m)
    left = apply_interchange(lambda_encode("ababab"), lifted)
    right = lambda_encode(apply_interchange("ababab", m))
    assert CyclicWord(left) == CyclicWord(right)


@given(related_pair("abcd", 1, 3))
def test_lifted_witness_verifies(pair):
    v, w = pair
    seq = extract_sequence(v, w)
    assert verify_sequence(lambda_encode(v), lambda_encode(w), lift_sequence(seq))


def test_single_word_reduction_examples():
    assert cbi_to_cl_single("ab", "ba") == ["abAB", "abBA"]
    assert single_word_distance("ab", "ba") == 0
    words = cbi_to_cl_single("ababab", "aaabbb")
    assert len(words) == 6
    assert single_word_distance("ababab", "aaabbb") == 1
    with pytest.raises(NotRelated):
        cbi_to_cl_single("ab", "bb")


def test_single_word_reduction_small():
    for v, w in related_pairs("ab", 4):
        assert single_word_distance(v, w) == d_cbi(v, w)


def test_ebp_chain():
    c = encode_ebp(EbpInstance((1, 2), 1, 3))
    assert [t.text for t in c.terms] == ["abAB", "abbABB", "bbbaBBBA"]
    assert is_boundary(c)
    assert cl_chain(c).genus == 0
    assert cl_chain(encode_ebp(EbpInstance((1, 3), 2, 2))).genus >= 1
    with pytest.raises(InvalidInstance):
        encode_ebp(EbpInstance((1, 2), 2, 2))

import random

import pytest

from gstruct.perm import compose, identity, inverse
from gstruct.relations import (
    invert_word,
    mat_mul,
    mat_of_word,
    relations_hold,
    relators_for,
    sl2_order,
    validate_presentation,
    word_permutation,
)


def test_sl2_order_values():
    assert sl2_order(1) == 1
    assert sl2_order(2) == 6
    assert sl2_order(3) == 24
    assert sl2_order(4) == 48
    assert sl2_order(5) == 120
    assert sl2_order(6) == 144
    assert sl2_order(30) == 17280


def test_basic_relators_are_trivial():
    for n in [2, 3, 5, 7, 12]:
        I = (1 % n, 0, 0, 1 % n)
        assert mat_of_word("SSSS", n) == I
        assert mat_of_word("STsTsT", n) == I
        assert mat_of_word("STSTST", n) == I
        assert mat_of_word("T" * n, n) == I


def test_relators_for_pool_is_trivial_mod_n():
    # relators_for itself asserts this; exercise it over a range anyway
    for n in range(1, 40):
        for w in relators_for(n):
            assert mat_of_word(w, n) == (1 % n, 0, 0, 1 % n)


def test_invert_word():
    for w in ["ST", "SsTt", "TTTs"]:
        for n in [5, 8]:
            assert mat_mul(mat_of_word(w, n), mat_of_word(invert_word(w), n), n) == (1, 0, 0, 1)


@pytest.mark.parametrize("n", list(range(1, 31)) + [36, 42, 60])
def test_presentation_is_exact(n):
    assert validate_presentation(n) is True


def test_word_permutation_matches_naive():
    rng = random.Random(4)
    e = tuple(rng.sample(range(8), 8))
    t = tuple(rng.sample(range(8), 8))
    lut = {"S": e, "s": inverse(e), "T": t, "t": inverse(t)}
    for _ in range(30):
        word = "".join(rng.choice("SsTt") * rng.randint(1, 9) for _ in range(rng.randint(0, 6)))
        naive = identity(8)
        for ch in word:
            naive = compose(naive, lut[ch])
        assert word_permutation(word, e, t) == naive


def test_relations_hold_on_reduction_itself():
    # the permutation action of S and T on SL2(Z/n) by right multiplication
    # tautologically satisfies the relators
    for n in [2, 3, 4]:
        mats = []
        seen = {}
        frontier = [(1, 0, 0, 1)]
        seen[(1, 0, 0, 1)] = 0
        gens = [(0, 1, n - 1, 0), (1, 1, 0, 1)]
        while frontier:
            nxt = []
            for m in frontier:
                for g in gens:
                    m2 = mat_mul(m, g, n)
                    if m2 not in seen:
                        seen[m2] = len(seen)
                        nxt.append(m2)
            frontier = nxt
        assert len(seen) == sl2_order(n)
        order = sorted(seen, key=seen.get)
        pe = tuple(seen[mat_mul(m, gens[0], n)] for m in order)
        pt = tuple(seen[mat_mul(m, gens[1], n)] for m in order)
        assert relations_hold(pe, pt, n)
        # and fails for an incompatible modulus (T^m is a relator mod m
        # but acts nontrivially here)
        assert not relations_hold(pe, pt, n + 1)

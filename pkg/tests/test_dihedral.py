import pytest

from gstruct.dihedral import (
    classify_dihedral_pair,
    decode_dihedral,
    totient,
    verify_structure_theorem,
)
from gstruct.families import builtin_group
from gstruct.perm import compose


def test_decode_roundtrip():
    k = 7
    G = builtin_group("D14")
    rot = G.generators[0]
    ref = G.generators[1]
    n, s = decode_dihedral(rot, k)
    assert s == 1 and n in range(k)
    n, s = decode_dihedral(ref, k)
    assert s == -1
    with pytest.raises(ValueError):
        decode_dihedral((1, 2, 0, 3, 4, 5, 6), k)


def test_decode_is_multiplicative():
    # product of two reflections is a rotation by the difference
    k = 9
    G = builtin_group("D18")
    a, b = G.generators[1], compose(G.generators[0], G.generators[1])
    (n, sa), (m, sb) = decode_dihedral(a, k), decode_dihedral(b, k)
    assert sa == sb == -1
    prod = compose(a, b)
    np, sp = decode_dihedral(prod, k)
    assert sp == 1 and np == (n - m) % k


def test_classify_rejects_rotation_pairs():
    k = 5
    G = builtin_group("D10")
    rot = G.generators[0]
    with pytest.raises(ValueError):
        classify_dihedral_pair(rot, compose(rot, rot), k)


def test_invariant_values_k5():
    r = verify_structure_theorem(5)
    assert r.n_components == 2
    assert r.inv_values == (1, 2)


@pytest.mark.parametrize("k", range(3, 17))
def test_structure_theorem_small(k):
    r = verify_structure_theorem(k)
    assert r.ok
    assert r.n_components == totient(k) // 2


def test_k3_matches_d6_row():
    r = verify_structure_theorem(3)
    assert r.n_components == 1 and r.inv_values == (1,)

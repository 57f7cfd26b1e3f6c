import random

import pytest

from gstruct.families import builtin_group
from gstruct.invariants import (
    component_record,
    coprime_witness,
    cover_data,
    geometric_level,
    genus_modular_curve,
    is_fine,
    multiplicity_blocks,
    orbit_canonical_code,
    signature,
)
from gstruct.orbits import SL2Action, orbit_decompose
from gstruct.pairs import PairEngine


def _rows(spec, **kw):
    G = builtin_group(spec)
    orbits = orbit_decompose(G)
    blocks = multiplicity_blocks(orbits)
    out = []
    for blk in blocks:
        r = component_record(G, orbits[blk[0]], **kw)
        out.append((len(blk), r))
    out.sort(key=lambda t: (t[1].genus, t[1].d))
    return out


def test_table_small_groups():
    # (m, d, c4, c6, c_neg1, widths, genus, congruence?, fine?, e, genus_cover)
    expected = {
        "C3xC3": [(2, 24, 0, 0, 0, (3, 3, 3, 3), 0, True, True, 1, 1)],
        "D6": [(1, 3, 1, 0, 1, (1, 2), 0, True, False, 3, 3)],
        "D8": [(1, 6, 0, 0, 1, (2, 2, 2), 0, True, False, 2, 3)],
        "Q8": [(1, 6, 0, 0, 1, (2, 2, 2), 0, True, False, 2, 3)],
        "D10": [(2, 3, 1, 0, 1, (1, 2), 0, True, False, 5, 5)],
    }
    for spec, rows in expected.items():
        got = [
            (m, r.d, r.c4, r.c6, r.c_neg1, r.cusp_widths, r.genus,
             r.congruence.verdict == "congruence", r.fine, r.e, r.genus_cover)
            for m, r in _rows(spec)
        ]
        assert got == rows, spec


def test_table_a5_and_psl27():
    got = [
        (m, r.d, r.c4, r.c6, r.c_neg1, r.cusp_widths, r.genus,
         r.congruence.verdict, r.fine, r.e, r.genus_cover)
        for m, r in _rows("A5")
    ]
    assert got == [
        (2, 10, 0, 1, 1, (2, 3, 5), 0, "noncongruence", False, 5, 25),
        (1, 18, 0, 0, 1, (2, 3, 3, 5, 5), 0, "noncongruence", False, 3, 21),
    ]
    got = [
        (m, r.d, r.c4, r.c6, r.c_neg1, r.cusp_widths, r.genus,
         r.congruence.verdict, r.fine, r.e, r.genus_cover)
        for m, r in _rows("PSL(2,7)")
    ]
    assert got == [
        (2, 7, 1, 1, 1, (3, 4), 0, "noncongruence", False, 7, 73),
        (1, 32, 0, 1, 0, (2, 3, 4, 7), 0, "noncongruence", False, 4, 64),
        (1, 32, 0, 1, 0, (2, 3, 4, 7), 0, "noncongruence", False, 4, 64),
        (1, 36, 0, 0, 0, (1, 3, 3, 4, 7), 0, "noncongruence", True, 3, 57),
    ]


def test_geometric_level_examples():
    assert geometric_level((1, 2)) == 2
    assert geometric_level((2, 3, 3, 5, 5)) == 30
    assert geometric_level((3, 4)) == 12


def test_genus_formula_values():
    assert genus_modular_curve(18, 0, 0, 5) == 0
    assert genus_modular_curve(7, 1, 1, 2) == 0
    assert genus_modular_curve(690, 12, 0, 81) == 15
    with pytest.raises(AssertionError):
        genus_modular_curve(13, 0, 0, 1)


def test_is_fine():
    assert is_fine({"c4": 0, "c6": 0, "c_neg1": 0})
    assert not is_fine({"c4": 1, "c6": 0, "c_neg1": 0})
    assert not is_fine({"c4": 0, "c6": 0, "c_neg1": 1})


def test_level_divides_exponent():
    for spec in ["S3", "D8", "Q8", "A4", "S4", "A5", "D12"]:
        G = builtin_group(spec)
        exp = G.exponent()
        for o in orbit_decompose(G):
            level = geometric_level(signature(o)["cusp_widths"])
            assert exp % level == 0


def test_cover_data_abelian_is_unramified():
    G = builtin_group("C3xC3")
    for o in orbit_decompose(G):
        e, g, label = cover_data(G, o)
        assert e == 1 and g == 1 and label == "1"


def test_canonical_code_distinguishes_and_identifies():
    # the two conjugate A5 d=10 orbits share a code; the two PSL(2,7)
    # d=32 orbits have equal signatures but different codes
    orbits = orbit_decompose(builtin_group("A5"))
    ten = [o for o in orbits if o.size == 10]
    assert orbit_canonical_code(ten[0]) == orbit_canonical_code(ten[1])
    orbits = orbit_decompose(builtin_group("PSL(2,7)"))
    d32 = [o for o in orbits if o.size == 32]
    assert len(d32) == 2
    assert signature(d32[0]) == signature(d32[1])
    assert orbit_canonical_code(d32[0]) != orbit_canonical_code(d32[1])


def test_multiplicity_blocks():
    orbits = orbit_decompose(builtin_group("C3xC3"))
    assert [len(b) for b in multiplicity_blocks(orbits)] == [2]
    orbits = orbit_decompose(builtin_group("A5"))
    assert sorted(len(b) for b in multiplicity_blocks(orbits)) == [1, 2]
    orbits = orbit_decompose(builtin_group("PSL(2,7)"))
    assert sorted(len(b) for b in multiplicity_blocks(orbits)) == [1, 1, 1, 2]


def test_higman_invariance_random_walks():
    rng = random.Random(11)
    for spec in ["S4", "A5", "D12"]:
        G = builtin_group(spec)
        engine = PairEngine(G)
        action = SL2Action(G, engine)
        table = G.classes()

        def comm_class(p):
            ab = G.mul_index(p.a, p.b)
            c = G.mul_index(G.mul_index(ab, G.inverse_index(p.a)), G.inverse_index(p.b))
            return table.class_of[c]

        moves = [action.act_E, action.act_T, action.act_T_inv]
        for o in orbit_decompose(G, engine=engine):
            p = o.points[0]
            expected = comm_class(p)
            for _ in range(60):
                p = rng.choice(moves)(p)
                assert comm_class(p) == expected


def test_coprime_witness():
    # A5: orders (2,3,5) pairwise coprime pairs exist; witness orbit is ncng
    G = builtin_group("A5")
    w = coprime_witness(G)
    assert w is not None
    for o in orbit_decompose(G):
        if w in o.points:
            rec = component_record(G, o)
            assert rec.congruence.verdict == "noncongruence"
            break
    else:
        pytest.fail("witness not found in any orbit")
    # solvable examples have none
    assert coprime_witness(builtin_group("D8")) is None
    assert coprime_witness(builtin_group("S3")) is None

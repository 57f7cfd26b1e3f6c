"""Closed-form classification of dihedral components and its verification.

Elements of the dihedral group of order 2k are written (n, +) (rotation)
or (n, -) (reflection) with n mod k.  In the natural degree-k action the
permutation i -> i + n decodes to (-n, +) and i -> c - i decodes to
(c, -); with that choice the decoding is multiplicative for our
left-to-right composition.

A generating pair must contain a reflection, and its class is determined
by the pair of signs (plus, for even k, the rotation parities) together
with a unit invariant:

    (+,-): inv = +-n     (-,+): inv = +-m     (-,-): inv = +-(n-m)

for the pair ((n, s), (m, t)).  The invariant is constant on each orbit
of E and T, and orbits biject with units mod k up to sign, so there are
phi(k)/2 components, each a copy of the modular curve of level
Gamma_1(2) (k odd) or Gamma(2) (k even).  `verify_structure_theorem`
recomputes all of this with the generic machinery and cross-checks the
closed form, including the transition tables of E and T on the
(abelianization, invariant) data.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .families import builtin_group
from .invariants import component_record, signature
from .orbits import SL2Action, orbit_decompose
from .pairs import ExteriorPair, PairEngine


def totient(k):
    return sum(1 for a in range(1, k + 1) if gcd(a, k) == 1)


def decode_dihedral(p, k):
    """(n, sign) with sign +1 for i -> i+n, -1 for i -> n-i."""
    if len(p) != k:
        raise ValueError("expected a permutation of %d points" % k)
    if all(p[i] == (i + p[0]) % k for i in range(k)):
        return (-p[0]) % k, 1
    if all(p[i] == (p[0] - i) % k for i in range(k)):
        return p[0] % k, -1
    raise ValueError("not a natural dihedral permutation")


def _unit_rep(x, k):
    """Representative of +-x in (Z/k)^x / {+-1}, as the smaller lift."""
    x %= k
    return min(x, k - x)


@dataclass(frozen=True)
class DihedralClass:
    """Sign pattern, rotation parities (even k only) and the invariant."""

    signs: tuple  # (+1/-1, +1/-1)
    parities: tuple  # (n mod 2, m mod 2) for even k, else ()
    inv: int  # unit representative mod +-1


def classify_dihedral_pair(a, b, k):
    (n, sa), (m, sb) = decode_dihedral(a, k), decode_dihedral(b, k)
    if sa == 1 and sb == 1:
        raise ValueError("two rotations never generate")
    if sa == 1:
        inv = n
    elif sb == 1:
        inv = m
    else:
        inv = n - m
    inv = _unit_rep(inv, k)
    if gcd(inv, k) != 1:
        raise ValueError("pair does not generate: invariant %d not a unit" % inv)
    parities = (n % 2, m % 2) if k % 2 == 0 else ()
    return DihedralClass((sa, sb), parities, inv)


def _ab_label(cls, k):
    """Abelianization as in the transition tables: sign pair plus the
    parity of the reflection part (even k only)."""
    sa, sb = cls.signs
    if k % 2:
        return (sa, sb)
    if sa == 1:
        bit = cls.parities[1]
    elif sb == 1:
        bit = cls.parities[0]
    else:
        bit = cls.parities[1]
    return (sa, sb, bit)


# ab-label transitions of the lifted generators; invariant is unchanged.
_E_TABLE = {
    (1, -1): (-1, 1),
    (-1, 1): (1, -1),
    (-1, -1): (-1, -1),
}
_T_TABLE_ODD = {
    (1, -1): (1, -1),
    (-1, 1): (-1, -1),
    (-1, -1): (-1, 1),
}
_T_TABLE_EVEN = {
    (1, -1, 0): (1, -1, 1),
    (1, -1, 1): (1, -1, 0),
    (-1, 1, 0): (-1, -1, 1),
    (-1, 1, 1): (-1, -1, 0),
    (-1, -1, 0): (-1, 1, 1),
    (-1, -1, 1): (-1, 1, 0),
}


def _e_image(label, k):
    if k % 2:
        return _E_TABLE[label]
    sa, sb, bit = label
    # E swaps the slots of a double-reflection pair, whose rotation parts
    # have opposite parity (their difference is a unit, hence odd), so
    # the parity bit flips; for mixed signs the reflection keeps its bit.
    if (sa, sb) == (-1, -1):
        bit = 1 - bit
    return _E_TABLE[(sa, sb)] + (bit,)


def _t_image(label, k):
    return _T_TABLE_ODD[label] if k % 2 else _T_TABLE_EVEN[label]


@dataclass
class DihedralCheck:
    k: int
    n_components: int
    inv_values: tuple
    ok: bool


def verify_structure_theorem(k):
    """Recompute the component structure of the dihedral group of order
    2k generically and check every claim of the closed form.  Raises
    AssertionError on any mismatch; returns a DihedralCheck summary."""
    if k < 3:
        raise ValueError("k must be at least 3")
    G = builtin_group("D%d" % (2 * k))
    engine = PairEngine(G)
    action = SL2Action(G, engine)
    orbits = orbit_decompose(G, engine=engine)
    phi = totient(k)
    assert len(orbits) == phi // 2, "expected phi(k)/2 components"

    def cls_of(pair):
        return classify_dihedral_pair(G.element(pair.a), G.element(pair.b), k)

    expected_size = 3 if k % 2 else 6
    expected_sig = (
        {"d": 3, "mu": 3, "c4": 1, "c6": 0, "c_neg1": 1, "cusp_widths": (1, 2)}
        if k % 2
        else {"d": 6, "mu": 6, "c4": 0, "c6": 0, "c_neg1": 1, "cusp_widths": (2, 2, 2)}
    )
    seen_inv = []
    for o in orbits:
        assert o.size == expected_size
        assert signature(o) == expected_sig
        invs = {cls_of(p).inv for p in o.points}
        assert len(invs) == 1, "invariant is not constant on an orbit"
        seen_inv.append(invs.pop())
        for p in o.points:
            c = cls_of(p)
            label = _ab_label(c, k)
            ce = cls_of(action.act_E(p))
            ct = cls_of(action.act_T(p))
            assert ce.inv == c.inv and ct.inv == c.inv
            assert _ab_label(ce, k) == _e_image(label, k)
            assert _ab_label(ct, k) == _t_image(label, k)
    units = sorted({_unit_rep(a, k) for a in range(1, k) if gcd(a, k) == 1})
    assert sorted(seen_inv) == units, "orbits do not biject with units mod +-1"
    for o in orbits:
        rec = component_record(G, o)
        assert rec.congruence.verdict == "congruence"
        assert rec.level == 2 and rec.genus == 0
        # squared invariant realizes the commutator class: [a, b] is the
        # rotation by +-2*inv
        a, b = G.element(o.base.a), G.element(o.base.b)
        comm = _commutator_perm(a, b)
        n, s = decode_dihedral(comm, k)
        assert s == 1 and _unit_rep(n, k) == _unit_rep(2 * seen_inv[orbits.index(o)], k)
    return DihedralCheck(k, len(orbits), tuple(sorted(seen_inv)), True)


def _commutator_perm(a, b):
    from .perm import compose, inverse

    return compose(compose(compose(a, b), inverse(a)), inverse(b))

"""Signature and geometric invariants of one orbit.

From the induced permutations of E and T on an orbit (and their
quotient by the central -I) we read off:

  * d          orbit size
  * cusps      cycle type of T on the +-I quotient (widths)
  * c4, c6     fixed points of E resp. of the order-3 element E*T
  * c_-1       1 iff -I stabilizes the orbit pointwise
  * mu         size of the +-I quotient = index of the stabilizer
  * level      lcm of the cusp widths
  * genus      of the corresponding modular curve, via Riemann-Hurwitz

plus cover data from the group side: the order e of the commutator of
the base pair (constant along the orbit by Higman's theorem, asserted)
and the genus of the associated origami cover.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .congruence import ORACLE_CAP, CongruenceVerdict, decide_congruence
from .pairs import ExteriorPair
from .perm import cycles, perm_order


@dataclass
class ComponentRecord:
    """Everything the tables report about one component."""

    base: ExteriorPair
    d: int
    mu: int
    c4: int
    c6: int
    c_neg1: int
    cusp_widths: tuple  # ascending
    level: int
    genus: int
    fine: bool
    e: int
    genus_cover: int
    nielsen_label: str
    congruence: CongruenceVerdict


def signature(orbit):
    """Combinatorial signature dict of an orbit."""
    widths = tuple(sorted(len(c) for c in cycles(orbit.perm_T_pm, include_fixed=True)))
    c4 = sum(1 for i, j in enumerate(orbit.perm_E_pm) if i == j)
    witness = tuple(orbit.perm_T_pm[i] for i in orbit.perm_E_pm)
    c6 = sum(1 for i, j in enumerate(witness) if i == j)
    return {
        "d": orbit.size,
        "mu": len(orbit.pm_classes),
        "c4": c4,
        "c6": c6,
        "c_neg1": 1 if orbit.neg_fixed else 0,
        "cusp_widths": widths,
    }


def geometric_level(cusp_widths):
    return lcm(*cusp_widths)


def genus_modular_curve(mu, c4, c6, ncusps):
    g = 1 + Fraction(mu, 12) - Fraction(c4, 4) - Fraction(c6, 3) - Fraction(ncusps, 2)
    if g.denominator != 1 or g < 0:
        raise AssertionError("genus formula gave %s" % g)
    return int(g)


def is_fine(sig):
    return sig["c4"] == 0 and sig["c6"] == 0 and sig["c_neg1"] == 0


def _commutator_index(G, ai, bi):
    ab = G.mul_index(ai, bi)
    return G.mul_index(G.mul_index(ab, G.inverse_index(ai)), G.inverse_index(bi))


def nielsen_class_labels(G):
    """Class id -> label like '7a', letters ordered by class id within an order."""
    table = G.classes()
    by_order = defaultdict(list)
    for cid, o in enumerate(table.rep_orders):
        by_order[o].append(cid)
    labels = {}
    for o, cids in by_order.items():
        for i, cid in enumerate(sorted(cids)):
            suffix = chr(ord("a") + i) if len(cids) > 1 else ""
            labels[cid] = "%d%s" % (o, suffix)
    return labels


def cover_data(G, orbit):
    """(e, genus of the cover, class label of the commutator).

    The conjugacy class of the commutator a*b*a^{-1}*b^{-1} is an orbit
    invariant; we verify constancy over the whole orbit.
    """
    table = G.classes()
    cids = {table.class_of[_commutator_index(G, p.a, p.b)] for p in orbit.points}
    if len(cids) != 1:
        raise AssertionError("commutator class is not constant on the orbit")
    cid = cids.pop()
    e = table.rep_orders[cid]
    num = G.order * (e - 1)
    if num % (2 * e):
        raise AssertionError("cover genus formula is not integral")
    return e, 1 + num // (2 * e), nielsen_class_labels(G)[cid]


def orbit_canonical_code(orbit):
    """Minimal BFS edge stream over all base points; conjugation invariant.

    Points are renumbered in BFS discovery order following (E-image,
    T-image); the stream of renumbered images is compared over all
    starting points and the lexicographic minimum returned.  Quadratic in
    the orbit size.
    """
    cached = getattr(orbit, "_canonical_code", None)
    if cached is not None:
        return cached
    pe, pt = orbit.perm_E, orbit.perm_T
    d = len(pe)
    best = None
    for s in range(d):
        num = [-1] * d
        num[s] = 0
        order = [s]
        nxt = 1
        stream = []
        dead = False
        pos = 0
        while pos < len(order):
            p = order[pos]
            pos += 1
            for img in (pe[p], pt[p]):
                c = num[img]
                if c < 0:
                    num[img] = c = nxt
                    nxt += 1
                    order.append(img)
                stream.append(c)
                if best is not None:
                    i = len(stream) - 1
                    if c > best[i]:
                        dead = True
                        break
                    if c < best[i]:
                        best = None
                if dead:
                    break
            if dead:
                break
        if not dead:
            best = tuple(stream)
    orbit._canonical_code = best
    return best


def multiplicity_blocks(orbits):
    """Group indices of orbits with identical canonical codes.

    Orbits in one block are simultaneously conjugate as actions, hence
    carry identical invariants; blocks are returned in order of their
    first member.  A cheap signature key avoids computing the quadratic
    code except within colliding buckets.
    """
    buckets = defaultdict(list)
    for i, o in enumerate(orbits):
        sig = signature(o)
        buckets[(sig["d"], sig["cusp_widths"], sig["c4"], sig["c6"], sig["c_neg1"])].append(i)
    block_of = {}
    for key, members in buckets.items():
        if len(members) == 1:
            block_of[members[0]] = (members[0],)
            continue
        by_code = defaultdict(list)
        for i in members:
            by_code[orbit_canonical_code(orbits[i])].append(i)
        for group in by_code.values():
            for i in group:
                block_of[i] = tuple(group)
    seen = set()
    blocks = []
    for i in range(len(orbits)):
        blk = block_of[i]
        if blk not in seen:
            seen.add(blk)
            blocks.append(list(blk))
    return blocks


def component_record(G, orbit, congruence="both", oracle_cap=ORACLE_CAP):
    sig = signature(orbit)
    widths = sig["cusp_widths"]
    level = geometric_level(widths)
    genus = genus_modular_curve(sig["mu"], sig["c4"], sig["c6"], len(widths))
    e, genus_cover, label = cover_data(G, orbit)
    verdict = decide_congruence(
        orbit.perm_E,
        orbit.perm_T,
        level,
        sig["c_neg1"],
        method=congruence,
        oracle_cap=oracle_cap,
    )
    return ComponentRecord(
        base=orbit.base,
        d=sig["d"],
        mu=sig["mu"],
        c4=sig["c4"],
        c6=sig["c6"],
        c_neg1=sig["c_neg1"],
        cusp_widths=widths,
        level=level,
        genus=genus,
        fine=is_fine(sig),
        e=e,
        genus_cover=genus_cover,
        nielsen_label=label,
        congruence=verdict,
    )


def coprime_witness(G):
    """A generating pair whose two orders and product order are pairwise
    coprime, as a canonical exterior pair, or None."""
    from .pairs import PairEngine, is_pair_generating

    engine = PairEngine(G)
    table = G.classes()
    n = G.order
    orders = [0] * n
    for i in range(n):
        orders[i] = perm_order(G.element(i))
    for cid, rep in enumerate(table.class_reps):
        oa = table.rep_orders[cid]
        if oa == 1:
            continue
        for b in range(n):
            ob = orders[b]
            if ob == 1 or gcd(oa, ob) != 1:
                continue
            oab = orders[G.mul_index(rep, b)]
            if gcd(oa, oab) != 1 or gcd(ob, oab) != 1:
                continue
            if is_pair_generating(engine, rep, b):
                return ExteriorPair(*engine.canonical_indices(rep, b))
    return None


def order_profile(records):
    """Multiset {width: count} summed over records; sanity helper."""
    total = Counter()
    for r in records:
        total.update(r.cusp_widths)
    return dict(total)

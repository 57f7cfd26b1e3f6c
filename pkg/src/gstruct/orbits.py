"""Action of E and T on exterior pairs and the orbit decomposition.

The lifts act by

    E: (a, b) -> (b^{-1}, a)
    T: (a, b) -> (a, a*b)
   -I: (a, b) -> (a^{-1}, b^{-1})

each followed by canonicalization.  E has order 4 with E^2 = -I, so orbit
BFS only needs the moves {E, T, T^{-1}}.  An OrbitAction records the
induced permutations of one orbit and their quotient by the central -I.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .pairs import ExteriorPair, PairEngine, enumerate_exterior_surjections
from .perm import perm_order


class SL2Action:
    """Moves on canonical exterior pairs for one group."""

    def __init__(self, G, engine=None):
        self.G = G
        self.engine = engine or PairEngine(G)

    def act_E(self, p):
        return ExteriorPair(
            *self.engine.canonical_indices(self.G.inverse_index(p.b), p.a)
        )

    def act_T(self, p):
        return ExteriorPair(
            *self.engine.canonical_indices(p.a, self.G.mul_index(p.a, p.b))
        )

    def act_T_inv(self, p):
        ainv = self.G.inverse_index(p.a)
        return ExteriorPair(
            *self.engine.canonical_indices(p.a, self.G.mul_index(ainv, p.b))
        )

    def act_negI(self, p):
        return ExteriorPair(
            *self.engine.canonical_indices(
                self.G.inverse_index(p.a), self.G.inverse_index(p.b)
            )
        )


def act_E(G, p):
    return SL2Action(G).act_E(p)


def act_T(G, p):
    return SL2Action(G).act_T(p)


def act_negI(G, p):
    return SL2Action(G).act_negI(p)


@dataclass
class OrbitAction:
    """One orbit with its induced permutations and the +-I quotient."""

    points: list
    perm_E: tuple
    perm_T: tuple
    neg_fixed: bool
    pm_classes: list
    perm_E_pm: tuple
    perm_T_pm: tuple
    group: object = field(repr=False, default=None)

    @property
    def size(self):
        return len(self.points)

    @property
    def base(self):
        return self.points[0]


def _build_orbit(G, members, e_map, t_map):
    pts = sorted(members)
    idx = {p: i for i, p in enumerate(pts)}
    perm_E = tuple(idx[e_map[p]] for p in pts)
    perm_T = tuple(idx[t_map[p]] for p in pts)
    if perm_order(perm_E) not in (1, 2, 4):
        raise AssertionError("E does not act with order dividing 4")
    neg = tuple(perm_E[i] for i in perm_E)  # E^2 = -I
    fixed = sum(1 for i, j in enumerate(neg) if i == j)
    if fixed not in (0, len(pts)):
        raise AssertionError("-I is central but acts with mixed fixed points")
    neg_fixed = fixed == len(pts)
    pm_classes = []
    class_of = [-1] * len(pts)
    for i in range(len(pts)):
        if class_of[i] >= 0:
            continue
        cid = len(pm_classes)
        cls = (i,) if neg[i] == i else (i, neg[i])
        for j in cls:
            class_of[j] = cid
        pm_classes.append(cls)
    perm_E_pm = tuple(class_of[perm_E[c[0]]] for c in pm_classes)
    perm_T_pm = tuple(class_of[perm_T[c[0]]] for c in pm_classes)
    ord_e_pm = perm_order(perm_E_pm)
    if ord_e_pm not in (1, 2):
        raise AssertionError("E does not act with order <= 2 on the +-I quotient")
    witness = tuple(perm_T_pm[i] for i in perm_E_pm)  # E then T
    if perm_order(witness) not in (1, 3):
        raise AssertionError("order-3 witness fails on the +-I quotient")
    return OrbitAction(
        points=pts,
        perm_E=perm_E,
        perm_T=perm_T,
        neg_fixed=neg_fixed,
        pm_classes=pm_classes,
        perm_E_pm=perm_E_pm,
        perm_T_pm=perm_T_pm,
        group=G,
    )


def orbit_decompose(G, pairs=None, engine=None):
    """Partition the fiber into orbits, sorted by (size, least point)."""
    engine = engine or PairEngine(G)
    action = SL2Action(G, engine)
    if pairs is None:
        pairs = engine.enumerate()
    pending = set(pairs)
    orbits = []
    for seed in sorted(pairs):
        if seed not in pending:
            continue
        members = {seed}
        e_map, t_map = {}, {}
        stack = [seed]
        while stack:
            p = stack.pop()
            qe = action.act_E(p)
            qt = action.act_T(p)
            qti = action.act_T_inv(p)
            e_map[p] = qe
            t_map[p] = qt
            for q in (qe, qt, qti):
                if q not in members:
                    members.add(q)
                    stack.append(q)
        pending -= members
        orbits.append(_build_orbit(G, members, e_map, t_map))
    orbits.sort(key=lambda o: (o.size, o.points[0]))
    return orbits

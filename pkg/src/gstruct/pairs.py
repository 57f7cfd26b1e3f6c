"""Generating pairs of G modulo simultaneous conjugation.

An exterior surjection F2 ->> G is a generating pair (a, b) up to
simultaneous conjugation; the canonical representative of a class is the
lexicographically least (a, b) by dense element index.  Minimizing only
over conjugators that carry a to its conjugacy-class representative keeps
canonicalization at O(|centralizer| * degree).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .perm import compose, inverse
from .schreier import reaches_order


@dataclass(frozen=True, order=True)
class ExteriorPair:
    """Canonical representative (by element index) of an Inn(G)-class."""

    a: int
    b: int


def _point_orbits(gens, degree):
    """Orbit partition of the points under a list of permutations."""
    parent = list(range(degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, j in enumerate(g):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return frozenset(frozenset(i for i in range(degree) if find(i) == r)
                     for r in range(degree) if find(r) == r)


class PairEngine:
    """Per-group scratch state for canonicalization and enumeration."""

    def __init__(self, G):
        self.G = G
        self.table = G.classes()
        self.E = G.elements()
        self.is_abelian = all(s == 1 for s in self.table.class_sizes)
        self._conj_stacks = {}
        self._group_orbits = _point_orbits(G.generators, G.degree)

    def _stack(self, cid):
        """(U, Uinv) rows of the centralizer of class rep cid."""
        cached = self._conj_stacks.get(cid)
        if cached is None:
            U = self.E[self.G.centralizer_indices(cid)]
            cached = (U, np.argsort(U, axis=1).astype(U.dtype))
            self._conj_stacks[cid] = cached
        return cached

    def _conjugates(self, row, U, Uinv):
        """Rows c*x*c^{-1} for every centralizer row c."""
        A = row[U]
        return np.take_along_axis(Uinv, A.astype(np.int64), axis=1).astype(U.dtype)

    def canonical_indices(self, ai, bi):
        """Canonical (a, b) element indices for the class of (ai, bi)."""
        if self.is_abelian:
            return ai, bi
        table = self.table
        cid = int(table.class_of[ai])
        rep = table.class_reps[cid]
        g = table.conjugators[ai]  # g * rep * g^{-1} = a
        ginv = np.argsort(g)
        b1 = g[self.E[bi][ginv]]  # g^{-1} * b * g
        U, Uinv = self._stack(cid)
        rows = self._conjugates(b1, U, Uinv)
        return rep, min(self.G.lookup_rows(rows))

    def canonical_pair(self, a, b):
        ai = self.G.index_of(a)
        bi = self.G.index_of(b)
        if not is_pair_generating(self, ai, bi):
            raise ValueError("pair does not generate the group")
        return ExteriorPair(*self.canonical_indices(ai, bi))

    def enumerate(self):
        """All exterior surjections, sorted; empty if G is not 2-generated."""
        G = self.G
        n = G.order
        target = n
        out = []
        for cid, rep in enumerate(self.table.class_reps):
            U, Uinv = self._stack(cid)
            a_row = self.E[rep]
            a_tuple = tuple(int(x) for x in a_row)
            seen = np.zeros(n, dtype=bool)
            for b0 in range(n):
                if seen[b0]:
                    continue
                rows = self._conjugates(self.E[b0], U, Uinv)
                idxs = G.lookup_rows(rows)
                seen[idxs] = True
                bmin = min(idxs)
                b_tuple = tuple(int(x) for x in self.E[bmin])
                if _point_orbits([a_tuple, b_tuple], G.degree) != self._group_orbits:
                    continue
                if reaches_order([a_tuple, b_tuple], G.degree, target):
                    out.append(ExteriorPair(rep, bmin))
        out.sort()
        return out


def is_pair_generating(engine, ai, bi):
    G = engine.G
    a = tuple(int(x) for x in engine.E[ai])
    b = tuple(int(x) for x in engine.E[bi])
    if _point_orbits([a, b], G.degree) != engine._group_orbits:
        return False
    return reaches_order([a, b], G.degree, G.order)


def canonical_pair(G, a, b):
    return PairEngine(G).canonical_pair(a, b)


def enumerate_exterior_surjections(G):
    return PairEngine(G).enumerate()


def commutator(G, pair):
    """a*b*a^{-1}*b^{-1} for the pair's representative elements."""
    a = G.element(pair.a)
    b = G.element(pair.b)
    return compose(compose(compose(a, b), inverse(a)), inverse(b))

"""Finite permutation groups with enumerated element tables.

FiniteGroup wraps a generating set with a stabilizer chain (order,
membership) and, on demand, a dense element table: elements are numpy rows
of images, addressed by an index that is a deterministic artifact of the
BFS enumeration order.  Conjugacy classes, centralizers and the exponent
are computed from the table.

Convention reminder: the product p*q acts as "apply p, then q", and
g*x*g^{-1} therefore has images  i -> g^{-1}[x[g[i]]].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

import numpy as np

from .perm import identity, perm_order
from .schreier import StabilizerChain, reaches_order

ENUMERATION_CAP = 1 << 20

_DT = np.int16


class EnumerationCapExceeded(RuntimeError):
    pass


@dataclass
class ConjugacyClassTable:
    """Classes of an enumerated group.

    class_reps[c] is the least element index in class c (classes are
    discovered by an ascending sweep, so reps are canonical).
    conjugators[y] is a permutation g with g * rep * g^{-1} = element y.
    """

    class_reps: list
    class_of: np.ndarray
    class_sizes: list
    conjugators: np.ndarray
    rep_orders: list
    _centralizers: dict = field(default_factory=dict)


class FiniteGroup:
    def __init__(self, generators, descriptor=None, enumeration_cap=ENUMERATION_CAP):
        generators = [tuple(g) for g in generators]
        if not generators:
            raise ValueError("need at least one generator")
        self.degree = len(generators[0])
        if any(len(g) != self.degree for g in generators):
            raise ValueError("generators must share one degree")
        self.generators = generators
        self.descriptor = descriptor
        self.enumeration_cap = enumeration_cap
        self._chain = None
        self._elements = None
        self._index = None
        self._inv_idx = None
        self._classes = None

    # ---- stabilizer-chain services ----

    @property
    def chain(self):
        if self._chain is None:
            self._chain = StabilizerChain(self.generators, self.degree)
        return self._chain

    @property
    def order(self):
        return self.chain.order()

    def contains(self, p):
        return self.chain.contains(tuple(p))

    # ---- element table ----

    def elements(self):
        """(order, degree) array of images; row 0 is the identity.

        Enumeration is a BFS over right multiplication by the generators,
        deterministic given the generator list.
        """
        if self._elements is None:
            n = self.order
            if n > self.enumeration_cap:
                raise EnumerationCapExceeded(
                    "order %d exceeds enumeration cap %d" % (n, self.enumeration_cap)
                )
            deg = self.degree
            gens = np.array(self.generators, dtype=_DT)
            rows = np.empty((n, deg), dtype=_DT)
            rows[0] = np.arange(deg, dtype=_DT)
            index = {rows[0].tobytes(): 0}
            count = 1
            frontier = [0]
            while frontier:
                block = rows[frontier]
                nxt = []
                for g in gens:
                    prod = g[block]  # rows x*g
                    for row in prod:
                        key = row.tobytes()
                        if key not in index:
                            index[key] = count
                            rows[count] = row
                            nxt.append(count)
                            count += 1
                frontier = nxt
            if count != n:
                raise AssertionError("enumeration closed at %d != order %d" % (count, n))
            self._elements = rows
            self._index = index
        return self._elements

    def index_of(self, p):
        self.elements()
        key = np.asarray(p, dtype=_DT).tobytes()
        try:
            return self._index[key]
        except KeyError:
            raise KeyError("permutation is not an element of this group") from None

    def lookup_rows(self, rows):
        """Element indices for a (m, degree) array of image rows."""
        self.elements()
        idx = self._index
        return [idx[row.tobytes()] for row in np.ascontiguousarray(rows, dtype=_DT)]

    def element(self, idx):
        return tuple(int(x) for x in self.elements()[idx])

    def inverse_index(self, idx):
        if self._inv_idx is None:
            E = self.elements()
            inv_rows = np.argsort(E, axis=1).astype(_DT)
            self._inv_idx = np.array(self.lookup_rows(inv_rows), dtype=np.int64)
        return int(self._inv_idx[idx])

    def mul_index(self, i, j):
        """Index of the product (element i) * (element j)."""
        E = self.elements()
        return self._index[E[j][E[i]].tobytes()]

    # ---- conjugacy structure ----

    def classes(self):
        if self._classes is None:
            E = self.elements()
            n = len(E)
            gen_pairs = []
            for g in self.generators:
                ga = np.array(g, dtype=_DT)
                gen_pairs.append((ga, np.argsort(ga).astype(_DT)))
            class_of = np.full(n, -1, dtype=np.int64)
            conj = np.empty_like(E)
            reps, sizes, rep_orders = [], [], []
            ident = np.arange(self.degree, dtype=_DT)
            for start in range(n):
                if class_of[start] >= 0:
                    continue
                cid = len(reps)
                reps.append(start)
                rep_orders.append(perm_order(tuple(int(x) for x in E[start])))
                class_of[start] = cid
                conj[start] = ident
                members = 1
                frontier = [start]
                while frontier:
                    F = E[frontier]
                    CF = conj[frontier]
                    nxt = []
                    for ga, gainv in gen_pairs:
                        Y = gainv[F[:, ga]]  # rows g*x*g^{-1}
                        GY = CF[:, ga]  # conjugator rows g*g_x
                        for row, crow in zip(Y, GY):
                            j = self._index[row.tobytes()]
                            if class_of[j] < 0:
                                class_of[j] = cid
                                conj[j] = crow
                                nxt.append(j)
                                members += 1
                    frontier = nxt
                sizes.append(members)
            self._classes = ConjugacyClassTable(
                class_reps=reps,
                class_of=class_of,
                class_sizes=sizes,
                conjugators=conj,
                rep_orders=rep_orders,
            )
        return self._classes

    def centralizer_indices(self, class_id):
        """Element indices of the centralizer of class_reps[class_id]."""
        table = self.classes()
        cached = table._centralizers.get(class_id)
        if cached is not None:
            return cached
        E = self.elements()
        r = E[table.class_reps[class_id]]
        left = r[E]  # rows x*r
        right = E[:, r]  # rows r*x
        idxs = np.nonzero((left == right).all(axis=1))[0]
        if len(idxs) * table.class_sizes[class_id] != len(E):
            raise AssertionError("orbit-stabilizer mismatch for class %d" % class_id)
        table._centralizers[class_id] = idxs
        return idxs

    def exponent(self):
        table = self.classes()
        return lcm(*table.rep_orders)

    def __repr__(self):
        label = self.descriptor or "<%d gens>" % len(self.generators)
        return "FiniteGroup(%s, degree=%d)" % (label, self.degree)


def group_from_generators(gens, descriptor=None, enumeration_cap=ENUMERATION_CAP):
    return FiniteGroup(gens, descriptor=descriptor, enumeration_cap=enumeration_cap)


def is_generating_pair(G, a, b):
    a, b = tuple(a), tuple(b)
    for p in (a, b):
        if not G.contains(p):
            raise ValueError("element outside the ambient group")
    return reaches_order([a, b], G.degree, G.order)


def element_order(p):
    return perm_order(tuple(p))


def identity_perm(degree):
    return identity(degree)

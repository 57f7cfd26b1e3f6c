"""Schreier-Sims stabilizer chains for permutation groups.

Deterministic construction with incremental bookkeeping: every strong
generator is appended to the generator lists of all levels it is relevant
to, orbits are extended incrementally, and Schreier generators are sifted
once per (orbit point, generator) pair.  Transversal entries are never
overwritten, so a pair that once sifted to the identity stays sifted.

For generation testing against a known target order, `reaches_order`
skips the full Schreier verification: transversal products are a lower
bound for the group order, so hitting the target is already a proof.
"""

from __future__ import annotations

import random

from .perm import first_moved, identity, is_identity


def _compose(p, q):
    # local fast path; compose(p, q)[i] = q[p[i]]
    return tuple(map(q.__getitem__, p))


def _inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class _Level:
    __slots__ = ("point", "sgens", "transversal", "inv_transversal", "applied", "checked")

    def __init__(self, point, degree):
        self.point = point
        self.sgens = []  # strong generators fixing all earlier base points
        ident = identity(degree)
        self.transversal = {point: ident}
        self.inv_transversal = {point: ident}
        self.applied = {point: 0}  # per orbit point: how many sgens were applied
        self.checked = set()  # (point, gen) Schreier pairs already sifted


class StabilizerChain:
    """Base and strong generating set."""

    def __init__(self, generators, degree, complete=True):
        self.degree = degree
        self.levels = []
        self._verified = False
        gens = [tuple(g) for g in generators]
        for g in gens:
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
            self._insert(g)
        for i in range(len(self.levels)):
            self._extend_orbit(i)
        if complete:
            self._complete()

    # -- construction ---------------------------------------------------

    def _insert(self, g):
        """File g with every level whose base prefix it fixes.

        Returns the deepest level index that received g, or None for the
        identity.
        """
        if is_identity(g):
            return None
        i = 0
        while i < len(self.levels) and g[self.levels[i].point] == self.levels[i].point:
            i += 1
        if i == len(self.levels):
            self.levels.append(_Level(first_moved(g), self.degree))
        for j in range(i + 1):
            self.levels[j].sgens.append(g)
        return i

    def _extend_orbit(self, i):
        """Apply any not-yet-applied generators across level i's orbit."""
        lv = self.levels[i]
        total = len(lv.sgens)
        queue = [pt for pt, k in lv.applied.items() if k < total]
        while queue:
            pt = queue.pop()
            start = lv.applied[pt]
            if start >= total:
                continue
            lv.applied[pt] = total
            u = lv.transversal[pt]
            for s in lv.sgens[start:]:
                img = s[pt]
                if img not in lv.transversal:
                    v = _compose(u, s)
                    lv.transversal[img] = v
                    lv.inv_transversal[img] = _inverse(v)
                    lv.applied[img] = 0
                    queue.append(img)

    def _sift(self, g, start=0):
        """Residue of g after sifting through levels[start:]."""
        for lv in self.levels[start:]:
            img = g[lv.point]
            if img == lv.point:
                continue
            uinv = lv.inv_transversal.get(img)
            if uinv is None:
                return g
            g = _compose(g, uinv)
        return g

    def _complete(self):
        if self._verified:
            return
        i = len(self.levels) - 1
        while i >= 0:
            self._extend_orbit(i)
            lv = self.levels[i]
            jumped = False
            for pt in list(lv.transversal):
                u = lv.transversal[pt]
                for s in lv.sgens:
                    key = (pt, s)
                    if key in lv.checked:
                        continue
                    lv.checked.add(key)
                    sg = _compose(_compose(u, s), lv.inv_transversal[s[pt]])
                    residue = self._sift(sg, i + 1)
                    if is_identity(residue):
                        continue
                    k = self._insert(residue)
                    for j in range(i + 1, k + 1):
                        self._extend_orbit(j)
                    i = k
                    jumped = True
                    break
                if jumped:
                    break
            if not jumped:
                i -= 1
        self._verified = True

    # -- queries ---------------------------------------------------------

    def order(self):
        self._complete()
        n = 1
        for lv in self.levels:
            n *= len(lv.transversal)
        return n

    def _partial_order(self):
        n = 1
        for lv in self.levels:
            n *= len(lv.transversal)
        return n

    def contains(self, g):
        g = tuple(g)
        if len(g) != self.degree:
            return False
        self._complete()
        return is_identity(self._sift(g))

    def base(self):
        return [lv.point for lv in self.levels]


def subgroup_order(gens, degree):
    """Order of the group generated by gens (convenience wrapper)."""
    return StabilizerChain(gens, degree).order()


def reaches_order(gens, degree, target, seed=0x5EED):
    """True iff the group generated by gens has order exactly `target`.

    `target` must be an upper bound (e.g. the order of an ambient group the
    generators live in).  The probe inserts sifted random subproducts until
    the transversal product hits the target; only on repeated failure does
    it fall back to the full deterministic construction.
    """
    gens = [tuple(g) for g in gens]
    chain = StabilizerChain(gens, degree, complete=False)
    if chain._partial_order() == target:
        return True
    rng = random.Random(seed)
    pool = [g for g in gens if not is_identity(g)]
    if not pool:
        return target == 1
    acc = pool[rng.randrange(len(pool))]
    stale = 0
    limit = 20 + 4 * len(chain.levels)
    while stale < limit:
        acc = _compose(acc, pool[rng.randrange(len(pool))])
        if len(pool) < 12:
            pool.append(acc)
        residue = chain._sift(acc)
        if is_identity(residue):
            stale += 1
            continue
        k = chain._insert(residue)
        for j in range(k + 1):
            chain._extend_orbit(j)
        if chain._partial_order() == target:
            return True
        stale = 0
    return chain.order() == target

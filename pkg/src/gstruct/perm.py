"""Elementary permutation arithmetic.

Permutations on {0, ..., n-1} are stored as tuples of images.  The
composition convention is frozen once and for all:

    compose(p, q)[i] = q[p[i]]

i.e. ``compose(p, q)`` applies p first and q second (a right action on
points).  Whenever a group product ``p * q`` appears in a formula, it maps
to ``compose(p, q)`` under this convention.
"""

from __future__ import annotations

import re
from math import lcm

Perm = tuple


def identity(degree):
    return tuple(range(degree))


def compose(p, q):
    """Product p*q: apply p, then q."""
    if len(p) != len(q):
        raise ValueError("degree mismatch: %d != %d" % (len(p), len(q)))
    return tuple(q[i] for i in p)


def inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_identity(p):
    return all(i == j for i, j in enumerate(p))


def first_moved(p):
    """Smallest non-fixed point, or None for the identity."""
    for i, j in enumerate(p):
        if i != j:
            return i
    return None


def cycles(p, include_fixed=False):
    """Disjoint cycles of p, each starting at its least point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        if len(cyc) > 1 or include_fixed:
            out.append(tuple(cyc))
    return out


def perm_order(p):
    return lcm(*(len(c) for c in cycles(p))) if not is_identity(p) else 1


def power(p, k):
    """p^k by shifting each cycle k places; k may be negative."""
    n = len(p)
    out = [0] * n
    for cyc in cycles(p, include_fixed=True):
        m = len(cyc)
        shift = k % m
        for i, pt in enumerate(cyc):
            out[pt] = cyc[(i + shift) % m]
    return tuple(out)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, degree):
    """Parse disjoint-cycle notation with 1-based points, e.g. "(1,2)(3,4)".

    "()" denotes the identity.  Whitespace is ignored.
    """
    text = "".join(text.split())
    if not text:
        raise ValueError("empty permutation string")
    bodies = _CYCLE_RE.findall(text)
    if not bodies or "(" + ")(".join(bodies) + ")" != text:
        raise ValueError("malformed cycle notation: %r" % text)
    images = list(range(degree))
    seen = set()
    for body in bodies:
        if not body:
            continue
        pts = [int(tok) - 1 for tok in body.split(",")]
        if any(x < 0 or x >= degree for x in pts):
            raise ValueError("point out of range 1..%d in %r" % (degree, text))
        if len(set(pts)) != len(pts) or seen & set(pts):
            raise ValueError("repeated point in %r" % text)
        seen |= set(pts)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return tuple(images)


def format_cycles(p):
    """Inverse of parse_cycles: 1-based disjoint cycles, "()" for identity."""
    cycs = cycles(p)
    if not cycs:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cycs)

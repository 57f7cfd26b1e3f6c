#!/usr/bin/env python3
"""Build the shipped Sz(8) generator file.

Constructs the Suzuki group Sz(8) as 4x4 matrices over GF(8) (Frobenius
twist theta: a -> a^4), takes the 65-point orbit of a distinguished
projective point (the ovoid), converts a small pool of matrices to
permutations of the ovoid, and searches for a pair generating the full
group of order 29120.  Writes src/gstruct/data/sz8.gens.

Run from the repository root:  python3 scripts/make_sz8_gens.py
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gstruct.families import write_generator_file
from gstruct.schreier import StabilizerChain

# ---- GF(8) = F2[x]/(x^3 + x + 1), elements as bit masks 0..7 ----


def gf_mul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & 8:
            a ^= 0b1011  # x^3 = x + 1
    return r


def gf_pow(a, k):
    r = 1
    for _ in range(k):
        r = gf_mul(r, a)
    return r


def gf_inv(a):
    if a == 0:
        raise ZeroDivisionError
    return gf_pow(a, 6)  # a^7 = 1 for a != 0


THETA = 4  # theta^2 = squaring twice = Frobenius^2; a^theta = a^4


def tw(a):
    return gf_pow(a, THETA)


# ---- matrices ----


def mat_mul(A, B):
    return tuple(
        tuple(
            gf_mul(A[i][0], B[0][j])
            ^ gf_mul(A[i][1], B[1][j])
            ^ gf_mul(A[i][2], B[2][j])
            ^ gf_mul(A[i][3], B[3][j])
            for j in range(4)
        )
        for i in range(4)
    )


def mat_vec(A, v):
    return tuple(
        gf_mul(A[i][0], v[0])
        ^ gf_mul(A[i][1], v[1])
        ^ gf_mul(A[i][2], v[2])
        ^ gf_mul(A[i][3], v[3])
        for i in range(4)
    )


def S(a, b):
    return (
        (1, 0, 0, 0),
        (a, 1, 0, 0),
        (gf_mul(gf_pow(a, 1 + THETA), 1) ^ b, tw(a), 1, 0),
        (gf_pow(a, 2 + THETA) ^ gf_mul(a, b) ^ tw(b), b, a, 1),
    )


def M(lam):
    l3 = gf_pow(lam, 3)
    l2 = gf_mul(lam, lam)
    return (
        (l3, 0, 0, 0),
        (0, l2, 0, 0),
        (0, 0, gf_inv(l2), 0),
        (0, 0, 0, gf_inv(l3)),
    )


W = ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))


def proj(v):
    """Normalize a nonzero GF(8)^4 vector projectively."""
    for x in v:
        if x:
            c = gf_inv(x)
            return tuple(gf_mul(c, y) for y in v)
    raise ValueError("zero vector")


def main():
    gens_mat = [S(a, b) for a in range(8) for b in range(8) if (a, b) != (0, 0)]
    gens_mat += [M(lam) for lam in range(2, 8)] + [W]

    # ovoid = orbit of (0:0:0:1)
    start = proj((0, 0, 0, 1))
    orbit = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for A in gens_mat:
            w = proj(mat_vec(A, v))
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    points = sorted(orbit)
    print("ovoid size:", len(points))
    assert len(points) == 65

    pos = {v: i for i, v in enumerate(points)}

    def to_perm(A):
        return tuple(pos[proj(mat_vec(A, points[i]))] for i in range(65))

    full = StabilizerChain([to_perm(A) for A in gens_mat], 65)
    print("group order from all generators:", full.order())
    assert full.order() == 29120

    # pool of candidate elements for a 2-generator pair
    pool = [
        to_perm(S(1, 0)),
        to_perm(S(0, 1)),
        to_perm(S(1, 1)),
        to_perm(mat_mul(S(1, 0), W)),
        to_perm(mat_mul(M(2), W)),
        to_perm(mat_mul(S(1, 1), mat_mul(M(2), W))),
        to_perm(W),
        to_perm(M(2)),
    ]
    for g1, g2 in itertools.combinations(pool, 2):
        if StabilizerChain([g1, g2], 65).order() == 29120:
            out = Path(__file__).resolve().parents[1] / "src" / "gstruct" / "data" / "sz8.gens"
            out.parent.mkdir(parents=True, exist_ok=True)
            write_generator_file(out, 65, [g1, g2])
            print("wrote", out)
            return
    raise SystemExit("no generating pair found in pool")


if __name__ == "__main__":
    main()

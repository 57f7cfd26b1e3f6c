"""Relator words for the reduction of the modular group mod N.

Words are strings over S, T (and s, t for inverses), multiplied left to
right.  The pool combines the two modular-group relators with T^N and
torus relators built from the standard elementary-matrix words

    R    = S T^{-1} S^{-1}          (lower unitriangular)
    w(a) = T^a R^{-1/a} T^a         (antidiagonal, w(1) = S)
    h(a) = w(a) w(1)^{-1}           (diag(a, 1/a))

for a set of units generating (Z/N)^x.  Every relator is checked against
exact 2x2 arithmetic mod N at assembly time, so a failed relator on an
orbit is always a genuine certificate that the action does not factor.
Completeness of the pool for a given N is certified by coset enumeration
over <T> (`validate_presentation`), whose target index |SL2(Z/N)|/N is
small even for N around 60.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import groupby

from .perm import compose, identity, inverse, power
from .toddcox import coset_enumeration

S_MAT = (0, 1, -1, 0)
T_MAT = (1, 1, 0, 1)


def sl2_order(n):
    """|SL2(Z/nZ)| = n^3 prod over primes p|n of (1 - p^-2)."""
    if n == 1:
        return 1
    result = n**3
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result = result // (p * p) * (p * p - 1)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result = result // (m * m) * (m * m - 1)
    return result


def mat_mul(A, B, n):
    a, b, c, d = A
    e, f, g, h = B
    return ((a * e + b * g) % n, (a * f + b * h) % n, (c * e + d * g) % n, (c * f + d * h) % n)


def mat_of_word(word, n):
    M = (1 % n, 0, 0, 1 % n)
    sinv = (0, -1 % n, 1, 0)
    tinv = (1, -1 % n, 0, 1)
    lut = {"S": S_MAT, "T": T_MAT, "s": sinv, "t": tinv}
    for ch in word:
        M = mat_mul(M, tuple(x % n for x in lut[ch]), n)
    return M


def invert_word(word):
    return word[::-1].swapcase()


def _t_pow(k, n):
    k %= n
    if k > n - k:
        return "t" * (n - k)
    return "T" * k


def _r_pow(k, n):
    # R^k = S T^{-k} S^{-1}
    k %= n
    if k == 0:
        return ""
    return "S" + _t_pow(-k, n) + "s"


def _w(a, n):
    ainv = pow(a, -1, n)
    return _t_pow(a, n) + _r_pow(-ainv, n) + _t_pow(a, n)


def _h(a, n):
    return _w(a, n) + invert_word(_w(1, n))


def unit_generators(n):
    """Small generating set of (Z/n)^x, with -1 first when nontrivial."""
    if n <= 2:
        return []
    units = [a for a in range(1, n) if _gcd(a, n) == 1]
    span = {1}
    gens = []
    for a in [n - 1] + units:
        if a in span:
            continue
        gens.append(a)
        frontier = [a]
        while frontier:
            x = frontier.pop()
            for y in list(span):
                z = x * y % n
                if z not in span:
                    span.add(z)
                    frontier.append(z)
        if len(span) == len(units):
            break
    return gens


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _prime_power_factors(n):
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            q = 1
            while m % p == 0:
                q *= p
                m //= p
            out.append(q)
        p += 1
    if m > 1:
        out.append(m)
    return out


def _torus_relators(q, n, k):
    """Relators of the mod-q factor, written with the scaled words
    T_f = T^k, R_f = R^k where k = 1 mod q and 0 mod n/q."""

    def tp(j):
        return _t_pow(k * j, n)

    def rp(j):
        if j % q == 0:
            return ""
        return "S" + _t_pow(-k * j, n) + "s"

    def w(a):
        return tp(a) + rp(-pow(a, -1, q)) + tp(a)

    sf = w(1)
    sfi = invert_word(sf)

    def h(a):
        return w(a) + sfi

    tf = tp(1)
    rels = [sf * 4, sf + tf + sfi + tf + sfi + tf, (sf + tf) * 3, tp(q)]
    if q == 2:
        rels.append(sf + sf)
    gens = unit_generators(q)
    for a in gens:
        ha = h(a)
        hai = invert_word(ha)
        rels.append(ha + tf + hai + tp(-pow(a, 2, q)))
        rels.append(ha + rp(1) + hai + rp(-pow(a, -2, q)))
        if a == q - 1:
            rels.append(ha + sf + sf)
    for a in gens:
        for b in gens:
            rels.append(h(a) + h(b) + invert_word(h(a * b % q)))
    return [r for r in rels if r], sf, tf


def _comm(u, v):
    return u + v + invert_word(u) + invert_word(v)


@lru_cache(maxsize=None)
def relators_for(n):
    """Relator words for SL2(Z/nZ); each is verified to reduce to I mod n."""
    # modular-group relators for S = [[0,1],[-1,0]]: S^4, the braid-derived
    # S T S^-1 T S^-1 T, and (ST)^3 (here ST has trace -1, hence order 3)
    rels = ["SSSS", "STsTsT", "STSTST"]
    if n == 1:
        rels += ["S", "T"]
        return tuple(rels)
    rels.append("T" * n)
    if n == 2:
        rels.append("SS")
    if n % 6 == 0:
        # T^n alone does not cut SL2(Z) down to SL2(Z/n) when 6 | n (the
        # quotient by its normal closure is an infinite triangle-group
        # extension), so present each prime-power factor separately and
        # make the factors commute.
        factors = _prime_power_factors(n)
        parts = []
        for q in factors:
            m = n // q
            k = (m * pow(m, -1, q)) % n
            frels, sf, tf = _torus_relators(q, n, k)
            rels += frels
            parts.append((sf, tf))
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                rels.append(_comm(parts[i][0], parts[j][0]))
                rels.append(_comm(parts[i][0], parts[j][1]))
                rels.append(_comm(parts[j][0], parts[i][1]))
        rels.append("s" + "".join(sf for sf, _ in parts))
    else:
        gens = unit_generators(n)
        for a in gens:
            h = _h(a, n)
            hinv = invert_word(h)
            rels.append(h + "T" + hinv + _t_pow(-pow(a, 2, n), n))
            rels.append(h + _r_pow(1, n) + hinv + _r_pow(-pow(a, -2, n), n))
            if a == n - 1:
                rels.append(h + "SS")  # h(-1) = -I = S^2
        for a in gens:
            for b in gens:
                rels.append(_h(a, n) + _h(b, n) + invert_word(_h(a * b % n, n)))
    rels = [r for r in rels if r]
    for r in rels:
        if mat_of_word(r, n) != (1 % n, 0, 0, 1 % n):
            raise AssertionError("relator %r is not trivial mod %d" % (r, n))
    return tuple(rels)


_LETTER = {"S": 0, "s": 1, "T": 2, "t": 3}


@lru_cache(maxsize=None)
def validate_presentation(n, limit=400000):
    """Certify that relators_for(n) presents SL2(Z/nZ).

    Runs coset enumeration over the cyclic subgroup <T>; the presented
    group surjects onto SL2(Z/nZ) (relators hold there) and T has order
    exactly n on both sides, so the enumeration index equals
    |SL2(Z/n)|/n iff the presentation is exact.  Returns True/False, or
    None when the enumeration exceeds `limit` cosets.
    """
    rel_words = [[_LETTER[c] for c in r] for r in relators_for(n)]
    sub = [[_LETTER["T"]]] if n > 1 else []
    index = coset_enumeration(2, rel_words, sub, limit=limit)
    if index is None:
        return None
    return index == sl2_order(n) // n


def word_permutation(word, perm_e, perm_t):
    """Evaluate a relator word left to right; long runs of one letter are
    collapsed into a single cycle-shift power."""
    base = {"S": perm_e, "s": inverse(perm_e), "T": perm_t, "t": inverse(perm_t)}
    cur = identity(len(perm_e))
    for ch, run in groupby(word):
        cur = compose(cur, power(base[ch], sum(1 for _ in run)))
    return cur


def relations_hold(perm_e, perm_t, n):
    """True iff every relator acts trivially on the orbit."""
    ident = identity(len(perm_e))
    for word in relators_for(n):
        if word_permutation(word, perm_e, perm_t) != ident:
            return False
    return True

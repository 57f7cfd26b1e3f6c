"""HLT coset enumeration (Todd-Coxeter) for small finitely presented groups.

Words are sequences of letters 2*g (generator g) and 2*g+1 (its inverse).
`coset_enumeration` returns the index of the subgroup generated by
`subgens` in the presented group, or None if `limit` cosets are exceeded.
Follows the classic scan-and-fill strategy with coincidence processing.
"""

from __future__ import annotations


def _inv_letter(x):
    return x ^ 1


class _Overflow(Exception):
    pass


def coset_enumeration(ngens, relators, subgens, limit=200000):
    nlet = 2 * ngens
    # table[x][c] = image of coset c under letter x; 0 = undefined; cosets 1-based
    table = [[0, 0] for _ in range(nlet)]  # index 0 unused
    p = [0, 1]  # union-find parent (p[c] <= c); p[c] == c means live

    def define(c, x):
        n = len(p)
        if n > limit:
            raise _Overflow
        p.append(n)
        for col in table:
            col.append(0)
        table[x][c] = n
        table[_inv_letter(x)][n] = c
        return n

    def rep(c):
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def merge(a, b, queue):
        a, b = rep(a), rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        p[b] = a
        queue.append(b)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        while queue:
            y = queue.pop()
            for x in range(nlet):
                d = table[x][y]
                if not d:
                    continue
                table[_inv_letter(x)][d] = 0
                table[x][y] = 0
                mu, nu = rep(y), rep(d)
                if table[x][mu]:
                    merge(nu, table[x][mu], queue)
                elif table[_inv_letter(x)][nu]:
                    merge(mu, table[_inv_letter(x)][nu], queue)
                else:
                    table[x][mu] = nu
                    table[_inv_letter(x)][nu] = mu

    def scan_and_fill(alpha, word):
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and table[word[i]][f]:
                f = table[word[i]][f]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[_inv_letter(word[j])][b]:
                b = table[_inv_letter(word[j])][b]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[word[i]][f] = b
                table[_inv_letter(word[i])][b] = f
                return
            f = define(f, word[i])
            i += 1

    try:
        for w in subgens:
            scan_and_fill(1, w)
        alpha = 1
        while alpha < len(p):
            if rep(alpha) != alpha:
                alpha += 1
                continue
            for w in relators:
                scan_and_fill(alpha, w)
                if rep(alpha) != alpha:
                    break
            else:
                # ensure the row is fully defined (HLT fill)
                for x in range(nlet):
                    if rep(alpha) != alpha:
                        break
                    if not table[x][alpha]:
                        define(alpha, x)
            alpha += 1
    except _Overflow:
        return None
    return sum(1 for c in range(1, len(p)) if rep(c) == c)

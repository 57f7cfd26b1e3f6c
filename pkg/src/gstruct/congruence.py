"""Congruence testing for a component's stabilizer subgroup.

The stabilizer is congruence iff it contains the principal congruence
subgroup of level N, where N is the geometric level when -I belongs to
the stabilizer and twice the level otherwise.  Because that subgroup is
normal, this is equivalent to the orbit action of E and T factoring
through the reduction mod N, which is what both methods below test.

diagonal_oracle: BFS the simultaneous action on (SL2(Z/N) matrix, orbit
point) starting from (I, base).  A matrix reached with two different
points is a certificate of non-factoring; exhausting all |SL2(Z/N)|
matrices without collision proves factoring.  The BFS aborts as
undetermined when the state cap is exceeded, so collisions found early
still certify noncongruence even when |SL2(Z/N)| is above the cap.

relation_check: evaluate the relator family of the presentation mod N on
the orbit permutations.  A failed relator is always a noncongruence
certificate (the relator word reduces to I mod N); a fully satisfied
family proves congruence once the presentation is certified exact by
coset enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .relations import (
    S_MAT,
    T_MAT,
    mat_mul,
    relations_hold,
    sl2_order,
    validate_presentation,
)

ORACLE_CAP = 10**6
# feasibility gate for the coset-enumeration certificate: index of <T>
_TC_INDEX_CAP = 60000


@dataclass(frozen=True)
class CongruenceVerdict:
    verdict: str  # "congruence" | "noncongruence" | "undetermined"
    tested_modulus: int
    method: str


def congruence_modulus(level, c_neg1):
    return level if c_neg1 else 2 * level


def diagonal_oracle(perm_e, perm_t, n, cap=ORACLE_CAP):
    """Verdict string, or None when the cap is exceeded."""
    if n == 1:
        return "congruence"
    ident = (1, 0, 0, 1)
    gens = (
        (tuple(x % n for x in S_MAT), perm_e),
        (tuple(x % n for x in T_MAT), perm_t),
    )
    states = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for M in frontier:
            p = states[M]
            for g, perm in gens:
                M2 = mat_mul(M, g, n)
                p2 = perm[p]
                q = states.get(M2)
                if q is None:
                    if len(states) >= cap:
                        return None
                    states[M2] = p2
                    nxt.append(M2)
                elif q != p2:
                    return "noncongruence"
        frontier = nxt
    if len(states) != sl2_order(n):
        raise AssertionError("oracle closed on %d of %d matrices" % (len(states), sl2_order(n)))
    return "congruence"


def relation_check(perm_e, perm_t, n):
    """Verdict string, or None when the presentation cannot be certified."""
    if n == 1:
        return "congruence"
    if not relations_hold(perm_e, perm_t, n):
        return "noncongruence"
    if sl2_order(n) // n > _TC_INDEX_CAP:
        return None
    certified = validate_presentation(n)
    if certified is True:
        return "congruence"
    if certified is False:
        raise AssertionError("relator family for N=%d is not a presentation" % n)
    return None


def decide_congruence(perm_e, perm_t, level, c_neg1, method="both", oracle_cap=ORACLE_CAP):
    """Combine the requested methods into a CongruenceVerdict."""
    n = congruence_modulus(level, c_neg1)
    if method == "skip":
        return CongruenceVerdict("undetermined", n, "skip")
    answers = {}
    if method in ("oracle", "both"):
        answers["diagonal_oracle"] = diagonal_oracle(perm_e, perm_t, n, cap=oracle_cap)
    if method in ("relations", "both"):
        answers["relation_check"] = relation_check(perm_e, perm_t, n)
    decided = {k: v for k, v in answers.items() if v is not None}
    if not decided:
        return CongruenceVerdict("undetermined", n, method)
    verdicts = set(decided.values())
    if len(verdicts) > 1:
        raise AssertionError(
            "methods disagree at N=%d: %s" % (n, sorted(decided.items()))
        )
    used = "both" if len(decided) == 2 else next(iter(decided))
    return CongruenceVerdict(verdicts.pop(), n, used)

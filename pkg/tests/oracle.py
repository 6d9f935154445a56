"""Slow, obviously-correct reference computations used to cross-check the fast code."""
from itertools import product


def poly_mul(R, f, g):
    out = [R.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = int(R.add_table[out[i + j], R.mul_table[a, b]])
    return out


def zero_product_pairs(R, d):
    polys = list(product(range(R.order), repeat=d + 1))
    return sorted((f, g) for f in polys for g in polys
                  if all(c == R.zero for c in poly_mul(R, f, g)))


def power_nilpotent(R, x):
    y = x
    for _ in range(R.order + 1):
        if y == R.zero:
            return True
        y = int(R.mul_table[y, x])
    return False


def armendariz(R, d):
    for f, g in zero_product_pairs(R, d):
        if any(R.mul_table[a, b] != R.zero for a in f for b in g):
            return False
    return True


def semicommutative(R):
    n = range(R.order)
    M = R.mul_table
    return all(M[M[a, r], b] == R.zero for a in n for b in n if M[a, b] == R.zero for r in n)


def reversible(R):
    n = range(R.order)
    M = R.mul_table
    return all(M[b, a] == R.zero for a in n for b in n if M[a, b] == R.zero)


def abelian(R):
    n = range(R.order)
    M = R.mul_table
    idem = [e for e in n if M[e, e] == e]
    return all(M[e, r] == M[r, e] for e in idem for r in n)


def reduced(R):
    return all(not power_nilpotent(R, x) for x in range(R.order) if x != R.zero)


def jacobson_by_ideals(R):
    """Largest nilpotent ideal, found as the sum of all nilpotent principal ideals."""
    members = {R.zero}
    for x in range(R.order):
        I = R.ideal([x])
        if _nilpotent_ideal(R, set(I.members)):
            members |= set(I.members)
    return frozenset(R.ideal(sorted(members)).members)


def _nilpotent_ideal(R, I):
    power = set(I)
    for _ in range(R.order + 1):
        if power == {R.zero}:
            return True
        prods = {int(R.mul_table[a, b]) for a in power for b in I}
        power = set(R.closure(prods, mode="additive").members) if prods else {R.zero}
    return False

"""Brute-force reference evaluators.

Deliberately naive: plain loops over raw tables, no numpy and nothing from
the package under test, so they stay independent of the code they check.
"""
from itertools import product


def hemiring_axioms_hold(add, mul):
    """Set of violated axiom names, evaluated directly from the definitions."""
    n = len(add)
    R = range(n)
    bad = set()
    for x, y, z in product(R, R, R):
        if add[add[x][y]][z] != add[x][add[y][z]]:
            bad.add("additive associativity")
        if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
            bad.add("multiplicative associativity")
        if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
            bad.add("left distributivity")
        if mul[add[x][y]][z] != add[mul[x][z]][mul[y][z]]:
            bad.add("right distributivity")
    for x, y in product(R, R):
        if add[x][y] != add[y][x]:
            bad.add("additive commutativity")
    for x in R:
        if add[0][x] != x or add[x][0] != x:
            bad.add("additive identity")
        if mul[0][x] != 0 or mul[x][0] != 0:
            bad.add("multiplicative zero")
    return bad


def axiom_fails_at(axiom, add, mul, w):
    """Re-evaluate one axiom at one witness tuple."""
    if axiom == "additive associativity":
        x, y, z = w
        return add[add[x][y]][z] != add[x][add[y][z]]
    if axiom == "multiplicative associativity":
        x, y, z = w
        return mul[mul[x][y]][z] != mul[x][mul[y][z]]
    if axiom == "left distributivity":
        x, y, z = w
        return mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]
    if axiom == "right distributivity":
        x, y, z = w
        return mul[add[x][y]][z] != add[mul[x][z]][mul[y][z]]
    if axiom == "additive commutativity":
        x, y = w
        return add[x][y] != add[y][x]
    if axiom == "additive identity":
        (x,) = w
        return add[0][x] != x or add[x][0] != x
    if axiom == "multiplicative zero":
        (x,) = w
        return mul[0][x] != 0 or mul[x][0] != 0
    raise KeyError(axiom)


def is_h_ideal(add, mul, A):
    n = len(add)
    A = set(A)
    if not A:
        return False
    for a, b in product(A, A):
        if add[a][b] not in A:
            return False
    for r, a in product(range(n), A):
        if mul[r][a] not in A:
            return False
    for x, z, a, b in product(range(n), range(n), A, A):
        if add[add[x][a]][z] == add[b][z] and x not in A:
            return False
    return True


def power_set_h_ideals(add, mul):
    n = len(add)
    out = []
    for bits in range(1, 1 << n):
        A = frozenset(x for x in range(n) if bits >> x & 1)
        if is_h_ideal(add, mul, A):
            out.append(A)
    return sorted(out, key=lambda S: (len(S), sum(1 << x for x in S)))


def if_violations(add, mul, mu, lam):
    """All (condition, witness) pairs violating the six IF h-ideal conditions.

    Witness grammar matches the package: ``x y`` for 1-4, ``x a b z`` with
    the least ``z`` for 5-6.
    """
    n = len(add)
    R = range(n)
    out = set()
    for x, y in product(R, R):
        if mu[add[x][y]] < min(mu[x], mu[y]):
            out.add(("1", (x, y)))
        if lam[add[x][y]] > max(lam[x], lam[y]):
            out.add(("2", (x, y)))
        if mu[mul[x][y]] < mu[y]:
            out.add(("3", (x, y)))
        if lam[mul[x][y]] > lam[y]:
            out.add(("4", (x, y)))
    for x, a, b in product(R, R, R):
        zs = [z for z in R if add[add[x][a]][z] == add[b][z]]
        if not zs:
            continue
        z = zs[0]
        if mu[x] < min(mu[a], mu[b]):
            out.add(("5", (x, a, b, z)))
        if lam[x] > max(lam[a], lam[b]):
            out.add(("6", (x, a, b, z)))
    return out


def windowed_if_ok(W, mu, lam):
    """IF h-ideal conditions on 0..W, only instantiations kept in the window.

    In the naturals ``x + a + z == b + z`` iff ``x + a == b``.
    """
    R = range(W + 1)
    for x, y in product(R, R):
        if x + y <= W:
            if mu[x + y] < min(mu[x], mu[y]) or lam[x + y] > max(lam[x], lam[y]):
                return False
        if x * y <= W:
            if mu[x * y] < mu[y] or lam[x * y] > lam[y]:
                return False
    for x, a in product(R, R):
        b = x + a
        if b <= W:
            if mu[x] < min(mu[a], mu[b]) or lam[x] > max(lam[a], lam[b]):
                return False
    return True


def ifs_supersets(mu, lam, mu2, lam2):
    """``(mu2, lam2)`` contains ``(mu, lam)`` pointwise."""
    return all(m <= m2 and l >= l2 for m, l, m2, l2 in zip(mu, lam, mu2, lam2))


def grid_ifs_pairs(grid):
    return [(m, l) for m in grid for l in grid if m + l <= 1]


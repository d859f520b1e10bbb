"""Brute-force oracles for frozen test fixtures.

Every expected value hard-coded in the C++ tests that is not a closed form
comes from this script. It shares no code with the library.
"""
import itertools
import math
from fractions import Fraction

import mpmath


def edges_of(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def adj_from_mask(n, mask, edges):
    adj = [[False] * n for _ in range(n)]
    for b, (i, j) in enumerate(edges):
        if mask >> b & 1:
            adj[i][j] = adj[j][i] = True
    return adj


def has_claw(n, adj):
    for c in range(n):
        nb = [v for v in range(n) if adj[c][v]]
        for a, b, d in itertools.combinations(nb, 3):
            if not adj[a][b] and not adj[a][d] and not adj[b][d]:
                return True
    return False


def is_bipartite(n, adj):
    col = [-1] * n
    for s in range(n):
        if col[s] >= 0:
            continue
        col[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in range(n):
                if adj[u][v]:
                    if col[v] < 0:
                        col[v] = 1 - col[u]
                        stack.append(v)
                    elif col[v] == col[u]:
                        return False
    return True


def complement(n, adj):
    return [[(i != j) and not adj[i][j] for j in range(n)] for i in range(n)]


def clawfree_table(n):
    E = edges_of(n)
    t = [0] * (len(E) + 1)
    cob = [0] * (len(E) + 1)
    bip = [0] * (len(E) + 1)
    for mask in range(1 << len(E)):
        adj = adj_from_mask(n, mask, E)
        m = bin(mask).count("1")
        if not has_claw(n, adj):
            t[m] += 1
        if is_bipartite(n, complement(n, adj)):
            cob[m] += 1
        if is_bipartite(n, adj):
            bip[m] += 1
    return t, cob, bip


def defect(n, adj, assign):
    A = [v for v in range(n) if assign[v] == 0]
    B = [v for v in range(n) if assign[v] == 1]
    C = [v for v in range(n) if assign[v] == 2]
    b = 0
    for P in (A, B):
        for u, v in itertools.combinations(P, 2):
            b += not adj[u][v]
    for u, v in itertools.combinations(range(n), 2):
        if adj[u][v] and (u in C or v in C):
            b += 1
    return b


def optimal_division(n, adj):
    best = None
    for assign in itertools.product(range(3), repeat=n):
        if 0 not in assign or 1 not in assign:
            continue
        d = defect(n, adj, assign)
        if best is None or d < best[0]:
            best = (d, assign)
    return best


def max_matching(n, adj):
    E = [(i, j) for i, j in edges_of(n) if adj[i][j]]
    best = 0

    def rec(k, used, size):
        nonlocal best
        best = max(best, size)
        for idx in range(k, len(E)):
            i, j = E[idx]
            if not (used >> i & 1) and not (used >> j & 1):
                rec(idx + 1, used | 1 << i | 1 << j, size + 1)

    rec(0, 0, 0)
    return best


def cubic_clawfree(v):
    E = edges_of(v)
    count = 0
    total = 0
    deg = [0] * v
    chosen = []

    def rec(idx):
        nonlocal count, total
        if idx == len(E):
            if all(d == 3 for d in deg):
                total += 1
                adj = [[False] * v for _ in range(v)]
                for i, j in chosen:
                    adj[i][j] = adj[j][i] = True
                if not has_claw(v, adj):
                    count += 1
            return
        i, j = E[idx]
        # vertex i is finalized once we pass its last edge
        if deg[i] < 3 and deg[j] < 3:
            deg[i] += 1
            deg[j] += 1
            chosen.append((i, j))
            ok = True
            if j == v - 1 and deg[i] != 3:
                ok = False
            if ok:
                rec(idx + 1)
            chosen.pop()
            deg[i] -= 1
            deg[j] -= 1
        if j == v - 1 and deg[i] != 3:
            return
        rec(idx + 1)

    rec(0)
    return count, total


def colorings(n):
    E = edges_of(n)
    idx = {e: k for k, e in enumerate(E)}
    tris = list(itertools.combinations(range(n), 3))
    valid = 0
    eq = set()
    viol = 0
    hist = {}
    for col in itertools.product(range(3), repeat=len(E)):  # 0=R 1=G 2=B
        ok = True
        for a, b, c in tris:
            cs = sorted((col[idx[(a, b)]], col[idx[(a, c)]], col[idx[(b, c)]]))
            if cs == [0, 0, 0] or cs == [0, 0, 1]:
                ok = False
                break
        if not ok:
            continue
        valid += 1
        er = col.count(0)
        eb = col.count(2)
        if er > eb + n // 2:
            viol += 1
        if er == eb + n // 2:
            eq.add(col)
        hist[er - eb] = hist.get(er - eb, 0) + 1
    return valid, viol, eq, hist


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for k in range(len(p)):
            yield p[:k] + [[first] + p[k]] + p[k + 1:]
        yield [[first]] + p


def extremal_E(n, vertices=None):
    verts = list(range(n)) if vertices is None else vertices
    N = len(verts)
    out = set()
    E = edges_of(n)
    idx = {e: k for k, e in enumerate(E)}
    for part in set_partitions(verts):
        odd = sum(len(h) % 2 for h in part)
        if (N % 2 == 1 and odd != 1) or (N % 2 == 0 and odd != 0):
            continue
        choices = []
        for h in part:
            s = len(h)
            splits = []
            for X in itertools.combinations(h, s // 2):
                Y = tuple(v for v in h if v not in X)
                splits.append((X, Y))
            choices.append(splits)
        for pick in itertools.product(*choices):
            col = [1] * len(E)  # green default
            for X, Y in pick:
                for P in (X, Y):
                    for u, w in itertools.combinations(sorted(P), 2):
                        col[idx[(u, w)]] = 2
                for u in X:
                    for w in Y:
                        col[idx[(min(u, w), max(u, w))]] = 0
            out.add(tuple(col))
    return out


def extremal_F(n):
    out = set()
    for k in range(1, n + 1):
        for U in itertools.combinations(range(n), k):
            out |= extremal_E(n, list(U))
    return out


def main():
    print("== clawfree / cobipartite / bipartite tables ==")
    for n in range(1, 7):
        t, cob, bip = clawfree_table(n)
        print(n, "C(n,m)=", t, "sum", sum(t))
        print(n, "Bc(n,m)=", cob)
        print(n, "B(n,k)=", bip)

    print("== defect / matching ==")
    c5 = [[abs(i - j) % 5 in (1, 4) for j in range(5)] for i in range(5)]
    print("C5 optimal division", optimal_division(5, c5))
    pet = [[False] * 10 for _ in range(10)]
    for i in range(5):
        for a, b in ((i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)):
            pet[a][b] = pet[b][a] = True
    print("Petersen matching", max_matching(10, pet))

    print("== cubic claw-free (labeled) ==")
    for v in (4, 6, 8):
        print(v, cubic_clawfree(v))

    print("== colorings ==")
    for n in range(2, 6):
        valid, viol, eq, hist = colorings(n)
        En = extremal_E(n)
        print(n, "valid", valid, "viol", viol, "eq", len(eq), "|E|", len(En),
              "eq==E", eq == En, "hist", sorted(hist.items()))
    for n in range(2, 7):
        print("|E(%d)|" % n, len(extremal_E(n)), "|F(%d)|" % n, len(extremal_F(n)))

    # stability: max hamming distance to F(n)/n^2 over valid colorings with
    # e_r >= e_b + floor(n/2) - delta n^2
    for n in (4, 5):
        E = edges_of(n)
        F = list(extremal_F(n))
        valid_cols = []
        idx = {e: k for k, e in enumerate(E)}
        tris = list(itertools.combinations(range(n), 3))
        for col in itertools.product(range(3), repeat=len(E)):
            ok = True
            for a, b, c in tris:
                cs = sorted((col[idx[(a, b)]], col[idx[(a, c)]], col[idx[(b, c)]]))
                if cs in ([0, 0, 0], [0, 0, 1]):
                    ok = False
                    break
            if ok:
                valid_cols.append(col)
        dist = {}
        for col in valid_cols:
            d = min(sum(x != y for x, y in zip(col, f)) for f in F)
            excess = col.count(0) - col.count(2)
            dist.setdefault(excess, []).append(d)
        print("stability n=%d" % n, {k: (len(v), max(v)) for k, v in sorted(dist.items())})
        k4 = [0] + [1] * (len(E) - 1)
        print("single red n=%d distance" % n, min(sum(x != y for x, y in zip(k4, f)) for f in F))

    print("== constants ==")
    mpmath.mp.dps = 40
    rho = (3 - mpmath.sqrt(5)) / 2
    H = lambda x: -x * mpmath.log(x, 2) - (1 - x) * mpmath.log(1 - x, 2)
    print("H(rho)", H(rho))
    print("log2 phi", mpmath.log((1 + mpmath.sqrt(5)) / 2, 2))
    print("kkt c=0.2 x*", (5 + mpmath.sqrt(5)) / 10 * mpmath.mpf("0.2"))
    even = mpmath.mpf(1) / 2 + mpmath.nsum(lambda k: mpmath.mpf(0.5) ** (k * k), [1, mpmath.inf])
    odd = mpmath.nsum(lambda k: mpmath.mpf(0.5) ** (k * k + k), [1, mpmath.inf])
    print("series even 3/4", even, "odd tail", odd)

    print("== hypergeometric trend m=n/2, k=l=floor(ln n) ==")
    for n in (25, 50, 100, 200, 400, 800, 1600):
        m = n // 2
        l = int(math.floor(math.log(n)))
        exact = Fraction(math.comb(n - l, m - l), math.comb(n, m))
        lim = Fraction(m, n) ** l
        print(n, l, float(abs(exact / lim - 1)))
    print("(100,50,2,1)", float(Fraction(math.comb(98, 49), math.comb(100, 50))))

    print("== bc asymptotic vs exact ==")


if __name__ == "__main__":
    main()

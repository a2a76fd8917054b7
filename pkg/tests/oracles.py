"""Independent brute-force reference computations used only by the tests."""

from fractions import Fraction
from itertools import combinations
from math import gcd


def independent_sets(n, edges):
    """All non-empty independent sets by exhaustive subset enumeration."""
    adj = {frozenset(e) for e in edges}
    out = []
    for size in range(1, n + 1):
        for s in combinations(range(n), size):
            if all(frozenset(p) not in adj for p in combinations(s, 2)):
                out.append(s)
    return out


def rational_rank(rows):
    """Rank over Q by Gaussian elimination on Fractions."""
    a = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def naive_snf(rows):
    """Invariant factors by textbook elementary operations on a dense copy.

    Repeatedly move the smallest nonzero entry to the corner, reduce its row and
    column by division with remainder, and enforce divisibility of the rest.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    out = []
    for k in range(min(m, n)):
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(k, m) for j in range(k, n) if a[i][j]]
            if not nz:
                return out
            _, i, j = min(nz)
            a[k], a[i] = a[i], a[k]
            for r in a:
                r[k], r[j] = r[j], r[k]
            p = a[k][k]
            for i in range(k + 1, m):
                q = a[i][k] // p
                a[i] = [x - q * y for x, y in zip(a[i], a[k])]
            for j in range(k + 1, n):
                q = a[k][j] // p
                for r in a:
                    r[j] -= q * r[k]
            if any(a[i][k] for i in range(k + 1, m)) or any(a[k][j] for j in range(k + 1, n)):
                continue
            bad = [(i, j) for i in range(k + 1, m) for j in range(k + 1, n) if a[i][j] % p]
            if bad:
                i, _ = bad[0]
                a[k] = [x + y for x, y in zip(a[k], a[i])]
                continue
            out.append(abs(p))
            break
    return out


def determinant(rows):
    n = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return int(det)


def determinantal_factors(rows):
    """Invariant factors d_k = D_k / D_{k-1}, D_k = gcd of all k x k minors."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    out, prev = [], 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                g = gcd(g, determinant([[rows[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def betti_over_q(complex_faces, n_vertices):
    """Reduced Betti numbers from rational ranks of dense boundary matrices."""
    by_dim = {}
    for f in complex_faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(f))
    if not by_dim:
        return {-1: 1}
    top = max(by_dim)
    faces = {d: sorted(by_dim.get(d, [])) for d in range(top + 1)}
    faces[-1] = [()]
    ranks = {}
    for d in range(0, top + 1):
        idx = {f: i for i, f in enumerate(faces[d - 1])}
        mat = [[0] * len(faces[d]) for _ in faces[d - 1]]
        for j, f in enumerate(faces[d]):
            for pos in range(len(f)):
                mat[idx[f[:pos] + f[pos + 1:]]][j] = (-1) ** pos
        ranks[d] = rational_rank(mat) if mat and mat[0] else 0
    ranks[top + 1] = 0
    betti = {-1: 1 - ranks[0]}
    for d in range(top + 1):
        betti[d] = len(faces[d]) - ranks[d] - ranks[d + 1]
    return {d: b for d, b in betti.items() if b}

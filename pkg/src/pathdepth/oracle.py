"""Slow, independent cross-check routes.

Nothing here shares code with the fast engines beyond monomial membership:
faces are found by brute force over all subsets, homology comes from an
integer Smith normal form, and Betti numbers of non-squarefree ideals come
from the Taylor complex.
"""

from __future__ import annotations

from itertools import combinations

from .ring import Monomial, MonomialIdeal, contains


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix (naive Smith normal form)."""
    A = [row[:] for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        # smallest nonzero entry in the remaining block becomes the pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if done:
                # enforce divisibility of the rest of the block by the pivot
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, i, j = min(cand)
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def brute_force_faces(I: MonomialIdeal, W: tuple[int, ...]) -> list[list[tuple[int, ...]]]:
    """Faces of the induced Stanley-Reisner complex on W, by testing every subset."""
    ring = I.ring
    levels = []
    for k in range(len(W) + 1):
        level = [F for F in combinations(W, k) if not contains(I, ring.monomial(F))]
        if not level:
            break
        levels.append(level)
    return levels


def integral_homology(levels: list[list[tuple[int, ...]]]) -> dict[int, tuple[int, list[int]]]:
    """Reduced integral homology {d: (free rank, torsion coefficients)}."""
    if not levels:
        return {}
    diags = [[] for _ in range(len(levels) + 1)]
    for k in range(1, len(levels)):
        index = {F: j for j, F in enumerate(levels[k - 1])}
        mat = [[0] * len(levels[k]) for _ in levels[k - 1]]
        for c, F in enumerate(levels[k]):
            for pos in range(len(F)):
                mat[index[F[:pos] + F[pos + 1:]]][c] = (-1) ** pos
        diags[k] = smith_diagonal(mat)
    out = {}
    for k, faces in enumerate(levels):
        free = len(faces) - len(diags[k]) - len(diags[k + 1])
        torsion = [d for d in diags[k + 1] if d > 1]
        out[k - 1] = (free, torsion)
    return out


def homology_dims_over(levels, characteristic: int) -> dict[int, int]:
    """Field dimensions from integral homology by universal coefficients."""
    H = integral_homology(levels)
    dims = {}
    for d, (free, torsion) in H.items():
        dim = free
        if characteristic:
            dim += sum(1 for x in torsion if x % characteristic == 0)
            if d - 1 in H:
                dim += sum(1 for x in H[d - 1][1] if x % characteristic == 0)
        dims[d] = dim
    return dims


def naive_betti(I: MonomialIdeal, characteristic: int = 2) -> dict[tuple[int, tuple[int, ...]], int]:
    """Hochster's formula over every subset W, homology by Smith normal form."""
    n = I.num_vars
    table = {}
    for k in range(n + 1):
        for W in combinations(range(1, n + 1), k):
            for d, h in homology_dims_over(brute_force_faces(I, W), characteristic).items():
                if h:
                    table[(k - d - 1, W)] = h
    return table


def _rank_mod(rows: list[list[int]], p: int) -> int:
    A = [[x % p for x in r] for r in rows]
    rank = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], -1, p)
        A[rank] = [x * inv % p for x in A[rank]]
        for i in range(len(A)):
            if i != rank and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


def taylor_projective_dimension(I: MonomialIdeal, characteristic: int = 2) -> int:
    """pd(S/I) from the Taylor complex tensored with k, one multidegree at a time.

    In multidegree b the complex is spanned by generator subsets with lcm
    exactly b; a face map survives only when dropping a generator keeps the lcm.
    Over QQ (characteristic 0) the rank is taken modulo a large prime.
    """
    gens = [Monomial(g) for g in I.gens]
    if not gens:
        return 0
    p = characteristic or 1_000_003
    by_lcm: dict[tuple, list[tuple[int, ...]]] = {}
    for k in range(len(gens) + 1):
        for sigma in combinations(range(len(gens)), k):
            m = I.ring.one()
            for s in sigma:
                m = m.lcm(gens[s])
            by_lcm.setdefault(m.exponents, []).append(sigma)
    pd = 0
    for b, sigmas in by_lcm.items():
        by_size: dict[int, list[tuple[int, ...]]] = {}
        for s in sigmas:
            by_size.setdefault(len(s), []).append(s)
        ranks = {}
        for k, upper in by_size.items():
            lower = by_size.get(k - 1)
            if not lower or k == 0:
                ranks[k] = 0
                continue
            index = {s: j for j, s in enumerate(lower)}
            rows = []
            for s in upper:
                row = [0] * len(lower)
                for pos in range(len(s)):
                    face = s[:pos] + s[pos + 1:]
                    if face in index:
                        row[index[face]] = (-1) ** pos
                rows.append(row)
            ranks[k] = _rank_mod(rows, p)
        for k, faces in by_size.items():
            if len(faces) - ranks[k] - ranks.get(k + 1, 0) > 0:
                pd = max(pd, k)
    return pd


def brute_force_socle(I: MonomialIdeal) -> list[Monomial]:
    """Every socle monomial inside the box bounded by the largest exponents."""
    from itertools import product

    bounds = I.max_exponents()
    ring = I.ring
    out = []
    for e in product(*(range(b + 1) for b in bounds)):
        u = Monomial(tuple(e))
        if contains(I, u):
            continue
        if all(contains(I, u * ring.var(j)) for j in range(1, ring.num_vars + 1)):
            out.append(u)
    return sorted(out, key=lambda m: m.exponents)

"""Exact integer and residue-ring linear algebra.

Provides Smith normal form over Z with transform tracking (used for homology
of the bar complex), integer kernel bases, and Howell normal form over Z/n
(used to decide linear systems with zero divisors, e.g. coboundary solving
in root-of-unity exponent lattices).
"""
from __future__ import annotations

from math import gcd


def _xgcd(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _elim_coeffs(pivot: int, entry: int):
    """Unimodular [[p,q],[r,s]] with p*pivot+q*entry = gcd, r*pivot+s*entry = 0.

    Keeps the pivot row/column fixed in the divisible case, which guarantees
    strictly decreasing pivots and hence termination of the reduction.
    """
    if entry % pivot == 0:
        return 1, 0, -(entry // pivot), 1
    g, x, y = _xgcd(pivot, entry)
    return x, y, -(entry // g), pivot // g


def smith_normal_form(mat: list[list[int]]):
    """Return (d, U, V) with U*A*V diagonal d (as a list), U, V unimodular."""
    a = [row[:] for row in mat]
    n = len(a)
    m = len(a[0]) if n else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(m)] for i in range(m)]

    def row_op(i1, i2, p, q, r, s):
        for j in range(m):
            a[i1][j], a[i2][j] = p * a[i1][j] + q * a[i2][j], r * a[i1][j] + s * a[i2][j]
        for j in range(n):
            u[i1][j], u[i2][j] = p * u[i1][j] + q * u[i2][j], r * u[i1][j] + s * u[i2][j]

    def col_op(j1, j2, p, q, r, s):
        for i in range(n):
            a[i][j1], a[i][j2] = p * a[i][j1] + q * a[i][j2], r * a[i][j1] + s * a[i][j2]
        for i in range(m):
            v[i][j1], v[i][j2] = p * v[i][j1] + q * v[i][j2], r * v[i][j1] + s * v[i][j2]

    t = 0
    rank_bound = min(n, m)
    while t < rank_bound:
        # find a pivot with smallest nonzero magnitude
        piv = None
        best = None
        for i in range(t, n):
            for j in range(t, m):
                x = a[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            row_op(t, pi, 0, 1, 1, 0)
        if pj != t:
            col_op(t, pj, 0, 1, 1, 0)
        while True:
            done = True
            for i in range(t + 1, n):
                if a[i][t]:
                    p, q, r, s = _elim_coeffs(a[t][t], a[i][t])
                    row_op(t, i, p, q, r, s)
                    done = False
            for j in range(t + 1, m):
                if a[t][j]:
                    p, q, r, s = _elim_coeffs(a[t][t], a[t][j])
                    col_op(t, j, p, q, r, s)
                    done = False
            if done:
                break
        t += 1
    # Diagonal entries need not satisfy the divisibility chain; every use in
    # this package (kernels, solving, generator orders) only needs a diagonal
    # form with unimodular transforms.
    for k in range(rank_bound):
        if a[k][k] < 0:
            for j in range(m):
                a[k][j] = -a[k][j]
            for j in range(n):
                u[k][j] = -u[k][j]
    d = [a[i][i] if i < m else 0 for i in range(rank_bound)]
    return d, u, v, a


def integer_kernel(mat: list[list[int]]) -> list[list[int]]:
    """Basis (as rows) of the integer kernel {x : A x = 0} for A given by rows."""
    n = len(mat)
    m = len(mat[0]) if n else 0
    if n == 0:
        return [[int(i == j) for j in range(m)] for i in range(m)]
    d, u, v, a = smith_normal_form(mat)
    rank = sum(1 for x in d if x)
    # kernel basis = columns of V beyond the rank
    return [[v[i][j] for i in range(m)] for j in range(rank, m)]


def solve_integer(mat: list[list[int]], rhs: list[int]):
    """One integer solution x of A x = rhs, or None."""
    n = len(mat)
    if n == 0:
        return []
    m = len(mat[0])
    d, u, v, a = smith_normal_form(mat)
    b = [sum(u[i][j] * rhs[j] for j in range(n)) for i in range(n)]
    y = [0] * m
    for i in range(min(n, m)):
        di = a[i][i]
        if di:
            if b[i] % di:
                return None
            y[i] = b[i] // di
        elif b[i]:
            return None
    for i in range(min(n, m), n):
        if b[i]:
            return None
    return [sum(v[i][j] * y[j] for j in range(m)) for i in range(m)]


class LatticeCoords:
    """Repeated exact coordinate solves against a fixed full-rank row lattice.

    Given basis rows K (a Z-basis of some lattice), solves c*K = v for integer
    c, reusing one Smith decomposition across calls.
    """

    def __init__(self, basis_rows: list[list[int]]) -> None:
        self.k = len(basis_rows)
        self.m = len(basis_rows[0]) if self.k else 0
        d, u, v, a = smith_normal_form(basis_rows)
        self.d = d
        self.u = u
        self.v = v

    def coords(self, vec: list[int]):
        """Integer coordinates of vec in the basis, or None if outside."""
        w = [sum(vec[i] * self.v[i][j] for i in range(self.m)) for j in range(self.m)]
        y = [0] * self.k
        for i in range(self.k):
            di = self.d[i] if i < len(self.d) else 0
            if di == 0:
                if w[i]:
                    return None
                continue
            if w[i] % di:
                return None
            y[i] = w[i] // di
        for i in range(self.k, self.m):
            if w[i]:
                return None
        return [sum(y[i] * self.u[i][j] for i in range(self.k)) for j in range(self.k)]


# ---------------------------------------------------------------------------
# Howell normal form over Z/n


def _unit_for(a: int, n: int) -> int:
    """A unit w mod n with w*a = gcd(a, n) mod n."""
    if n == 1:
        return 1
    g = gcd(a, n)
    a //= g
    # a is now coprime to n/g; lift to a unit of Z/n: w = a^{-1} mod n/g, adjusted
    m = n // g
    if m == 1:
        return 1
    w = pow(a % m, -1, m)
    # make w a unit mod n: w + t*m coprime to n for some t
    while gcd(w, n) != 1:
        w += m
    return w % n


def howell_form(mat: list[list[int]], n: int, track: bool = False):
    """Howell normal form of the row span of mat over Z/n.

    Returns (rows, transform) where rows is the Howell basis and, when track
    is set, transform[i] expresses rows[i] as a combination of input rows.
    """
    if n == 1:
        return [], [] if track else None
    rows = [[x % n for x in row] for row in mat]
    m = len(rows[0]) if rows else 0
    trans = [[int(i == j) for j in range(len(rows))] for i in range(len(rows))]

    work = list(range(len(rows)))

    def combine(i1, i2, p, q, r, s):
        rows[i1], rows[i2] = (
            [(p * rows[i1][j] + q * rows[i2][j]) % n for j in range(m)],
            [(r * rows[i1][j] + s * rows[i2][j]) % n for j in range(m)],
        )
        if track:
            k = len(trans[0])
            trans[i1], trans[i2] = (
                [(p * trans[i1][j] + q * trans[i2][j]) % n for j in range(k)],
                [(r * trans[i1][j] + s * trans[i2][j]) % n for j in range(k)],
            )

    basis: list[int] = []  # indices into rows, in echelon order
    free = list(range(len(rows)))
    col = 0
    while col < m and free:
        # gather rows with a nonzero entry in this column
        cand = [i for i in free if rows[i][col] % n]
        if not cand:
            col += 1
            continue
        head = cand[0]
        for other in cand[1:]:
            p, q, r, s = _elim_coeffs(rows[head][col], rows[other][col])
            combine(head, other, p, q, r, s)
        # normalize pivot to the canonical divisor of n
        a = rows[head][col]
        w = _unit_for(a, n)
        rows[head] = [(w * x) % n for x in rows[head]]
        if track:
            trans[head] = [(w * x) % n for x in trans[head]]
        piv = rows[head][col]
        # annihilator row: (n // piv) * head may introduce a new row
        ann = n // gcd(piv, n) if piv else 0
        if piv and ann * piv % n == 0 and ann != 0 and ann != n:
            new_row = [(ann * x) % n for x in rows[head]]
            if any(new_row):
                rows.append(new_row)
                if track:
                    trans.append([(ann * x) % n for x in trans[head]])
                free.append(len(rows) - 1)
        basis.append(head)
        free = [i for i in free if i != head]
        col += 1
    # reduce entries above pivots
    out_rows = []
    out_trans = []
    for idx in basis:
        out_rows.append(rows[idx])
        if track:
            out_trans.append(trans[idx])
    # upward reduction
    for bi in range(len(out_rows) - 1, -1, -1):
        pcol = next(j for j in range(m) if out_rows[bi][j])
        piv = out_rows[bi][pcol]
        for ai in range(bi):
            q = out_rows[ai][pcol] // piv
            if q:
                out_rows[ai] = [(x - q * y) % n for x, y in zip(out_rows[ai], out_rows[bi])]
                if track:
                    out_trans[ai] = [
                        (x - q * y) % n for x, y in zip(out_trans[ai], out_trans[bi])
                    ]
    return out_rows, (out_trans if track else None)


def solve_mod(mat: list[list[int]], rhs: list[int], n: int):
    """One solution x (list of ints mod n) of A x = rhs over Z/n, or None."""
    if n == 1:
        return [0] * (len(mat[0]) if mat else 0)
    neq = len(mat)
    if neq == 0:
        return []
    ncol = len(mat[0])
    # work with the transpose: columns of A span the image
    cols = [[mat[i][j] % n for i in range(neq)] for j in range(ncol)]
    h, t = howell_form(cols, n, track=True)
    b = [x % n for x in rhs]
    coeff = [0] * len(h)
    for bi, row in enumerate(h):
        pcol = next(j for j in range(neq) if row[j])
        piv = row[pcol]
        if b[pcol] % gcd(piv, n):
            return None
        # q * piv = b[pcol] mod n
        g = gcd(piv, n)
        q = (b[pcol] // g) * pow(piv // g, -1, n // g) % (n // g)
        coeff[bi] = q
        b = [(x - q * y) % n for x, y in zip(b, row)]
    if any(b):
        return None
    x = [0] * ncol
    for bi, q in enumerate(coeff):
        if q:
            for j in range(ncol):
                x[j] = (x[j] + q * t[bi][j]) % n
    return x


def kernel_mod(mat: list[list[int]], n: int) -> list[list[int]]:
    """Generators of {x : A x = 0 mod n} (rows), including torsion generators."""
    neq = len(mat)
    ncol = len(mat[0]) if neq else 0
    if n == 1:
        return [[1 if j == i else 0 for j in range(ncol)] for i in range(ncol)]
    # integer kernel of [A | n I] projected to the first ncol coordinates
    big = [[mat[i][j] for j in range(ncol)] + [n * int(i == k) for k in range(neq)]
           for i in range(neq)]
    ker = integer_kernel(big)
    gens = []
    for row in ker:
        x = [v % n for v in row[:ncol]]
        if any(x):
            gens.append(x)
    return gens

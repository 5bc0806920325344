"""Exact integer linear algebra: Smith normal form and linear solving.

Everything here is fraction-free arbitrary-precision integer
arithmetic.  Pivoting always selects a smallest-magnitude nonzero
entry, which keeps coefficient growth tame on the sparse incidence-like
matrices produced by boundary operators.
"""

from __future__ import annotations


def _xgcd(a, b):
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def smith_diagonal(matrix) -> list:
    """Nonzero diagonal of the Smith normal form, divisibility enforced.

    Destroys a working copy only; the input is not modified.  Returns
    the invariant factors d_1 | d_2 | .. | d_r, all positive.
    """
    A = [list(row) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v:
                    a = abs(v)
                    if best is None or a < best:
                        best = a
                        pivot = (i, j)
                        if a == 1:
                            break
            if best == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        A[t], A[pi] = A[pi], A[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                v = A[i][t]
                if v == 0:
                    continue
                if v % p == 0:
                    q = v // p
                    Ai, At = A[i], A[t]
                    for j in range(t, n):
                        Ai[j] -= q * At[j]
                else:
                    g, x, y = _xgcd(p, v)
                    mp, vp = p // g, v // g
                    Ai, At = A[i], A[t]
                    for j in range(t, n):
                        a, b = At[j], Ai[j]
                        At[j] = x * a + y * b
                        Ai[j] = -vp * a + mp * b
                    p = g
                dirty = True
            cleaned = True
            p = A[t][t]
            for j in range(t + 1, n):
                v = A[t][j]
                if v == 0:
                    continue
                if v % p == 0:
                    q = v // p
                    for row in A:
                        row[j] -= q * row[t]
                else:
                    g, x, y = _xgcd(p, v)
                    mp, vp = p // g, v // g
                    for row in A:
                        a, b = row[t], row[j]
                        row[t] = x * a + y * b
                        row[j] = -vp * a + mp * b
                    p = g
                    cleaned = False
                dirty = True
            if not dirty or cleaned:
                # column ops may have re-dirtied the pivot column
                if all(A[i][t] == 0 for i in range(t + 1, m)):
                    break
        diag.append(abs(A[t][t]))
        t += 1
        if t >= m or t >= n:
            break
    # enforce d_i | d_{i+1} by gcd/lcm folding, which preserves the
    # multiset of elementary divisor prime powers
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g, _, _ = _xgcd(a, b)
            diag[i] = g
            diag[j] = a * b // g
    return diag


def rank(matrix) -> int:
    return len(smith_diagonal(matrix))


class ColumnSolver:
    """Column Hermite reduction of A with a tracked transform.

    Solves A y = b over the integers for many right-hand sides: the
    reduction computes H = A V with V unimodular and H in column echelon
    form; back-substitution on H gives z with H z = b, and y = V z.
    """

    def __init__(self, matrix):
        self.m = len(matrix)
        self.n = len(matrix[0]) if self.m else 0
        # store columns for cache-friendly column ops
        self.H = [[matrix[i][j] for i in range(self.m)] for j in range(self.n)]
        self.V = [
            [1 if i == j else 0 for i in range(self.n)] for j in range(self.n)
        ]
        self.pivots = []  # (row, col) in echelon order
        self._reduce()

    def _reduce(self):
        H, V = self.H, self.V
        next_col = 0
        for row in range(self.m):
            if next_col >= self.n:
                break
            cols = [j for j in range(next_col, self.n) if H[j][row]]
            if not cols:
                continue
            # fold all nonzero entries in this row into one gcd column
            lead = min(cols, key=lambda j: abs(H[j][row]))
            for j in cols:
                if j == lead:
                    continue
                a, b = H[lead][row], H[j][row]
                if b % a == 0:
                    q = b // a
                    _col_axpy(H[j], H[lead], -q)
                    _col_axpy(V[j], V[lead], -q)
                else:
                    g, x, y = _xgcd(a, b)
                    ap, bp = a // g, b // g
                    _col_combine(H[lead], H[j], x, y, -bp, ap)
                    _col_combine(V[lead], V[j], x, y, -bp, ap)
            if H[lead][row] < 0:
                _col_negate(H[lead])
                _col_negate(V[lead])
            if lead != next_col:
                H[lead], H[next_col] = H[next_col], H[lead]
                V[lead], V[next_col] = V[next_col], V[lead]
            self.pivots.append((row, next_col))
            next_col += 1

    def solve(self, b):
        """Integer solution vector of A y = b, or None."""
        if len(b) != self.m:
            raise ValueError("right-hand side has wrong length")
        residual = list(b)
        z = [0] * self.n
        for row, col in self.pivots:
            v = residual[row]
            if v == 0:
                continue
            p = self.H[col][row]
            if v % p != 0:
                return None
            q = v // p
            z[col] = q
            Hc = self.H[col]
            for i in range(row, self.m):
                residual[i] -= q * Hc[i]
        if any(residual):
            return None
        y = [0] * self.n
        for col, zc in enumerate(z):
            if zc:
                Vc = self.V[col]
                for i in range(self.n):
                    y[i] += zc * Vc[i]
        return y


def _col_axpy(target, source, factor):
    for i in range(len(target)):
        target[i] += factor * source[i]


def _col_combine(c1, c2, x, y, u, v):
    for i in range(len(c1)):
        a, b = c1[i], c2[i]
        c1[i] = x * a + y * b
        c2[i] = u * a + v * b


def _col_negate(col):
    for i in range(len(col)):
        col[i] = -col[i]


def solve_integer(matrix, b):
    """One-shot integer solve; prefer ColumnSolver for repeated b."""
    return ColumnSolver(matrix).solve(b)

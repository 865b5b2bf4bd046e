"""Exact integer and rational dense linear algebra.

Everything here works on plain lists of lists.  Integer matrices use
Bareiss fraction-free elimination for determinants; rational work uses
``fractions.Fraction`` throughout, so results are exact and canonical
(positive denominator, reduced) by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k = len(A), len(A[0]) if A else 0
    m = len(B[0]) if B else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                row = out[i]
                for j in range(m):
                    row[j] += a * Bt[j]
    return out


def transpose(A):
    return [list(col) for col in zip(*A)]


@dataclass
class GaussResult:
    """Outcome of exact Gaussian elimination on A x = b."""

    status: str  # "unique" | "no_solution" | "non_unique"
    solution: list | None
    rank: int


def gauss_solve(A, b):
    """Solve A x = b exactly over the rationals.

    A is a (possibly rectangular) matrix, b a column given as a list.
    Returns a GaussResult classifying solvability; the solution, when
    unique, satisfies A x = b exactly.
    """
    n = len(A)
    m = len(A[0]) if n else 0
    M = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(A)]
    pivots = []  # (row, col)
    r = 0
    for c in range(m):
        pr = next((i for i in range(r, n) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        pv = M[r][c]
        M[r] = [x / pv for x in M[r]]
        for i in range(n):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append((r, c))
        r += 1
        if r == n:
            break
    rank = len(pivots)
    for i in range(rank, n):
        if M[i][m] != 0:
            return GaussResult("no_solution", None, rank)
    if rank < m:
        return GaussResult("non_unique", None, rank)
    x = [Fraction(0)] * m
    for i, c in pivots:
        x[c] = M[i][m]
    return GaussResult("unique", x, rank)


def rank(A):
    n = len(A)
    if n == 0:
        return 0
    return gauss_solve(A, [0] * n).rank


def determinant(A):
    """Exact determinant of a square matrix (integer or rational entries)."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in A for x in row):
        return _bareiss(A)
    return _fraction_det(A)


def _bareiss(A):
    """Bareiss fraction-free determinant; all divisions are exact."""
    M = [row[:] for row in A]
    n = len(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            pr = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if pr is None:
                return 0
            M[k], M[pr] = M[pr], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _fraction_det(A):
    M = [[Fraction(x) for x in row] for row in A]
    n = len(M)
    det = Fraction(1)
    for k in range(n):
        pr = next((i for i in range(k, n) if M[i][k] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != k:
            M[k], M[pr] = M[pr], M[k]
            det = -det
        det *= M[k][k]
        inv = 1 / M[k][k]
        for i in range(k + 1, n):
            if M[i][k] != 0:
                f = M[i][k] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[k])]
    return det


@dataclass
class SmithForm:
    """U @ M @ V = D with U, V unimodular and D = diag(d_1 | d_2 | ...)."""

    diagonal: list  # length min(rows, cols), d_k >= 0, d_k | d_{k+1}
    U: list
    V: list

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self):
        return [d for d in self.diagonal if d > 1]


def smith_normal_form(M):
    """Smith normal form of an integer matrix, with transforms.

    The returned form is re-verified on every call: U M V is recomputed
    and compared against the diagonal, the divisibility chain is
    checked, and |det U| = |det V| = 1 is confirmed.
    """
    n = len(M)
    m = len(M[0]) if n else 0
    A = [[int(x) for x in row] for row in M]
    U = identity(n)
    V = identity(m)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(n, m):
        # move the smallest nonzero entry of the trailing block to (t, t)
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            swap_rows(t, best[0])
        if best[1] != t:
            swap_cols(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, n):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t] != 0:
                        swap_rows(t, i)
                    dirty = True
            for j in range(t + 1, m):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j] != 0:
                        swap_cols(t, j)
                    dirty = True
            if dirty:
                continue
            # force the divisibility chain: pull in any non-divisible entry
            culprit = None
            for i in range(t + 1, n):
                for j in range(t + 1, m):
                    if A[i][j] % A[t][t] != 0:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(t, culprit, 1)
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    diagonal = [A[k][k] for k in range(min(n, m))]
    _verify_smith(M, diagonal, U, V)
    return SmithForm(diagonal, U, V)


def _verify_smith(M, diagonal, U, V):
    n = len(M)
    m = len(M[0]) if n else 0
    D = mat_mul(mat_mul(U, M), V)
    for i in range(n):
        for j in range(m):
            want = diagonal[i] if i == j and i < len(diagonal) else 0
            if D[i][j] != want:
                raise AssertionError("smith normal form verification failed: U M V != D")
    for a, b in zip(diagonal, diagonal[1:]):
        if a < 0 or b < 0 or (a == 0 and b != 0) or (a != 0 and b % a != 0):
            raise AssertionError("smith normal form divisibility chain broken")
    if abs(determinant(U)) != 1 or abs(determinant(V)) != 1:
        raise AssertionError("smith normal form transforms are not unimodular")


def invert_unimodular(U):
    """Inverse of a unimodular integer matrix, as an integer matrix."""
    n = len(U)
    out = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        res = gauss_solve(U, e)
        if res.status != "unique":
            raise ValueError("matrix is singular")
        col = []
        for x in res.solution:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            col.append(int(x))
        out.append(col)
    return transpose(out)

"""Smith normal form over the integers, with unimodular transforms.

Plain Python ints, so there is no overflow; all four transform matrices
(U, V and their inverses) are tracked through the elementary operations
and the identity U * M * V == D is asserted before returning.
"""

from dataclasses import dataclass

IntMatrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A, B) -> list[list[int]]:
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    n, m, p = len(A), len(B), len(B[0])
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for k in range(m):
            a = Ai[k]
            if a:
                Bk = B[k]
                row = out[i]
                for j in range(p):
                    row[j] += a * Bk[j]
    return out


@dataclass(frozen=True)
class SmithNormalForm:
    """U * M * V == D with U, V unimodular and D diagonal with
    d1 | d2 | ... (nonnegative).  Iterating yields (U, D, V)."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    def __iter__(self):
        return iter((self.U, self.D, self.V))

    def diagonal(self) -> tuple[int, ...]:
        n = min(len(self.D), len(self.D[0]) if self.D else 0)
        return tuple(self.D[i][i] for i in range(n))

    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal() if d != 0)


def smith_normal_form(mat) -> SmithNormalForm:
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    D = [[int(x) for x in row] for row in mat]
    for row in D:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    U, Ui = identity(rows), identity(rows)
    V, Vi = identity(cols), identity(cols)

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for r in range(rows):
            Ui[r][i], Ui[r][j] = Ui[r][j], Ui[r][i]

    def row_add(i, j, q):
        # row_i += q * row_j
        for c in range(cols):
            D[i][c] += q * D[j][c]
        for c in range(rows):
            U[i][c] += q * U[j][c]
        for r in range(rows):
            Ui[r][j] -= q * Ui[r][i]

    def row_neg(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]
        for r in range(rows):
            Ui[r][i] = -Ui[r][i]

    def col_swap(i, j):
        for r in range(rows):
            D[r][i], D[r][j] = D[r][j], D[r][i]
        for r in range(cols):
            V[r][i], V[r][j] = V[r][j], V[r][i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def col_add(j, i, q):
        # col_j += q * col_i
        for r in range(rows):
            D[r][j] += q * D[r][i]
        for r in range(cols):
            V[r][j] += q * V[r][i]
        for c in range(cols):
            Vi[i][c] -= q * Vi[j][c]

    def col_neg(j):
        for r in range(rows):
            D[r][j] = -D[r][j]
        for r in range(cols):
            V[r][j] = -V[r][j]
        Vi[j] = [-x for x in Vi[j]]

    def min_entry(k):
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                if D[i][j] != 0:
                    key = (abs(D[i][j]), i, j)
                    if best is None or key < best:
                        best = key
        return best

    k = 0
    while k < min(rows, cols):
        found = min_entry(k)
        if found is None:
            break
        while True:
            _, i0, j0 = min_entry(k)
            if i0 != k:
                row_swap(k, i0)
            if j0 != k:
                col_swap(k, j0)
            if D[k][k] < 0:
                row_neg(k)
            p = D[k][k]
            dirty = False
            for i in range(k + 1, rows):
                q = D[i][k] // p
                if q:
                    row_add(i, k, -q)
                if D[i][k]:
                    dirty = True
            for j in range(k + 1, cols):
                q = D[k][j] // p
                if q:
                    col_add(j, k, -q)
                if D[k][j]:
                    dirty = True
            if dirty:
                continue
            # pivot clears its row and column; enforce divisibility
            bad = next(((i, j)
                        for i in range(k + 1, rows)
                        for j in range(k + 1, cols)
                        if D[i][j] % p), None)
            if bad is None:
                break
            row_add(k, bad[0], 1)
        k += 1

    result = SmithNormalForm(
        tuple(tuple(r) for r in U), tuple(tuple(r) for r in D),
        tuple(tuple(r) for r in V), tuple(tuple(r) for r in Ui),
        tuple(tuple(r) for r in Vi))
    _check(mat, result)
    return result


def _check(mat, res: SmithNormalForm):
    M = [[int(x) for x in row] for row in mat]
    got = matmul(matmul([list(r) for r in res.U], M), [list(r) for r in res.V])
    assert tuple(tuple(r) for r in got) == res.D, "U*M*V != D"
    n = min(len(res.D), len(res.D[0]) if res.D else 0)
    for i in range(n - 1):
        a, b = res.D[i][i], res.D[i + 1][i + 1]
        assert b == 0 or (a != 0 and b % a == 0), "divisibility chain broken"

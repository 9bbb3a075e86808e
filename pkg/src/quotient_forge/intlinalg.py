"""Exact linear algebra over the integers: Hermite and Smith normal forms.

Matrices are lists of lists of Python ints, so there is no overflow to
worry about.  The transforming matrices are always returned so callers can
check U @ A = H or U @ A @ V = D exactly.
"""

from __future__ import annotations

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    assert not b or len(a[0]) == len(b)
    cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in range(len(a))]
    for i, row in enumerate(a):
        for k, aik in enumerate(row):
            if aik:
                brow = b[k]
                orow = out[i]
                for j in range(cols):
                    orow[j] += aik * brow[j]
    return out


def mat_vec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def is_unimodular(a: Matrix) -> bool:
    return abs(det(a)) == 1


def det(a: Matrix) -> int:
    """Determinant by fraction-free Gaussian elimination (Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def hermite_normal_form(a: Matrix) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular, U @ A = H, H in row echelon form with
    positive pivots and entries above each pivot reduced to [0, pivot).
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    h = [row[:] for row in a]
    u = identity(rows)
    pivot_row = 0
    for col in range(cols):
        # find a row at or below pivot_row with a nonzero entry in col
        nz = [i for i in range(pivot_row, rows) if h[i][col]]
        if not nz:
            continue
        # euclidean elimination within the column
        while len(nz) > 1:
            nz.sort(key=lambda i: abs(h[i][col]))
            i0 = nz[0]
            for i in nz[1:]:
                q = h[i][col] // h[i0][col]
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[i0])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[i0])]
            nz = [i for i in nz if h[i][col]]
        i0 = nz[0]
        if i0 != pivot_row:
            h[i0], h[pivot_row] = h[pivot_row], h[i0]
            u[i0], u[pivot_row] = u[pivot_row], u[i0]
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        p = h[pivot_row][col]
        for i in range(pivot_row):
            q = h[i][col] // p
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[pivot_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]
        pivot_row += 1
    return h, u


def rank(a: Matrix) -> int:
    h, _ = hermite_normal_form(a)
    return sum(1 for row in h if any(row))


def kernel_basis(a: Matrix) -> list[list[int]]:
    """Basis of the integer kernel {x : A x = 0}, as a list of vectors.

    Reads the kernel off the transforming matrix of the HNF of the
    transpose: rows of U that map to zero rows of H are a lattice basis.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return identity(cols)
    h, u = hermite_normal_form(transpose(a))
    return [u[i] for i in range(cols) if not any(h[i])]


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form: returns (U, D, V) with U @ A @ V = D.

    U and V are unimodular and D is diagonal with d_1 | d_2 | ... >= 0.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d = [row[:] for row in a]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_op(i, j, q):
        # row_i -= q * row_j
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):
        # col_i -= q * col_j
        for row in d:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def clear_pivot(k):
        # reduce row k and column k to a single entry at (k, k); each pass
        # strictly decreases |d[k][k]|, so this terminates
        while True:
            again = False
            for i in range(k + 1, rows):
                if d[i][k]:
                    q = d[i][k] // d[k][k]
                    row_op(i, k, q)
                    if d[i][k]:
                        swap_rows(k, i)
                        again = True
            for j in range(k + 1, cols):
                if d[k][j]:
                    q = d[k][j] // d[k][k]
                    col_op(j, k, q)
                    if d[k][j]:
                        swap_cols(k, j)
                        again = True
            if not again:
                return

    n = min(rows, cols)
    for k in range(n):
        pivot = None
        for i in range(k, rows):
            for j in range(k, cols):
                if d[i][j] and (pivot is None or abs(d[i][j]) < abs(pivot[2])):
                    pivot = (i, j, d[i][j])
        if pivot is None:
            break
        swap_rows(k, pivot[0])
        swap_cols(k, pivot[1])
        while True:
            clear_pivot(k)
            # fold in any row whose entries the pivot fails to divide; the
            # next clearing pass shrinks the pivot to a proper divisor
            offender = next(
                (
                    i
                    for i in range(k + 1, rows)
                    for j in range(k + 1, cols)
                    if d[i][j] % d[k][k]
                ),
                None,
            )
            if offender is None:
                break
            row_op(k, offender, -1)
        if d[k][k] < 0:
            d[k] = [-x for x in d[k]]
            u[k] = [-x for x in u[k]]
    return u, d, v


def solve_integer(a: Matrix, b: list[int]) -> list[int] | None:
    """One integer solution x of A x = b, or None if none exists."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows != len(b):
        raise ValueError("dimension mismatch")
    # Solve via HNF of the transpose: x^T A^T = b^T.
    h, u = hermite_normal_form(transpose(a))  # u @ a^T = h, h is cols x rows
    y = [0] * cols
    residual = b[:]
    for i in range(cols):
        row = h[i]
        j = next((j for j, x in enumerate(row) if x), None)
        if j is None:
            continue
        q, rem = divmod(residual[j], row[j])
        if rem:
            return None
        if q:
            y[i] = q
            residual = [x - q * z for x, z in zip(residual, row)]
    if any(residual):
        return None
    # x^T = y^T @ u, i.e. x = u^T y
    x = [0] * cols
    for i in range(cols):
        if y[i]:
            x = [xi + y[i] * ui for xi, ui in zip(x, u[i])]
    return x


def in_column_span(a: Matrix, b: list[int]) -> bool:
    """Whether b lies in the integer column span of A."""
    return solve_integer(a, b) is not None

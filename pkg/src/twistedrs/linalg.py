"""Dense linear algebra over a FiniteField: matrices as lists of row lists."""

from __future__ import annotations

from .galois import FiniteField


def copy_matrix(mat) -> list[list[int]]:
    return [list(row) for row in mat]


def rref(field: FiniteField, mat):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = copy_matrix(mat)
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        if inv != 1:
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [
                    field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(field: FiniteField, mat) -> int:
    return len(rref(field, mat)[1])


def det(field: FiniteField, mat) -> int:
    """Determinant by Gaussian elimination."""
    rows = copy_matrix(mat)
    n = len(rows)
    result = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = field.neg(result)
        result = field.mul(result, rows[c][c])
        inv = field.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                f = field.mul(rows[i][c], inv)
                rows[i] = [
                    field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[c])
                ]
    return result


def invert(field: FiniteField, mat) -> list[list[int]]:
    n = len(mat)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    red, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def solve(field: FiniteField, mat, rhs) -> list[int] | None:
    """One solution of mat * x = rhs, or None when inconsistent."""
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    red, pivots = rref(field, aug)
    ncols = len(mat[0])
    if ncols in pivots:
        return None
    x = [0] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][-1]
    return x


def kernel_basis(field: FiniteField, mat) -> list[list[int]]:
    """Basis of the right kernel of mat."""
    red, pivots = rref(field, mat)
    ncols = len(mat[0]) if mat else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = field.neg(red[r][fc])
        basis.append(vec)
    return basis


def mat_mul(field: FiniteField, a, b) -> list[list[int]]:
    out = []
    ncols = len(b[0])
    for row in a:
        new = [0] * ncols
        for i, x in enumerate(row):
            if x:
                bi = b[i]
                for j in range(ncols):
                    if bi[j]:
                        new[j] = field.add(new[j], field.mul(x, bi[j]))
        out.append(new)
    return out


def mat_vec(field: FiniteField, a, v) -> list[int]:
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = field.add(acc, field.mul(x, y))
        out.append(acc)
    return out

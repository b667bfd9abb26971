"""Dense linear algebra over GF(q^2): elimination, inverses, null spaces.

Matrices are lists of row lists of field elements.  Everything is exact;
there is no pivoting subtlety because the field has no rounding.
"""


class SingularMatrixError(ValueError):
    pass


class InconsistentSystemError(ValueError):
    pass


class UnderdeterminedSystemError(ValueError):
    pass


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_vec(ctx, a, v):
    return [_dot(ctx, row, v) for row in a]


def mat_mul(ctx, a, b):
    cols = list(zip(*b))
    return [[_dot(ctx, row, col) for col in cols] for row in a]


def _dot(ctx, u, v):
    acc = 0
    for x, y in zip(u, v):
        acc ^= ctx.mul(x, y)
    return acc


def rref(ctx, a):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in a]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = ctx.inv(rows[r][c])
        rows[r] = [ctx.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x ^ ctx.mul(f, y) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(ctx, a):
    return len(rref(ctx, a)[1])


def mat_inv(ctx, a):
    n = len(a)
    aug = [list(row) + ident_row for row, ident_row in zip(a, identity(n))]
    red, pivots = rref(ctx, aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular over GF(q^2)")
    return [row[n:] for row in red]


def null_space(ctx, a, ncols=None):
    """Basis of the right null space, one vector per free column."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return identity(ncols)
    red, pivots = rref(ctx, a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = red[r][fc]  # -coeff == coeff in char 2
        basis.append(v)
    return basis


def solve_unique(ctx, a, b):
    """Solve a x = b requiring a consistent system with a unique solution."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    red, pivots = rref(ctx, aug)
    if ncols in pivots:
        raise InconsistentSystemError("no solution: augmented column is a pivot")
    if len(pivots) < ncols:
        raise UnderdeterminedSystemError("solution is not unique")
    x = [0] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x

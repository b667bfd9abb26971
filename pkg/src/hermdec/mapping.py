"""Column mapping between Hermitian codewords and auxiliary codewords.

Every column i < q^2 - 1 (alpha = epsilon^i) is multiplied by the q x q
matrix M; the last column (alpha = 0) uses M'.  Both are invertible, so
the transform is an exact bijection on q x q^2 matrices.
"""

from dataclasses import dataclass

from . import linalg
from .curve import beta_of_row


@dataclass(frozen=True)
class MappingSet:
    q: int
    M: tuple
    Mprime: tuple
    Minv: tuple
    Mprimeinv: tuple

    def matrix_for_col(self, i):
        return self.Mprime if i == self.q * self.q - 1 else self.M

    def inverse_for_col(self, i):
        return self.Mprimeinv if i == self.q * self.q - 1 else self.Minv


def build_M(ctx, y0):
    """Row for each b in {0, 1, gamma, ..., gamma^(q-2)}:
    [1 - (y0+b)^(q-1), (y0+b)^(q-2), ..., (y0+b)^0]."""
    q = ctx.q
    rows = []
    for j in range(q):
        b = beta_of_row(ctx, j)
        base = y0 ^ b
        row = [ctx.sub(1, ctx.power(base, q - 1))]
        row += [ctx.power(base, q - 1 - jc) for jc in range(1, q)]
        rows.append(row)
    return rows


def build_Mprime(ctx):
    """First row [1, 0, ..., 0, -1]; row for b in {1, gamma, ...}:
    [0, -b^(q-2), ..., -b^1, -1].  Minus signs collapse in characteristic 2."""
    q = ctx.q
    rows = [[1] + [0] * (q - 2) + [ctx.neg(1)]]
    for j in range(1, q):
        b = beta_of_row(ctx, j)
        row = [0]
        row += [ctx.neg(ctx.power(b, q - 1 - jc)) for jc in range(1, q - 1)]
        row += [ctx.neg(1)]
        rows.append(row)
    return rows


def build_mapping(ctx, y0):
    m = build_M(ctx, y0)
    mp = build_Mprime(ctx)
    try:
        minv = linalg.mat_inv(ctx, m)
    except linalg.SingularMatrixError as exc:
        raise ValueError("mapping matrix M is singular (bad y0 or field build)") from exc
    try:
        mpinv = linalg.mat_inv(ctx, mp)
    except linalg.SingularMatrixError as exc:
        raise ValueError("mapping matrix M' is singular") from exc
    freeze = lambda a: tuple(tuple(r) for r in a)
    return MappingSet(q=ctx.q, M=freeze(m), Mprime=freeze(mp),
                      Minv=freeze(minv), Mprimeinv=freeze(mpinv))


def _apply_columns(ctx, matrices, word):
    q = len(word)
    out = [[0] * len(word[0]) for _ in range(q)]
    for i in range(len(word[0])):
        mat = matrices(i)
        col = [word[j][i] for j in range(q)]
        for r in range(q):
            acc = 0
            for c in range(q):
                acc ^= ctx.mul(mat[r][c], col[c])
            out[r][i] = acc
    return out


def from_auxiliary(ctx, ms, aux):
    """Hermitian-domain word: column j of output = M_j x column j of input."""
    return _apply_columns(ctx, ms.matrix_for_col, aux)


def to_auxiliary(ctx, ms, word):
    """Exact inverse of from_auxiliary, column-wise by Minv / M'inv."""
    return _apply_columns(ctx, ms.inverse_for_col, word)


def is_column_error(e):
    """True iff every column that is touched at all is nonzero in all q rows."""
    q = len(e)
    for i in range(len(e[0])):
        col = [e[j][i] for j in range(q)]
        if any(col) and not all(col):
            return False
    return True


def dump_mapping(ctx, ms):
    """Matrix text block for cross-implementation diffing."""
    blocks = []
    for name, mat in (("M", ms.M), ("Mprime", ms.Mprime),
                      ("Minv", ms.Minv), ("Mprimeinv", ms.Mprimeinv)):
        rows = "\n".join(" ".join(ctx.fmt(x) for x in row) for row in mat)
        blocks.append(f"[{name}]\n{rows}")
    return "\n".join(blocks) + "\n"

"""The Hermitian curve x^(q+1) = y^q + y over GF(q^2).

Affine rational points are labeled by a column coordinate alpha in GF(q^2)
and a row coordinate beta in GF(q); the y-coordinate is derived as
y = alpha^(q+1) (y0 + beta) + delta(alpha) beta, where delta(alpha) is 1
exactly when alpha = 0.  The pole-order basis of L(mPinf) is the monomial
set {x^a y^b : a q + b (q+1) <= m, 0 <= b < q}.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class CurvePoint:
    alpha: int
    beta: int
    y: int
    row: int  # beta index, 0 <-> beta = 0, j >= 1 <-> gamma^(j-1)
    col: int  # alpha index, i < q^2 - 1 <-> epsilon^i, q^2 - 1 <-> alpha = 0


def genus(q):
    return q * (q - 1) // 2


def solve_y0(ctx):
    """Smallest-log solution of y0 + y0^q = 1 (q solutions exist; any works)."""
    for i in range(ctx.order - 1):
        z = ctx.exp[i]
        if z ^ ctx.power(z, ctx.q) == 1:
            return z
    raise AssertionError("y0 + y0^q = 1 has a solution in every GF(q^2)")


def beta_of_row(ctx, j):
    if not 0 <= j < ctx.q:
        raise ValueError(f"row index {j} out of range for q={ctx.q}")
    return 0 if j == 0 else ctx.power(ctx.gamma, j - 1)


def row_of_beta(ctx, beta):
    if beta == 0:
        return 0
    return ctx.log[beta] // (ctx.q + 1) + 1


def alpha_of_col(ctx, i):
    if not 0 <= i < ctx.order:
        raise ValueError(f"column index {i} out of range for q^2={ctx.order}")
    return 0 if i == ctx.order - 1 else ctx.exp[i]


def col_of_alpha(ctx, alpha):
    return ctx.order - 1 if alpha == 0 else ctx.log[alpha]


def point_from_labels(ctx, y0, alpha, beta):
    """The point P_(alpha,beta); asserts it satisfies the curve equation."""
    if not ctx.in_subfield(beta):
        raise ValueError("beta must lie in the subfield GF(q)")
    if alpha == 0:
        y = beta
    else:
        y = ctx.mul(ctx.power(alpha, ctx.q + 1), y0 ^ beta)
    lhs = ctx.power(alpha, ctx.q + 1)
    rhs = ctx.power(y, ctx.q) ^ y
    if lhs != rhs:
        raise AssertionError("derived point is off the curve (bad y0 or field build)")
    return CurvePoint(alpha=alpha, beta=beta, y=y,
                      row=row_of_beta(ctx, beta), col=col_of_alpha(ctx, alpha))


def enumerate_points(ctx, y0):
    """All q^3 affine points, row-major: index = row * q^2 + col."""
    pts = []
    for j in range(ctx.q):
        beta = beta_of_row(ctx, j)
        for i in range(ctx.order):
            pts.append(point_from_labels(ctx, y0, alpha_of_col(ctx, i), beta))
    return pts


def dump_points(ctx, points):
    """Text table, one point per line: 'i j alpha_log beta_log y_log'."""
    lines = []
    for p in points:
        lines.append(f"{p.col} {p.row} {ctx.fmt(p.alpha)} {ctx.fmt(p.beta)} {ctx.fmt(p.y)}")
    return "\n".join(lines) + "\n"


def pole_order(mon, q):
    a, b = mon
    return a * q + b * (q + 1)


def basis_monomials(q, m):
    """Monomials x^a y^b spanning L(mPinf), ordered by pole order."""
    if m < 0:
        return []
    mons = []
    for b in range(min(q - 1, m // (q + 1)) + 1):
        rest = m - b * (q + 1)
        for a in range(rest // q + 1):
            mons.append((a, b))
    mons.sort(key=lambda mon: (pole_order(mon, q), mon[1]))
    return mons

"""One-point Hermitian codes C(m): words orthogonal to every evaluation of
L(mPinf) at the q^3 affine points.

Codewords, received words and error patterns are all q x q^2 matrices of
field elements, rows indexed by beta and columns by alpha in the canonical
point ordering.  The text format is q lines of q^2 tokens (log index, "-"
for zero).
"""

from dataclasses import dataclass

from . import curve, linalg
from .field import build_field


@dataclass(frozen=True)
class CodeParams:
    q: int
    m: int
    n: int
    k: int
    g: int
    dstar: int
    t_design: int


class CodeBuildError(ValueError):
    pass


def _validate_range(q, m):
    g = curve.genus(q)
    n = q ** 3
    if not (2 * g - 2 < m < n):
        raise CodeBuildError(
            f"m={m} outside the valid range 2g-2 < m < n ({2 * g - 2} < m < {n})")


def code_params(q, m):
    """Code parameters n, k, g, designed distance and decoding radius."""
    ctx = build_field(_exponent_of(q))
    _validate_range(q, m)
    g = curve.genus(q)
    n = q ** 3
    # The evaluation map of L(mPinf) is injective for m < n (a nonzero
    # function has at most m < n zeros), so rank(H) = dim L(mPinf).
    k = n - len(curve.basis_monomials(q, m))
    dstar = m - 2 * g + 2
    return CodeParams(q=q, m=m, n=n, k=k, g=g, dstar=dstar,
                      t_design=(dstar - 1) // 2)


def _exponent_of(q):
    if q < 2 or q & (q - 1):
        raise CodeBuildError(f"q={q} is not a power of 2 (odd characteristic rejected)")
    return q.bit_length() - 1


def build_parity_check(ctx, y0, m):
    """Rows = basis monomials of L(mPinf), columns = q^3 points."""
    if not 0 <= m < ctx.q ** 3:
        raise CodeBuildError(f"m={m} outside 0 <= m < q^3")
    points = curve.enumerate_points(ctx, y0)
    rows = []
    for a, b in curve.basis_monomials(ctx.q, m):
        rows.append([ctx.mul(ctx.power(p.alpha, a), ctx.power(p.y, b)) for p in points])
    return rows


def build_generator(ctx, h):
    """k x n generator with G H^T = 0, rows echelonized for determinism."""
    n = len(h[0])
    if linalg.rank(ctx, h) != len(h):
        raise CodeBuildError("parity-check matrix is rank deficient")
    g = linalg.null_space(ctx, h, ncols=n)
    g, pivots = linalg.rref(ctx, g)
    return g[:len(pivots)]


class Code:
    """A built Hermitian code: field, points, H, G and parameters."""

    def __init__(self, q, m):
        self.ctx = build_field(_exponent_of(q))
        _validate_range(q, m)
        self.q = q
        self.m = m
        self.y0 = curve.solve_y0(self.ctx)
        self.points = curve.enumerate_points(self.ctx, self.y0)
        self.monomials = curve.basis_monomials(q, m)
        self.H = build_parity_check(self.ctx, self.y0, m)
        self.params = code_params(q, m)
        self._G = None

    @property
    def G(self):
        if self._G is None:
            self._G = build_generator(self.ctx, self.H)
            assert len(self._G) == self.params.k
        return self._G

    def point_at(self, row, col):
        return self.points[row * self.q ** 2 + col]

    def encode(self, msg):
        if len(msg) != self.params.k:
            raise ValueError(f"message length {len(msg)} != k = {self.params.k}")
        flat = [0] * self.params.n
        for coeff, grow in zip(msg, self.G):
            if coeff == 0:
                continue
            for i, gv in enumerate(grow):
                flat[i] ^= self.ctx.mul(coeff, gv)
        return unflatten(self.q, flat)

    def syndrome_vector(self, word):
        flat = flatten(word)
        return [linalg._dot(self.ctx, hrow, flat) for hrow in self.H]

    def is_codeword(self, word):
        return all(s == 0 for s in self.syndrome_vector(word))


# --- codeword-matrix helpers ------------------------------------------------


def zero_word(q):
    return [[0] * (q * q) for _ in range(q)]


def word_add(a, b):
    return [[x ^ y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def word_weight(a):
    return sum(1 for row in a for x in row if x)


def flatten(word):
    return [x for row in word for x in row]


def unflatten(q, flat):
    return [list(flat[j * q * q:(j + 1) * q * q]) for j in range(q)]


def format_word(ctx, word):
    return "\n".join(" ".join(ctx.fmt(x) for x in row) for row in word) + "\n"


def parse_word(ctx, text):
    word = [[ctx.parse(tok) for tok in line.split()] for line in text.strip().splitlines()]
    q = ctx.q
    if len(word) != q or any(len(row) != q * q for row in word):
        raise ValueError(f"expected a {q} x {q * q} symbol matrix")
    return word

"""Semi-erasure decoding pipeline for Hermitian codes.

Stages: syndromes -> bivariate locator (Peterson-style kernel solve) ->
univariate specialization per row -> q^2-point Chien search -> linear
error-value solve -> Forney-identity consistency check -> correction.

The alpha = 0 column is not covered by the polynomial substitution
y = x^(q+1)(y0 + beta) (the Kronecker delta is not polynomial), so the
Chien stage evaluates sigma(0, beta) directly; the combined test count per
row is exactly q^2.
"""

import itertools
from dataclasses import dataclass, field as dc_field

from . import curve, linalg
from .code import word_add, zero_word
from .field import (OpCounter, poly_deriv, poly_divmod, poly_eval,
                    poly_from_roots, poly_mul, poly_trim)
from .mapping import from_auxiliary, to_auxiliary


# --- syndromes --------------------------------------------------------------


@dataclass
class SyndromeTable:
    """s[a,b] = sum over cells of y_(beta,alpha) alpha^a y(P)^b."""

    values: dict  # (a, b) -> field element

    def is_zero(self):
        return all(v == 0 for v in self.values.values())


def compute_syndromes(code, word):
    ctx = code.ctx
    vals = {}
    for a, b in code.monomials:
        acc = 0
        for p in code.points:
            c = word[p.row][p.col]
            if c:
                acc ^= ctx.mul(c, ctx.mul(ctx.power(p.alpha, a), ctx.power(p.y, b)))
        vals[(a, b)] = acc
    return SyndromeTable(vals)


# --- bivariate locators -----------------------------------------------------


@dataclass(frozen=True)
class BivariateLocator:
    coeffs: tuple  # ((a, b), coeff) pairs, pole order ascending
    pole: int

    def coeff_dict(self):
        return dict(self.coeffs)


def _make_locator(ctx, q, mons, vec):
    items = [(mon, c) for mon, c in zip(mons, vec) if c]
    if not items:
        raise ValueError("zero vector is not a locator")
    lead = items[-1][1]  # highest pole order last; normalize it to 1
    inv = ctx.inv(lead)
    items = tuple((mon, ctx.mul(inv, c)) for mon, c in items)
    return BivariateLocator(coeffs=items, pole=curve.pole_order(items[-1][0], q))


SIGMA_ONE = BivariateLocator(coeffs=(((0, 0), 1),), pole=0)


def sigma_eval(ctx, sigma, alpha, y, counter=None):
    if counter is not None:
        counter.evals += 1
    acc = 0
    for (a, b), c in sigma.coeffs:
        if counter is not None:
            counter.mults += 2
        acc ^= ctx.mul(c, ctx.mul(ctx.power(alpha, a), ctx.power(y, b)))
    return acc


def sigma_eval_at_point(ctx, sigma, point, counter=None):
    return sigma_eval(ctx, sigma, point.alpha, point.y, counter)


def _reduce_monomial_product(q, m1, m2):
    """Product of basis monomials rewritten on the b < q basis via
    y^q = x^(q+1) + y; coefficients stay in GF(2) and cancel in pairs."""
    terms = {(m1[0] + m2[0], m1[1] + m2[1]): 1}
    while True:
        over = next((mon for mon in terms if mon[1] >= q), None)
        if over is None:
            return terms
        a, b = over
        del terms[over]
        for nm in ((a + q + 1, b - q), (a, b - q + 1)):
            terms[nm] = terms.get(nm, 0) ^ 1
            if terms[nm] == 0:
                del terms[nm]


def _syndrome_of_product(synd, q, u, v):
    acc = 0
    for mon, c in _reduce_monomial_product(q, u, v).items():
        if c:
            acc ^= synd.values[mon]
    return acc


def locator_candidates(code, synd):
    """Deterministic stream of candidate locators, minimal pole order first.

    For each trial pole bound tau the unknowns are the basis of L(tau Pinf)
    and the constraints pair them with every check monomial v such that all
    products stay inside L(mPinf), so every syndrome used is computable
    from the received word.
    """
    ctx, q, m = code.ctx, code.q, code.m
    if synd.is_zero():
        yield SIGMA_ONE
        return
    seen = set()
    for tau in range(1, m + 1):
        unknowns = curve.basis_monomials(q, tau)
        checks = curve.basis_monomials(q, m - tau)
        if not checks:
            return
        rows = [[_syndrome_of_product(synd, q, u, v) for u in unknowns] for v in checks]
        kernel = linalg.null_space(ctx, rows, ncols=len(unknowns))
        cands = []
        for vec in kernel:
            if not any(vec):
                continue
            sigma = _make_locator(ctx, q, unknowns, vec)
            if sigma.coeffs not in seen:
                seen.add(sigma.coeffs)
                cands.append(sigma)
        cands.sort(key=lambda s: (s.pole, s.coeffs))
        yield from cands


def find_locator(code, synd):
    """Minimal-pole-order locator consistent with the syndrome constraints,
    or None when the kernel stays empty (undecodable)."""
    return next(locator_candidates(code, synd), None)


def locator_from_support(ctx, support):
    """Ground-truth locator: minimal-pole element of L vanishing on the
    given points, found by elimination on the evaluation matrix."""
    q = ctx.q
    points = list(support)
    if not points:
        return SIGMA_ONE
    tau = 1
    while True:
        mons = curve.basis_monomials(q, tau)
        rows = [[ctx.mul(ctx.power(p.alpha, a), ctx.power(p.y, b)) for a, b in mons]
                for p in points]
        kernel = linalg.null_space(ctx, rows, ncols=len(mons))
        cands = [_make_locator(ctx, q, mons, v) for v in kernel if any(v)]
        if cands:
            cands.sort(key=lambda s: (s.pole, s.coeffs))
            return cands[0]
        tau += 1
        if tau > q ** 3:
            raise AssertionError("no vanishing locator below pole order q^3")


# --- univariate specialization and Chien search -----------------------------


@dataclass(frozen=True)
class UnivariateLocator:
    psi: tuple   # coefficients, lowest degree first
    beta: int


def specialize_locator(ctx, sigma, y0, beta_j):
    """psi_j(x) = sigma(x, x^(q+1)(y0 + beta_j)): valid for alpha != 0;
    the alpha = 0 point is checked separately via sigma(0, beta_j)."""
    if not ctx.in_subfield(beta_j):
        raise ValueError("beta_j must lie in the subfield")
    q = ctx.q
    scale = y0 ^ beta_j
    out = []
    for (a, b), c in sigma.coeffs:
        deg = a + b * (q + 1)
        if deg >= len(out):
            out.extend([0] * (deg + 1 - len(out)))
        out[deg] ^= ctx.mul(c, ctx.power(scale, b))
    return UnivariateLocator(psi=tuple(poly_trim(out)), beta=beta_j)


def chien_search(ctx, psi, sigma, beta_j, counter=None):
    """Roots of psi over GF(q^2)^* plus the direct alpha = 0 test; exactly
    q^2 evaluations (q^2 - 1 univariate + 1 bivariate-at-zero)."""
    if counter is None:
        counter = OpCounter()
    roots = set()
    p = list(psi.psi)
    for i in range(ctx.order - 1):
        if poly_eval(ctx, p, ctx.exp[i], counter) == 0:
            roots.add(ctx.exp[i])
    if sigma_eval(ctx, sigma, 0, beta_j, counter) == 0:
        roots.add(0)
    return roots, counter.evals


# --- syndrome series, evaluator, Forney -------------------------------------


@dataclass(frozen=True)
class SeriesTerm:
    value: int
    x: int
    y: int
    g: tuple  # polynomial g(x, x_k) after the row substitution


@dataclass(frozen=True)
class SyndromeSeries:
    beta: int
    terms: tuple


def _bracket_g(ctx, y0, beta_j, yk):
    """g(x, x_k): the expanded bracket y^(q-1) + 1 + y_k y^(q-2) + ... +
    y_k^(q-1) with y = x^(q+1)(y0 + beta_j) substituted."""
    q = ctx.q
    scale = y0 ^ beta_j
    out = [0] * ((q + 1) * (q - 1) + 1)
    for l in range(q):
        deg = (q + 1) * (q - 1 - l)
        out[deg] ^= ctx.mul(ctx.power(yk, l), ctx.power(scale, q - 1 - l))
    out[0] ^= 1
    return tuple(poly_trim(out))


def build_syndrome_series(ctx, y0, errors, beta_j):
    """Series terms e_k g(x, x_k) / (x - x_k) for the errors lying in row
    beta_j.  The y-coordinate of each term uses the polynomial branch
    y_k = x_k^(q+1)(y0 + beta_j), which is what makes g(x_k, x_k) = 1 hold
    uniformly (including the alpha = 0 column)."""
    terms = []
    xs = set()
    for p, val in errors:
        if p.beta != beta_j or val == 0:
            continue
        if p.alpha in xs:
            raise ValueError("coincident x-coordinates within one row")
        xs.add(p.alpha)
        yk = ctx.mul(ctx.power(p.alpha, ctx.q + 1), y0 ^ beta_j)
        g = _bracket_g(ctx, y0, beta_j, yk)
        if poly_eval(ctx, list(g), p.alpha) != 1:
            raise AssertionError("bracket factor g(x_k, x_k) != 1")
        terms.append(SeriesTerm(value=val, x=p.alpha, y=yk, g=g))
    return SyndromeSeries(beta=beta_j, terms=tuple(terms))


@dataclass(frozen=True)
class Evaluator:
    omega: tuple
    beta: int


class EvaluatorMismatchError(ValueError):
    """psi does not vanish on every series location (non-exact cancellation)."""


def build_evaluator(ctx, psi, series):
    """Omega = polynomial part of psi * S_e with every (x - x_k) denominator
    cancelled exactly: f(x) sum_k e_k g(x, x_k) prod_{j != k} (x - x_j)."""
    xs = [t.x for t in series.terms]
    if not xs:
        return Evaluator(omega=(), beta=series.beta)
    full = poly_from_roots(ctx, xs)
    f, rem = poly_divmod(ctx, list(psi.psi), full)
    if rem:
        raise EvaluatorMismatchError("locator roots do not cover the series row")
    acc = []
    for k, t in enumerate(series.terms):
        part = poly_from_roots(ctx, xs[:k] + xs[k + 1:])
        part = poly_mul(ctx, part, list(t.g))
        part = [ctx.mul(t.value, c) for c in part]
        acc = acc + [0] * (len(part) - len(acc)) if len(part) > len(acc) else acc
        for i, c in enumerate(part):
            acc[i] ^= c
    omega = poly_mul(ctx, f, acc)
    return Evaluator(omega=tuple(omega), beta=series.beta)


def forney(ctx, omega, psi, xk):
    """Error value Omega(x_k) / psi'(x_k) at a locator root x_k."""
    p = list(psi.psi)
    if poly_eval(ctx, p, xk) != 0:
        raise ValueError("x_k is not a root of the locator")
    d = poly_eval(ctx, poly_deriv(p), xk)
    if d == 0:
        raise ValueError("psi'(x_k) = 0: repeated-root locator (Lemma violation)")
    return ctx.div(poly_eval(ctx, list(omega.omega), xk), d)


# --- blind error-value recovery ---------------------------------------------


def solve_error_values(code, synd, support_cols):
    """Exact solve of the syndrome equations over the cells of the supported
    columns; raises on inconsistent or underdetermined systems."""
    ctx = code.ctx
    cols = sorted(support_cols)
    cells = [(j, i) for j in range(code.q) for i in cols]
    a = []
    b = []
    for mon in code.monomials:
        arow = []
        for j, i in cells:
            p = code.point_at(j, i)
            arow.append(ctx.mul(ctx.power(p.alpha, mon[0]), ctx.power(p.y, mon[1])))
        a.append(arow)
        b.append(synd.values[mon])
    x = linalg.solve_unique(ctx, a, b)
    return {cell: v for cell, v in zip(cells, x)}


# --- the decoder ------------------------------------------------------------


@dataclass
class DecodeReport:
    status: str                    # "clean" | "ok" | "undecodable"
    stage: str = ""                # failing stage name when undecodable
    t: int = 0                     # number of corrupted columns claimed
    support_cols: tuple = ()
    error_cells: dict = dc_field(default_factory=dict)
    corrected: list = None         # Hermitian-domain codeword
    corrected_aux: list = None     # auxiliary-domain codeword
    psi_evals: int = 0             # Chien evaluations per row searched
    rows_searched: int = 0
    field_mults: int = 0
    locator_pole: int = 0
    seed: int = None

    def to_line(self):
        sup = ",".join(str(c) for c in self.support_cols)
        parts = [f"status={self.status}"]
        if self.stage:
            parts.append(f"stage={self.stage}")
        parts += [f"t={self.t}", f"support={sup or '-'}",
                  f"psi_evals={self.psi_evals}", f"rows_searched={self.rows_searched}",
                  f"field_mults={self.field_mults}", f"locator_pole={self.locator_pole}",
                  f"seed={'-' if self.seed is None else self.seed}"]
        return " ".join(parts)


MAX_LOCATOR_CANDIDATES = 64


def decode(code, ms, aux_received, seed=None):
    """Full pipeline on an auxiliary-domain received word.

    Never returns a success status without the corrected word passing the
    parity checks and the recovered pattern passing the Forney identity.
    """
    ctx = code.ctx
    received = from_auxiliary(ctx, ms, aux_received)
    synd = compute_syndromes(code, received)
    if synd.is_zero():
        return DecodeReport(status="clean", corrected=received,
                            corrected_aux=[list(r) for r in aux_received], seed=seed)

    counter = OpCounter()
    rows_searched = 0
    psi_per_row = 0
    last_stage = "locator"
    for sigma in itertools.islice(locator_candidates(code, synd),
                                  MAX_LOCATOR_CANDIDATES):
        # primary row beta = 0, cross-checked on row 1
        roots = []
        for j in (0, 1):
            beta = curve.beta_of_row(ctx, j)
            psi = specialize_locator(ctx, sigma, code.y0, beta)
            row_counter = OpCounter()
            r, evals = chien_search(ctx, psi, sigma, beta, row_counter)
            counter.mults += row_counter.mults
            psi_per_row = evals
            rows_searched += 1
            roots.append(r)
        if roots[0] != roots[1]:
            last_stage = "chien_row_crosscheck"
            continue
        support_cols = sorted(curve.col_of_alpha(ctx, a) for a in roots[0])
        if not support_cols:
            last_stage = "chien_empty_support"
            continue
        try:
            values = solve_error_values(code, synd, support_cols)
        except (linalg.InconsistentSystemError, linalg.UnderdeterminedSystemError):
            last_stage = "value_solve"
            continue
        error = zero_word(code.q)
        for (j, i), v in values.items():
            error[j][i] = v
        corrected = word_add(received, error)
        if not code.is_codeword(corrected):
            last_stage = "codeword_check"
            continue
        if not _forney_consistent(code, values):
            last_stage = "forney_check"
            continue
        nonzero_cols = sorted({i for (j, i), v in values.items() if v})
        return DecodeReport(
            status="ok", t=len(nonzero_cols), support_cols=tuple(nonzero_cols),
            error_cells={cell: v for cell, v in values.items() if v},
            corrected=corrected, corrected_aux=to_auxiliary(ctx, ms, corrected),
            psi_evals=psi_per_row, rows_searched=rows_searched,
            field_mults=counter.mults, locator_pole=sigma.pole, seed=seed)
    return DecodeReport(status="undecodable", stage=last_stage,
                        psi_evals=psi_per_row, rows_searched=rows_searched,
                        field_mults=counter.mults, seed=seed)


def _forney_consistent(code, values):
    """Rebuild psi and Omega from the recovered pattern per row and require
    the Forney quotient to reproduce every recovered value."""
    ctx = code.ctx
    for j in range(code.q):
        beta = curve.beta_of_row(ctx, j)
        row_errors = [(code.point_at(j, i), v) for (jj, i), v in values.items()
                      if jj == j and v]
        if not row_errors:
            continue
        xs = [p.alpha for p, _ in row_errors]
        psi = UnivariateLocator(psi=tuple(poly_from_roots(ctx, xs)), beta=beta)
        try:
            series = build_syndrome_series(ctx, code.y0, row_errors, beta)
            omega = build_evaluator(ctx, psi, series)
            for p, v in row_errors:
                if forney(ctx, omega, psi, p.alpha) != v:
                    return False
        except ValueError:
            return False
    return True

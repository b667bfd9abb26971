"""Independent brute-force oracles.

Everything here works from raw definitions only (codebook scans, pointwise
evaluation) and shares no code path with the fast decoder, so agreement
between the two is evidence rather than tautology.
"""

import itertools
import random
from dataclasses import dataclass

from . import curve
from .code import flatten, word_add, word_weight, zero_word
from .decoder import (build_evaluator, build_syndrome_series, chien_search,
                      decode, forney, locator_from_support,
                      sigma_eval_at_point, specialize_locator,
                      UnivariateLocator)
from .field import OpCounter, poly_deriv, poly_eval, poly_from_roots
from .mapping import from_auxiliary, is_column_error, to_auxiliary


@dataclass
class OracleResult:
    nearest: list      # codeword matrices at minimal distance
    distance: int
    unique: bool


def iter_codebook(code):
    """Every codeword, by exhaustive message enumeration ((q^2)^k words)."""
    ctx = code.ctx
    elems = [0] + [ctx.exp[i] for i in range(ctx.order - 1)]
    for msg in itertools.product(elems, repeat=code.params.k):
        yield code.encode(list(msg))


def brute_force_decode(code, word, candidates=None):
    """Exact nearest-codeword search by Hamming distance over q^3 symbols.

    `candidates` restricts the scan (used at q=4 where the full codebook is
    not enumerable); when omitted the whole codebook is scanned.
    """
    pool = candidates if candidates is not None else iter_codebook(code)
    best = None
    nearest = []
    flat_y = flatten(word)
    for cw in pool:
        d = sum(1 for a, b in zip(flat_y, flatten(cw)) if a != b)
        if best is None or d < best:
            best = d
            nearest = [cw]
        elif d == best:
            nearest.append(cw)
    return OracleResult(nearest=nearest, distance=best, unique=len(nearest) == 1)


def bivariate_exhaustive_roots(ctx, sigma, y0, counter=None):
    """sigma evaluated at all q^3 points; the count is exactly q^3."""
    if counter is None:
        counter = OpCounter()
    roots = set()
    for p in curve.enumerate_points(ctx, y0):
        if sigma_eval_at_point(ctx, sigma, p, counter) == 0:
            roots.add(p)
    return roots, counter.evals


# --- error injection helpers ------------------------------------------------


def random_codeword(code, rng):
    ctx = code.ctx
    elems = [0] + [ctx.exp[i] for i in range(ctx.order - 1)]
    return code.encode([rng.choice(elems) for _ in range(code.params.k)])


def inject_aux_errors(code, aux, t, rng):
    """t distinct random cells of the auxiliary word get random nonzero values."""
    ctx = code.ctx
    q = code.q
    cells = rng.sample([(j, i) for j in range(q) for i in range(q * q)], t)
    out = [list(r) for r in aux]
    for j, i in cells:
        out[j][i] ^= ctx.exp[rng.randrange(ctx.order - 1)]
    return out, cells


def measure_radius(code, ms, trials, seed):
    """Empirical exact-recovery rate per injected auxiliary error weight t.

    Deterministic under a fixed seed.  Rows: t = 0 .. q^2.
    """
    rng = random.Random(seed)
    rows = []
    for t in range(code.q ** 2 + 1):
        ok = 0
        runs = 1 if t == 0 else trials
        for _ in range(runs):
            cw = random_codeword(code, rng)
            aux = to_auxiliary(code.ctx, ms, cw)
            noisy, _ = inject_aux_errors(code, aux, t, rng)
            rep = decode(code, ms, noisy)
            if rep.status in ("ok", "clean") and rep.corrected_aux == aux:
                ok += 1
        rows.append({"t": t, "trials": runs, "successes": ok, "rate": ok / runs})
    return rows


def format_radius_table(rows, seed):
    lines = [f"t={r['t']} trials={r['trials']} successes={r['successes']} "
             f"rate={r['rate']:.6f} seed={seed} radius=measured" for r in rows]
    return "\n".join(lines) + "\n"


# --- theorem suite ----------------------------------------------------------


@dataclass
class PropertyResult:
    name: str
    trials: int
    failures: int
    asserted: bool          # failures fail the run only when asserted
    counterexample: str = None

    @property
    def ok(self):
        return self.failures == 0

    def to_line(self):
        status = "pass" if self.ok else ("fail" if self.asserted else "reported")
        line = f"{self.name} trials={self.trials} failures={self.failures} status={status}"
        if self.counterexample:
            line += f" counterexample=[{self.counterexample}]"
        return line


def _column_supports(code, exhaustive, rng, trials, max_size=3):
    """Column index subsets to test: all nonempty subsets when exhaustive,
    otherwise seeded random subsets of size 1..max_size."""
    ncols = code.q ** 2
    if exhaustive:
        for size in range(1, ncols + 1):
            yield from itertools.combinations(range(ncols), size)
    else:
        for _ in range(trials):
            size = rng.randrange(1, max_size + 1)
            yield tuple(sorted(rng.sample(range(ncols), size)))


def _random_column_pattern(code, cols, rng):
    """Full-column error pattern with random nonzero values in every cell."""
    ctx = code.ctx
    e = zero_word(code.q)
    for i in cols:
        for j in range(code.q):
            e[j][i] = ctx.exp[rng.randrange(ctx.order - 1)]
    return e


def verify_theorem_suite(code, ms, seed=0, trials=500, exhaustive=False):
    """Run every decoder/mapping property, one pass/fail record per property."""
    results = [
        _check_root_equivalence(code, seed, trials, exhaustive),
        _check_lemma_derivative(code, seed, trials, exhaustive),
        _check_bracket_factor(code, seed, trials, exhaustive),
        _check_forney_identity(code, seed, trials, exhaustive),
        _check_forcing(code, ms, prime=False),
        _check_forcing(code, ms, prime=True),
        _check_eval_counts(code),
        _check_mapping_roundtrip(code, ms, seed, trials, exhaustive),
    ]
    return results


def _support_points(code, cols):
    return [code.point_at(j, i) for i in cols for j in range(code.q)]


def _check_root_equivalence(code, seed, trials, exhaustive):
    """Per row: Chien roots of psi (plus the alpha = 0 direct check) equal
    the bivariate exhaustive root set restricted to that row."""
    ctx = code.ctx
    rng = random.Random(seed)
    n = fails = 0
    counter = None
    for cols in _column_supports(code, exhaustive, rng, trials):
        sigma = locator_from_support(ctx, _support_points(code, cols))
        bi_roots, _ = bivariate_exhaustive_roots(ctx, sigma, code.y0)
        for j in range(code.q):
            beta = curve.beta_of_row(ctx, j)
            psi = specialize_locator(ctx, sigma, code.y0, beta)
            roots, _ = chien_search(ctx, psi, sigma, beta)
            row_bi = {p.alpha for p in bi_roots if p.row == j}
            n += 1
            if roots != row_bi:
                fails += 1
                counter = counter or f"cols={cols} row={j}"
    return PropertyResult("theorem_root_equivalence", n, fails, True, counter)


def _pattern_rows(code, e):
    """Per-row error lists [(point, value), ...] for a pattern matrix."""
    out = []
    for j in range(code.q):
        out.append([(code.point_at(j, i), e[j][i])
                    for i in range(code.q ** 2) if e[j][i]])
    return out


def _forney_patterns(code, seed, trials, exhaustive):
    """Error patterns for the evaluator-side checks: every mapped weight-1
    auxiliary error, plus random column patterns."""
    ctx = code.ctx
    rng = random.Random(seed)
    q = code.q
    if exhaustive:
        for j in range(q):
            for i in range(q * q):
                for v in range(ctx.order - 1):
                    aux = zero_word(q)
                    aux[j][i] = ctx.exp[v]
                    yield from_auxiliary(ctx, ms_of(code), aux)
        for cols in itertools.combinations(range(q * q), 2):
            for _ in range(3):
                yield _random_column_pattern(code, cols, rng)
    else:
        for _ in range(trials):
            size = rng.randrange(1, 4)
            cols = sorted(rng.sample(range(q * q), size))
            yield _random_column_pattern(code, cols, rng)


_MS_CACHE = {}


def ms_of(code):
    from .mapping import build_mapping
    key = (code.q, code.y0)
    if key not in _MS_CACHE:
        _MS_CACHE[key] = build_mapping(code.ctx, code.y0)
    return _MS_CACHE[key]


def _check_forney_identity(code, seed, trials, exhaustive):
    """Ground-truth psi and Omega reproduce every injected error value."""
    ctx = code.ctx
    n = fails = 0
    counter = None
    for e in _forney_patterns(code, seed, trials, exhaustive):
        for row_errors in _pattern_rows(code, e):
            if not row_errors:
                continue
            beta = row_errors[0][0].beta
            xs = [p.alpha for p, _ in row_errors]
            psi = UnivariateLocator(psi=tuple(poly_from_roots(ctx, xs)), beta=beta)
            series = build_syndrome_series(ctx, code.y0, row_errors, beta)
            omega = build_evaluator(ctx, psi, series)
            for p, v in row_errors:
                n += 1
                if forney(ctx, omega, psi, p.alpha) != v:
                    fails += 1
                    counter = counter or f"cell=({p.row},{p.col}) value={ctx.fmt(v)}"
    return PropertyResult("forney_identity", n, fails, True, counter)


def _check_lemma_derivative(code, seed, trials, exhaustive):
    """psi'(x_k) != 0 at every root of a ground-truth locator product."""
    ctx = code.ctx
    rng = random.Random(seed)
    n = fails = 0
    counter = None
    for cols in _column_supports(code, exhaustive, rng, trials):
        xs = [curve.alpha_of_col(ctx, i) for i in cols]
        psi = poly_from_roots(ctx, xs)
        dpsi = poly_deriv(psi)
        for x in xs:
            n += 1
            if poly_eval(ctx, dpsi, x) == 0:
                fails += 1
                counter = counter or f"cols={cols} x={ctx.fmt(x)}"
    return PropertyResult("locator_derivative_nonzero", n, fails, True, counter)


def _check_bracket_factor(code, seed, trials, exhaustive):
    """g(x_k, x_k) = 1 at every error location, every row."""
    ctx = code.ctx
    rng = random.Random(seed)
    n = fails = 0
    counter = None
    for cols in _column_supports(code, exhaustive, rng, trials):
        e = _random_column_pattern(code, cols, rng)
        for row_errors in _pattern_rows(code, e):
            if not row_errors:
                continue
            beta = row_errors[0][0].beta
            series = build_syndrome_series(ctx, code.y0, row_errors, beta)
            for term in series.terms:
                n += 1
                if poly_eval(ctx, list(term.g), term.x) != 1:
                    fails += 1
                    counter = counter or f"x_k={ctx.fmt(term.x)} beta={ctx.fmt(beta)}"
    return PropertyResult("bracket_factor_unit", n, fails, True, counter)


def _check_forcing(code, ms, prime):
    """Single-entry auxiliary errors map to fully nonzero columns.  The M'
    column is reported, not asserted: its matrix has structural zeros."""
    ctx = code.ctx
    q = code.q
    cols = [q * q - 1] if prime else list(range(q * q - 1))
    n = fails = 0
    counter = None
    for i in cols:
        for j in range(q):
            for v in range(ctx.order - 1):
                aux = zero_word(q)
                aux[j][i] = ctx.exp[v]
                e = from_auxiliary(ctx, ms, aux)
                col = [e[r][i] for r in range(q)]
                n += 1
                if not all(col):
                    fails += 1
                    counter = counter or (
                        f"aux_cell=({j},{i}) value={v} column="
                        + ",".join(ctx.fmt(x) for x in col))
    name = "column_forcing_Mprime" if prime else "column_forcing_M"
    return PropertyResult(name, n, fails, asserted=not prime, counterexample=counter)


def _check_eval_counts(code):
    """Chien touches exactly q^2 points per row; the bivariate baseline
    touches exactly q^3."""
    ctx = code.ctx
    cols = (0,)
    sigma = locator_from_support(ctx, _support_points(code, cols))
    psi = specialize_locator(ctx, sigma, code.y0, 0)
    _, chien_count = chien_search(ctx, psi, sigma, 0)
    _, bi_count = bivariate_exhaustive_roots(ctx, sigma, code.y0)
    fails = int(chien_count != ctx.order) + int(bi_count != code.q ** 3)
    counter = None if not fails else f"chien={chien_count} bivariate={bi_count}"
    return PropertyResult("evaluation_counts", 2, fails, True, counter)


def _check_mapping_roundtrip(code, ms, seed, trials, exhaustive):
    ctx = code.ctx
    rng = random.Random(seed)
    n = fails = 0
    counter = None
    if exhaustive:
        words = iter_codebook(code)
    else:
        words = (random_word(code, rng) for _ in range(trials))
    for w in words:
        n += 1
        if from_auxiliary(ctx, ms, to_auxiliary(ctx, ms, w)) != w:
            fails += 1
            counter = counter or "word=" + ";".join(
                " ".join(ctx.fmt(x) for x in row) for row in w)
    return PropertyResult("mapping_roundtrip", n, fails, True, counter)


def random_word(code, rng):
    ctx = code.ctx
    return [[rng.choice([0] + [ctx.exp[i] for i in range(ctx.order - 1)])
             for _ in range(code.q ** 2)] for _ in range(code.q)]

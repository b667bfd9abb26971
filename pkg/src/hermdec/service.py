"""HTTP front door for the codec: code parameters, mapping dumps, round-trip
experiments, the theorem suite and the operation-count benchmark.

Built codes are cached per (q, m); they are immutable, so concurrent
requests can share them freely.
"""

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import curve, oracle
from .code import Code, CodeBuildError, zero_word
from .decoder import decode
from .field import OpCounter, FieldBuildError
from .mapping import build_mapping, dump_mapping, from_auxiliary, to_auxiliary
from .oracle import (bivariate_exhaustive_roots, format_radius_table,
                     measure_radius, verify_theorem_suite)

app = FastAPI(title="hermdec", version="0.1.0")

SUPPORTED_Q = (2, 4, 8, 16)


@lru_cache(maxsize=8)
def get_code(q: int, m: int):
    if q not in SUPPORTED_Q:
        raise HTTPException(status_code=400, detail=(
            f"q={q} unsupported: q must be one of {SUPPORTED_Q} "
            "(odd characteristic is rejected)"))
    try:
        code = Code(q, m)
    except (CodeBuildError, FieldBuildError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    ms = build_mapping(code.ctx, code.y0)
    return code, ms


# --- schemas ----------------------------------------------------------------


class CodeRequest(BaseModel):
    q: int
    m: int


class ParamsResponse(BaseModel):
    q: int
    m: int
    n: int
    k: int
    g: int
    dstar: int
    t_design: int
    y0: str
    basis: List[str]
    pole_orders: List[int]


class PointsResponse(BaseModel):
    q: int
    m: int
    table: str


class MappingResponse(BaseModel):
    q: int
    text: str


class RoundtripRequest(CodeRequest):
    t: int = 1
    trials: int = 100
    seed: int = 0
    exhaustive: bool = False
    parallel: int = 1


class TrialRecord(BaseModel):
    trial: int
    result: str  # recovered | undecodable | miscorrected
    report: str


class RoundtripResponse(BaseModel):
    records: List[TrialRecord]
    recovered: int
    undecodable: int
    miscorrected: int
    all_ok: bool


class VerifyRequest(CodeRequest):
    trials: int = 500
    seed: int = 0
    exhaustive: bool = False
    fail_on_edge: bool = False


class PropertyRecord(BaseModel):
    name: str
    trials: int
    failures: int
    asserted: bool
    line: str


class VerifyResponse(BaseModel):
    results: List[PropertyRecord]
    ok: bool


class BenchRequest(CodeRequest):
    t: int = 1
    seed: int = 0


class BenchResponse(BaseModel):
    q: int
    m: int
    t: int
    psi_evals: int
    bivariate_evals: int
    eval_ratio: float
    field_mults_univariate: int
    field_mults_bivariate: int
    decode_status: str


class RadiusRequest(CodeRequest):
    trials: int = 100
    seed: int = 0


class RadiusRow(BaseModel):
    t: int
    trials: int
    successes: int
    rate: float


class RadiusResponse(BaseModel):
    rows: List[RadiusRow]
    table: str


# --- endpoints --------------------------------------------------------------


@app.post("/params", response_model=ParamsResponse)
def params(req: CodeRequest):
    code, _ = get_code(req.q, req.m)
    p = code.params
    return ParamsResponse(
        q=p.q, m=p.m, n=p.n, k=p.k, g=p.g, dstar=p.dstar, t_design=p.t_design,
        y0=code.ctx.fmt(code.y0),
        basis=[f"x^{a}*y^{b}" for a, b in code.monomials],
        pole_orders=[curve.pole_order(mon, code.q) for mon in code.monomials])


@app.post("/points", response_model=PointsResponse)
def points(req: CodeRequest):
    code, _ = get_code(req.q, req.m)
    return PointsResponse(q=req.q, m=req.m,
                          table=curve.dump_points(code.ctx, code.points))


@app.post("/mapping", response_model=MappingResponse)
def mapping(req: CodeRequest):
    code, ms = get_code(req.q, req.m)
    return MappingResponse(q=req.q, text=dump_mapping(code.ctx, ms))


def _exhaustive_patterns(code, t):
    """All weight-t auxiliary error patterns as (cells, values) streams."""
    ctx = code.ctx
    q = code.q
    cells = [(j, i) for j in range(q) for i in range(q * q)]
    nonzero = [ctx.exp[i] for i in range(ctx.order - 1)]
    for chosen in itertools.combinations(cells, t):
        for vals in itertools.product(nonzero, repeat=t):
            yield list(zip(chosen, vals))


def _roundtrip_trial(code, ms, pattern, rng_seed):
    rng = random.Random(rng_seed)
    cw = oracle.random_codeword(code, rng)
    aux = to_auxiliary(code.ctx, ms, cw)
    noisy = [list(r) for r in aux]
    for (j, i), v in pattern:
        noisy[j][i] ^= v
    rep = decode(code, ms, noisy, seed=rng_seed)
    if rep.status in ("ok", "clean") and rep.corrected_aux == aux:
        result = "recovered"
    elif rep.status == "undecodable":
        result = "undecodable"
    else:
        result = "miscorrected"
    return result, rep.to_line()


MAX_EXHAUSTIVE_PATTERNS = 20000


@app.post("/roundtrip", response_model=RoundtripResponse)
def roundtrip(req: RoundtripRequest):
    code, ms = get_code(req.q, req.m)
    if not 0 <= req.t <= code.q ** 3:
        raise HTTPException(status_code=400, detail=f"invalid error weight t={req.t}")
    rng = random.Random(req.seed)
    if req.exhaustive:
        patterns = list(itertools.islice(
            _exhaustive_patterns(code, req.t), MAX_EXHAUSTIVE_PATTERNS + 1))
        if len(patterns) > MAX_EXHAUSTIVE_PATTERNS:
            raise HTTPException(status_code=400,
                                detail="exhaustive pattern space too large")
    else:
        patterns = []
        q = code.q
        cells = [(j, i) for j in range(q) for i in range(q * q)]
        for _ in range(req.trials):
            chosen = rng.sample(cells, req.t)
            patterns.append([(c, code.ctx.exp[rng.randrange(code.ctx.order - 1)])
                             for c in chosen])
    seeds = [rng.randrange(1 << 30) for _ in patterns]
    jobs = list(zip(patterns, seeds))
    if req.parallel > 1:
        with ThreadPoolExecutor(max_workers=req.parallel) as pool:
            outs = list(pool.map(lambda pv: _roundtrip_trial(code, ms, *pv), jobs))
    else:
        outs = [_roundtrip_trial(code, ms, *pv) for pv in jobs]
    records = [TrialRecord(trial=i, result=r, report=line)
               for i, (r, line) in enumerate(outs)]
    rec = sum(1 for r in records if r.result == "recovered")
    und = sum(1 for r in records if r.result == "undecodable")
    mis = sum(1 for r in records if r.result == "miscorrected")
    return RoundtripResponse(records=records, recovered=rec, undecodable=und,
                             miscorrected=mis, all_ok=(mis == 0))


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    code, ms = get_code(req.q, req.m)
    results = verify_theorem_suite(code, ms, seed=req.seed, trials=req.trials,
                                   exhaustive=req.exhaustive)
    ok = all(r.ok for r in results
             if r.asserted or req.fail_on_edge)
    return VerifyResponse(
        results=[PropertyRecord(name=r.name, trials=r.trials, failures=r.failures,
                                asserted=r.asserted, line=r.to_line())
                 for r in results],
        ok=ok)


@app.post("/bench", response_model=BenchResponse)
def bench(req: BenchRequest):
    code, ms = get_code(req.q, req.m)
    rng = random.Random(req.seed)
    cw = oracle.random_codeword(code, rng)
    aux = to_auxiliary(code.ctx, ms, cw)
    noisy, _ = oracle.inject_aux_errors(code, aux, req.t, rng)
    rep = decode(code, ms, noisy, seed=req.seed)
    # baseline: exhaustive bivariate search with the ground-truth locator of
    # the injected pattern (independent of the fast path)
    diff = [[a ^ b for a, b in zip(ra, rb)]
            for ra, rb in zip(from_auxiliary(code.ctx, ms, noisy),
                              from_auxiliary(code.ctx, ms, aux))]
    support = [code.point_at(j, i) for j in range(code.q)
               for i in range(code.q ** 2) if diff[j][i]]
    from .decoder import locator_from_support, SIGMA_ONE
    sigma = locator_from_support(code.ctx, support) if support else SIGMA_ONE
    counter = OpCounter()
    _, bi_evals = bivariate_exhaustive_roots(code.ctx, sigma, code.y0, counter)
    return BenchResponse(
        q=req.q, m=req.m, t=req.t,
        psi_evals=rep.psi_evals, bivariate_evals=bi_evals,
        eval_ratio=bi_evals / rep.psi_evals if rep.psi_evals else 0.0,
        field_mults_univariate=rep.field_mults,
        field_mults_bivariate=counter.mults,
        decode_status=rep.status)


@app.post("/radius", response_model=RadiusResponse)
def radius(req: RadiusRequest):
    code, ms = get_code(req.q, req.m)
    rows = measure_radius(code, ms, req.trials, req.seed)
    return RadiusResponse(rows=[RadiusRow(**r) for r in rows],
                          table=format_radius_table(rows, req.seed))

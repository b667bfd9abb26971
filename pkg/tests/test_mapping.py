import random

import pytest

from hermdec.code import zero_word
from hermdec.mapping import (build_M, build_Mprime, build_mapping,
                             from_auxiliary, is_column_error, to_auxiliary,
                             dump_mapping)

OMEGA = 2
OMEGA2 = 3


def test_M_pattern_q2(code2):
    # rows [1 - (y0+b)^1, 1] for b in {0, 1}, y0 = omega:
    # 1 + omega = omega^2, 1 + omega^2 = omega
    assert [list(r) for r in build_M(code2.ctx, code2.y0)] == [
        [OMEGA2, 1], [OMEGA, 1]]


def test_Mprime_pattern_q2(code2):
    assert [list(r) for r in build_Mprime(code2.ctx)] == [[1, 1], [0, 1]]


def test_Mprime_pattern_q4(code4):
    ctx = code4.ctx
    mp = [list(r) for r in build_Mprime(ctx)]
    assert mp[0] == [1, 0, 0, 1]
    g = ctx.gamma
    for j, b in enumerate((1, g, ctx.mul(g, g))):
        assert mp[j + 1] == [0, ctx.mul(b, b), b, 1]


@pytest.mark.parametrize("fixture", ["ms2", "ms4"])
def test_mapping_matrices_invertible(fixture, request):
    ms = request.getfixturevalue(fixture)
    code = request.getfixturevalue("code2" if ms.q == 2 else "code4")
    ctx = code.ctx
    from hermdec import linalg
    for mat, inv in ((ms.M, ms.Minv), (ms.Mprime, ms.Mprimeinv)):
        prod = linalg.mat_mul(ctx, [list(r) for r in mat], [list(r) for r in inv])
        assert prod == linalg.identity(ms.q)


def test_roundtrip_exhaustive_codewords(code2, ms2, codebook2):
    ctx = code2.ctx
    for w in codebook2:
        aux = to_auxiliary(ctx, ms2, w)
        assert from_auxiliary(ctx, ms2, aux) == w


def test_roundtrip_random_matrices(code4, ms4):
    ctx = code4.ctx
    rng = random.Random(3)
    for _ in range(100):
        w = [[rng.randrange(ctx.order) for _ in range(16)] for _ in range(4)]
        assert to_auxiliary(ctx, ms4, from_auxiliary(ctx, ms4, w)) == w
        assert from_auxiliary(ctx, ms4, to_auxiliary(ctx, ms4, w)) == w


def test_zero_maps_to_zero(code2, ms2):
    assert from_auxiliary(code2.ctx, ms2, zero_word(2)) == zero_word(2)
    assert to_auxiliary(code2.ctx, ms2, zero_word(2)) == zero_word(2)


def test_last_column_uses_Mprime(code2, ms2):
    assert ms2.matrix_for_col(3) is ms2.Mprime
    assert ms2.matrix_for_col(0) is ms2.M
    ctx = code2.ctx
    aux = zero_word(2)
    aux[0][3] = 1
    out = from_auxiliary(ctx, ms2, aux)
    # column 3 of the output is M' applied to the unit vector: (1, 0)
    assert [out[0][3], out[1][3]] == [1, 0]


def test_single_aux_error_scales_M_column(code2, ms2):
    ctx = code2.ctx
    aux = zero_word(2)
    aux[1][1] = OMEGA
    out = from_auxiliary(ctx, ms2, aux)
    col = [out[0][1], out[1][1]]
    assert col == [ctx.mul(OMEGA, ms2.M[0][1]), ctx.mul(OMEGA, ms2.M[1][1])]


def test_is_column_error():
    assert is_column_error(zero_word(2))
    full = zero_word(2)
    full[0][1] = full[1][1] = 3
    assert is_column_error(full)
    partial = zero_word(2)
    partial[0][1] = 3
    assert not is_column_error(partial)


@pytest.mark.parametrize("fixture", ["ms2", "ms4"])
def test_M_forces_full_columns(fixture, request):
    """Any single auxiliary error in an M-mapped column becomes a column
    error; all M entries are nonzero because y0 is outside the subfield."""
    ms = request.getfixturevalue(fixture)
    code = request.getfixturevalue("code2" if ms.q == 2 else "code4")
    ctx = code.ctx
    q = ms.q
    for j in range(q):
        for v in range(ctx.order - 1):
            col = [ctx.mul(ctx.exp[v], ms.M[r][j]) for r in range(q)]
            assert all(col)


@pytest.mark.parametrize("fixture", ["ms2", "ms4"])
def test_Mprime_partial_column_edge(fixture, request):
    """The M' column violates strict forcing: its matrix has structural
    zeros, so some single auxiliary errors stay partial.  Measured, and the
    last auxiliary row (all-ones column of M') is the exception that holds."""
    ms = request.getfixturevalue(fixture)
    q = ms.q
    partial_rows = [j for j in range(q)
                    if not all(ms.Mprime[r][j] for r in range(q))]
    assert partial_rows == list(range(q - 1))
    assert all(ms.Mprime[r][q - 1] for r in range(q))


def test_dump_mapping_text(code2, ms2):
    text = dump_mapping(code2.ctx, ms2)
    assert "[M]" in text and "[Mprimeinv]" in text
    assert text.splitlines()[1] == "2 0"  # M row 0 = omega^2, 1

import random

import pytest

from hermdec.field import (FieldBuildError, build_field, poly_add, poly_deriv,
                           poly_divmod, poly_eval, poly_from_roots, poly_gcd,
                           poly_mul, poly_trim)

# In GF(4) with modulus x^2+x+1: omega = 2, omega^2 = omega+1 = 3.
OMEGA = 2
OMEGA2 = 3


def all_elems(ctx):
    return list(range(ctx.order))


def test_gf4_construction(gf4):
    assert gf4.q == 2 and gf4.order == 4
    assert gf4.epsilon == OMEGA
    assert gf4.mul(OMEGA, OMEGA) == OMEGA2  # omega^2 = omega + 1
    assert gf4.inv(OMEGA) == OMEGA2         # omega * omega^2 = omega^3 = 1
    assert gf4.add(OMEGA, OMEGA) == 0


def test_gf4_subfield_is_prime_field(gf4):
    assert gf4.subfield_elements() == [0, 1]


def test_gf16_gamma_order(gf16):
    # gamma = epsilon^(q+1) = epsilon^5 has order q - 1 = 3
    assert gf16.gamma == gf16.exp[5]
    assert gf16.element_order(gf16.gamma) == 3


def test_rejects_bad_exponent():
    with pytest.raises(FieldBuildError):
        build_field(0)
    with pytest.raises(FieldBuildError):
        build_field(9)


def test_non_primitive_modulus_detected(gf4):
    from hermdec import field
    # x^4 + x^3 + x^2 + x + 1 is irreducible but not primitive (x has order 5)
    orig = field.MODULI[2]
    field.MODULI[2] = 0b11111
    try:
        with pytest.raises(FieldBuildError):
            build_field(2)
    finally:
        field.MODULI[2] = orig


def test_inv_zero_raises(gf4):
    with pytest.raises(ZeroDivisionError):
        gf4.inv(0)


@pytest.mark.parametrize("m", [1, 2])
def test_field_axioms(m):
    ctx = build_field(m)
    rng = random.Random(m)
    if m == 1:
        triples = [(a, b, c) for a in all_elems(ctx)
                   for b in all_elems(ctx) for c in all_elems(ctx)]
    else:
        triples = [tuple(rng.randrange(ctx.order) for _ in range(3))
                   for _ in range(300)]
    for a, b, c in triples:
        assert ctx.mul(a, ctx.mul(b, c)) == ctx.mul(ctx.mul(a, b), c)
        assert ctx.mul(a, b ^ c) == ctx.mul(a, b) ^ ctx.mul(a, c)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1


@pytest.mark.parametrize("m", [1, 2])
def test_frobenius_closure(m):
    ctx = build_field(m)
    for a in all_elems(ctx):
        assert ctx.power(a, ctx.order) == a
    for a in ctx.subfield_elements():
        assert ctx.power(a, ctx.q) == a


def test_subfield_closed_under_ops(gf16):
    sub = gf16.subfield_elements()
    for a in sub:
        for b in sub:
            assert (a ^ b) in sub
            assert gf16.mul(a, b) in sub


def test_serialization_roundtrip(gf16):
    for a in all_elems(gf16):
        assert gf16.parse(gf16.fmt(a)) == a
    assert gf16.fmt(0) == "-"


def test_poly_derivative_char2():
    # d/dx (x^2 + x + 1) = 1; d/dx x^3 = x^2
    assert poly_deriv([1, 1, 1]) == [1]
    assert poly_deriv([0, 0, 0, 1]) == [0, 0, 1]


def test_poly_eval_root(gf4):
    # x - omega at omega
    assert poly_eval(gf4, [OMEGA, 1], OMEGA) == 0


def test_poly_eval_multiplicative(gf16):
    rng = random.Random(0)
    for _ in range(50):
        p = [rng.randrange(16) for _ in range(rng.randrange(1, 6))]
        q = [rng.randrange(16) for _ in range(rng.randrange(1, 6))]
        x = rng.randrange(16)
        lhs = poly_eval(gf16, poly_mul(gf16, p, q), x)
        assert lhs == gf16.mul(poly_eval(gf16, p, x), poly_eval(gf16, q, x))


def test_derivative_product_rule(gf16):
    rng = random.Random(1)
    for _ in range(50):
        p = poly_trim([rng.randrange(16) for _ in range(rng.randrange(1, 6))])
        q = poly_trim([rng.randrange(16) for _ in range(rng.randrange(1, 6))])
        lhs = poly_deriv(poly_mul(gf16, p, q))
        rhs = poly_add(poly_mul(gf16, poly_deriv(p), q),
                       poly_mul(gf16, p, poly_deriv(q)))
        assert lhs == rhs


def test_poly_divmod_exact(gf16):
    rng = random.Random(2)
    for _ in range(50):
        d = poly_trim([rng.randrange(16) for _ in range(rng.randrange(1, 5))])
        if not d:
            continue
        p = [rng.randrange(16) for _ in range(rng.randrange(1, 8))]
        quo, rem = poly_divmod(gf16, p, d)
        back = poly_add(poly_mul(gf16, quo, d), rem)
        assert back == poly_trim(list(p))
        assert len(rem) < len(d)


def test_poly_gcd_of_root_products(gf16):
    roots = [gf16.exp[i] for i in (0, 3, 7)]
    p = poly_from_roots(gf16, roots)
    q = poly_from_roots(gf16, roots[:2] + [gf16.exp[9]])
    g = poly_gcd(gf16, p, q)
    assert g == poly_from_roots(gf16, roots[:2])

"""Arithmetic in GF(2^(2m)) with its embedded GF(2^m) subfield, plus
univariate polynomial utilities.

Elements are ints holding the polynomial-basis bit vector.  Multiplication
goes through exp/log tables built once per field.  Serialized form of an
element is its decimal log index (epsilon^i -> "i"), with "-" for zero.
"""

from dataclasses import dataclass

# Canonical primitive polynomials over GF(2), degree 2m, fixed so that
# serialized artifacts are bit-exact across builds.  Each is re-verified
# primitive at construction time.
MODULI = {
    1: 0b111,        # x^2 + x + 1
    2: 0b10011,      # x^4 + x + 1
    3: 0b1000011,    # x^6 + x + 1
    4: 0b100011101,  # x^8 + x^4 + x^3 + x^2 + 1
}


class FieldBuildError(ValueError):
    pass


@dataclass
class OpCounter:
    """Per-call operation tally (polynomial evaluations, field multiplies)."""

    evals: int = 0
    mults: int = 0


class FieldCtx:
    """The field GF(q^2) with q = 2^m, and its subfield GF(q).

    Immutable after construction; every operation is a pure function of its
    arguments, so a context is safe to share across threads.
    """

    def __init__(self, m):
        if not isinstance(m, int) or m < 1:
            raise FieldBuildError("field exponent m must be a positive integer")
        if m not in MODULI:
            raise FieldBuildError(f"unsupported field exponent m={m} (desk scale is 1..4)")
        self.m = m
        self.q = 1 << m
        self.order = 1 << (2 * m)          # q^2 elements
        self.modulus = MODULI[m]
        self._build_tables()
        self.epsilon = self.exp[1]
        self.gamma = self.exp[(self.q + 1) % (self.order - 1)]
        self._self_check()

    def _build_tables(self):
        n = self.order - 1
        self.exp = [0] * (2 * n)
        self.log = [None] * self.order
        x = 1
        for i in range(n):
            if self.log[x] is not None:
                raise FieldBuildError("modulus is not primitive: x has order < q^2 - 1")
            self.exp[i] = x
            self.log[x] = i
            x <<= 1
            if x & self.order:
                x ^= self.modulus
        if x != 1:
            raise FieldBuildError("modulus is not primitive: x^(q^2-1) != 1")
        for i in range(n, 2 * n):
            self.exp[i] = self.exp[i - n]

    def _self_check(self):
        # gamma = epsilon^(q+1) must generate the subfield multiplicative group
        if self.element_order(self.gamma) != self.q - 1:
            raise FieldBuildError("epsilon^(q+1) does not have order q-1")
        for a in self.subfield_elements():
            if self.power(a, self.q) != a:
                raise FieldBuildError("subfield is not fixed by the q-power map")

    # --- element operations -------------------------------------------------

    def add(self, a, b):
        return a ^ b

    sub = add  # characteristic 2

    def neg(self, a):
        return a

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(q^2)")
        return self.exp[self.order - 1 - self.log[a]]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, n):
        if n < 0:
            return self.power(self.inv(a), -n)
        if a == 0:
            return 1 if n == 0 else 0
        return self.exp[(self.log[a] * n) % (self.order - 1)]

    def element_order(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.order - 1
        return n // _gcd(n, self.log[a])

    def in_subfield(self, a):
        return self.power(a, self.q) == a

    def subfield_elements(self):
        """The q elements of GF(q), zero first then powers of gamma."""
        return [0] + [self.power(self.gamma, i) for i in range(self.q - 1)]

    # --- serialization ------------------------------------------------------

    def fmt(self, a):
        return "-" if a == 0 else str(self.log[a])

    def parse(self, token):
        if token == "-":
            return 0
        i = int(token)
        if not 0 <= i < self.order - 1:
            raise ValueError(f"log index {i} out of range for GF({self.order})")
        return self.exp[i]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def build_field(m):
    """Build GF(q^2) for q = 2^m with the canonical modulus, self-checked."""
    return FieldCtx(m)


# --- univariate polynomials over GF(q^2) ------------------------------------
# A polynomial is a list of coefficients, lowest degree first; the zero
# polynomial is the empty list and canonical form has no trailing zeros.


def poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] ^= c
    return poly_trim(out)


def poly_scale(ctx, p, c):
    if c == 0:
        return []
    return [ctx.mul(a, c) for a in p]


def poly_mul(ctx, p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] ^= ctx.mul(a, b)
    return poly_trim(out)


def poly_eval(ctx, p, x, counter=None):
    """Horner evaluation; counts one eval and deg(p) multiplies if asked."""
    if counter is not None:
        counter.evals += 1
        counter.mults += max(len(p) - 1, 0)
    acc = 0
    for c in reversed(p):
        acc = ctx.mul(acc, x) ^ c
    return acc


def poly_deriv(p):
    """Formal derivative in characteristic 2: even-degree terms vanish."""
    return poly_trim([p[i] if i % 2 == 1 else 0 for i in range(1, len(p))])


def poly_divmod(ctx, p, d):
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [0] * max(len(p) - len(d) + 1, 0)
    dlead = ctx.inv(d[-1])
    for i in range(len(rem) - len(d), -1, -1):
        c = ctx.mul(rem[i + len(d) - 1], dlead)
        if c == 0:
            continue
        quo[i] = c
        for j, dc in enumerate(d):
            rem[i + j] ^= ctx.mul(c, dc)
    return poly_trim(quo), poly_trim(rem)


def poly_from_roots(ctx, roots):
    p = [1]
    for r in roots:
        p = poly_mul(ctx, p, [r, 1])  # x - r == x + r
    return p


def poly_gcd(ctx, p, q):
    p, q = list(p), list(q)
    while q:
        _, r = poly_divmod(ctx, p, q)
        p, q = q, r
    if p:
        p = poly_scale(ctx, p, ctx.inv(p[-1]))
    return p

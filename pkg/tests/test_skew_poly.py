import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewcodes import ContextMismatchError, FrobPower, NotMonicError, SkewPoly, field_make
from skewcodes import sp_add, sp_eval_twist, sp_mul, sp_right_divmod
from skewcodes.skew_poly import format_poly, sp_neg

from oracles import NaiveSkew, PolyField, strip

SIGMA = FrobPower(1, 2)


def P(ctx, coeffs, sigma=SIGMA):
    return SkewPoly(ctx, sigma, coeffs)


def polys(ctx, max_len, sigma=SIGMA):
    return st.lists(st.integers(0, ctx.q - 1), max_size=max_len).map(lambda c: P(ctx, c, sigma))


def test_canonical_form(F9):
    assert P(F9, [1, 0, 0]).coeffs == (1,)
    assert P(F9, [0, 0]).coeffs == ()
    assert P(F9, []).degree == -1


def test_add_examples(F9, F25):
    g = P(F9, [3, 0, 5])
    assert sp_add(g, P(F9, [])) == g
    t = P(F9, [0, 1])
    assert sp_add(t, sp_neg(t)).is_zero()
    assert sp_add(P(F25, [0, 1]), P(F25, [0, 0, 0, 1])).coeffs == (0, 1, 0, 1)


def test_mul_twist_rule(F9):
    t = P(F9, [0, 1])
    for a in F9.elements():
        assert sp_mul(t, P(F9, [a])) == P(F9, [0, F9.frob(a, 1)])


def test_mul_identity(F9):
    h = P(F9, [2, 7, 0, 4])
    assert sp_mul(P(F9, [1]), h) == h


def test_mul_example_f9(F9):
    xt = P(F9, [0, F9.xi])
    assert sp_mul(xt, xt) == P(F9, [0, 0, F9.elem(4)])


def test_twist_law_exhaustive():
    for p, r in [(2, 2), (3, 2), (2, 3), (3, 3), (2, 4), (5, 2), (3, 4)]:
        ctx = field_make(p, r)
        for s in range(1, r):
            sigma = FrobPower(s, r)
            for j in range(0, 9):
                tj = SkewPoly.monomial(ctx, sigma, 1, j)
                for c in ctx.elements():
                    lhs = sp_mul(tj, SkewPoly.constant(ctx, sigma, c))
                    assert lhs == SkewPoly.monomial(ctx, sigma, ctx.frob(c, s * j), j) if c else lhs.is_zero()


def test_mul_matches_naive(F9):
    R = NaiveSkew(PolyField(3, F9.modulus), 1)
    for g in itertools.product(range(9), repeat=2):
        for h in itertools.product(range(9), repeat=2):
            assert list(sp_mul(P(F9, g), P(F9, h)).coeffs) == R.mul(strip(g), strip(h))


def test_ring_axioms_exhaustive_f4():
    # all triples of polynomials of degree <= 1 over F_4, sigma the Frobenius
    ctx = field_make(2, 2)
    sigma = FrobPower(1, 2)
    ps = [SkewPoly(ctx, sigma, c) for c in itertools.product(range(4), repeat=2)]
    for g in ps:
        for h in ps:
            gh = sp_mul(g, h)
            if not g.is_zero() and not h.is_zero():
                assert gh.degree == g.degree + h.degree
            for k in ps:
                assert sp_mul(gh, k) == sp_mul(g, sp_mul(h, k))
                assert sp_mul(g, sp_add(h, k)) == sp_add(gh, sp_mul(g, k))
                assert sp_mul(sp_add(g, h), k) == sp_add(sp_mul(g, k), sp_mul(h, k))


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_ring_axioms_sampled_f9(data):
    ctx = field_make(3, 2)
    g, h, k = (data.draw(polys(ctx, 3)) for _ in range(3))
    assert sp_mul(sp_mul(g, h), k) == sp_mul(g, sp_mul(h, k))
    assert sp_mul(g, sp_add(h, k)) == sp_add(sp_mul(g, h), sp_mul(g, k))
    assert sp_mul(sp_add(g, h), k) == sp_add(sp_mul(g, k), sp_mul(h, k))
    if not g.is_zero() and not h.is_zero():
        assert sp_mul(g, h).degree == g.degree + h.degree


def test_divmod_small_dividend(F9):
    f = P(F9, [1, 2, 1])
    g = P(F9, [5, 3])
    q, r = sp_right_divmod(g, f)
    assert q.is_zero() and r == g


def test_divmod_constacyclic(F9):
    for m in range(1, 5):
        for a in F9.elements():
            f = P(F9, [F9.neg(a)] + [0] * (m - 1) + [1])
            q, r = sp_right_divmod(SkewPoly.monomial(F9, SIGMA, 1, m), f)
            assert q == P(F9, [1])
            assert r == P(F9, [a])


def test_divmod_f25_example(F25):
    G = P(F25, [0, 1, 0, 1])
    f = P(F25, [F25.neg(4), 0, 0, 0, 1])
    _, r = sp_right_divmod(sp_mul(G, G), f)
    assert r == P(F25, [3])


def test_divmod_errors(F9):
    with pytest.raises(NotMonicError):
        sp_right_divmod(P(F9, [1, 1]), P(F9, [1, 2]))
    with pytest.raises(ZeroDivisionError):
        sp_right_divmod(P(F9, [1, 1]), P(F9, []))
    with pytest.raises(ContextMismatchError):
        sp_add(P(F9, [1]), SkewPoly(F9, FrobPower(0, 2), [1]))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_divmod_reconstructs_and_is_unique(data):
    ctx = field_make(3, 2)
    g = data.draw(polys(ctx, 9))
    low = data.draw(st.lists(st.integers(0, 8), min_size=0, max_size=4))
    f = P(ctx, low + [1])
    q, r = sp_right_divmod(g, f)
    assert r.degree < f.degree
    assert sp_add(sp_mul(q, f), r) == g
    if f.degree > 0:
        bump = data.draw(st.lists(st.integers(0, 8), min_size=f.degree, max_size=f.degree))
        delta = P(ctx, bump)
        if not delta.is_zero():
            assert sp_add(sp_mul(q, f), sp_add(r, delta)) != g


def test_eval_twist_examples(F9):
    g = P(F9, [4, 0, 7])
    assert sp_eval_twist(g, 0) == g
    assert sp_eval_twist(P(F9, [F9.xi]), 1) == P(F9, [F9.frob(F9.xi, 1)])
    assert sp_eval_twist(P(F9, [F9.xi, F9.xi]), 1) == P(F9, [F9.elem(3), F9.elem(3)])


def test_format(F9):
    assert format_poly(P(F9, [])) == "0"
    assert format_poly(P(F9, [1, 1])) == "t + x^0"
    assert format_poly(P(F9, [0, 0, F9.xi])) == "x^1 t^2"

"""The skew polynomial ring S[t; sigma] over a finite field.

Multiplication follows ``t^j a = sigma^j(a) t^j``.  Only right division is
provided: ``g = q f + rem`` with ``deg rem < deg f``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff_ring import FieldCtx, FrobPower
from .errors import ContextMismatchError, NotMonicError


def _strip(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class SkewPoly:
    """Element of ``S[t; sigma]``; ``coeffs[i]`` is the coefficient of ``t^i``."""

    ctx: FieldCtx
    sigma: FrobPower
    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, ctx, sigma, c, k):
        return cls(ctx, sigma, (0,) * k + (c,))

    @classmethod
    def constant(cls, ctx, sigma, c):
        return cls(ctx, sigma, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def dense(self, length: int) -> list[int]:
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in length {length}")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def with_coeffs(self, coeffs) -> "SkewPoly":
        return SkewPoly(self.ctx, self.sigma, coeffs)

    def __add__(self, other):
        return sp_add(self, other)

    def __sub__(self, other):
        return sp_sub(self, other)

    def __neg__(self):
        return sp_neg(self)

    def __mul__(self, other):
        return sp_mul(self, other)

    def __repr__(self):
        return f"SkewPoly({format_poly(self)})"


def _check(g: SkewPoly, h: SkewPoly):
    if g.ctx != h.ctx or g.sigma != h.sigma:
        raise ContextMismatchError("skew polynomials live in different rings")


def sp_add(g: SkewPoly, h: SkewPoly) -> SkewPoly:
    _check(g, h)
    F = g.ctx
    n = max(len(g.coeffs), len(h.coeffs))
    return g.with_coeffs(F.add(g.coeff(i), h.coeff(i)) for i in range(n))


def sp_neg(g: SkewPoly) -> SkewPoly:
    return g.with_coeffs(g.ctx.neg(c) for c in g.coeffs)


def sp_sub(g: SkewPoly, h: SkewPoly) -> SkewPoly:
    return sp_add(g, sp_neg(h))


def sp_scale(c: int, g: SkewPoly) -> SkewPoly:
    """Left scalar multiple ``c g``."""
    return g.with_coeffs(g.ctx.mul(c, x) for x in g.coeffs)


def sp_mul(g: SkewPoly, h: SkewPoly) -> SkewPoly:
    _check(g, h)
    if g.is_zero() or h.is_zero():
        return g.with_coeffs(())
    F, s = g.ctx, g.sigma.s
    out = [0] * (len(g.coeffs) + len(h.coeffs) - 1)
    for i, gi in enumerate(g.coeffs):
        if not gi:
            continue
        for j, hj in enumerate(h.coeffs):
            if hj:
                out[i + j] = F.add(out[i + j], F.mul(gi, F.frob(hj, s * i)))
    return g.with_coeffs(out)


def sp_right_divmod(g: SkewPoly, f: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Return ``(q, rem)`` with ``g = q f + rem`` and ``deg rem < deg f``."""
    _check(g, f)
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if not f.is_monic():
        raise NotMonicError("right division needs a monic divisor")
    F, s = g.ctx, g.sigma.s
    m = f.degree
    rem = list(g.coeffs)
    quo = [0] * max(len(rem) - m, 0)
    for d in range(len(rem) - 1, m - 1, -1):
        c = rem[d]
        if not c:
            continue
        e = d - m
        quo[e] = c
        # subtract c t^e f = sum c sigma^e(f_j) t^(e+j)
        for j, fj in enumerate(f.coeffs):
            if fj:
                rem[e + j] = F.sub(rem[e + j], F.mul(c, F.frob(fj, s * e)))
    return g.with_coeffs(quo), g.with_coeffs(rem[:m])


def sp_eval_twist(g: SkewPoly, j: int) -> SkewPoly:
    """Apply ``sigma^j`` to every coefficient."""
    return g.with_coeffs(g.ctx.frob(c, g.sigma.s * j) for c in g.coeffs)


def format_poly(g: SkewPoly) -> str:
    """Human-readable form with exponent-encoded coefficients, e.g. ``x^4 t^2 + t``."""
    if g.is_zero():
        return "0"
    F = g.ctx
    terms = []
    for i in range(len(g.coeffs) - 1, -1, -1):
        c = g.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if c == 1 and mono:
            terms.append(mono)
        else:
            coef = f"x^{F.exponent(c)}"
            terms.append(f"{coef} {mono}".strip())
    return " + ".join(terms)

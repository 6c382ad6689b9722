"""Petit algebras ``S_f = S[t; sigma] / S[t; sigma] f`` and monomial powers.

Elements are polynomials of degree below ``m = deg f`` and the product is
``g o h = g h mod_r f``.  The algebra is unital but in general not associative,
so powers of an element depend on the bracketing; only the left-nested power
``L(z, s) = z o (z o (... o z))`` is exposed for general elements.

For ``f = t^m - b`` a monomial ``z = alpha t^k`` is power-associative iff
``alpha b == sigma^m(alpha) sigma^k(b)``, and then
``z^s = N_s^{sigma^k}(alpha) prod_{i=1}^{floor(sk/m)} sigma^(sk-im)(b) t^(sk mod m)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import _kernels
from .coeff_ring import FieldCtx, FrobPower, in_fixed_field, iter_norm
from .errors import ContextMismatchError, HypothesisError, PowerAssociativityError
from .skew_poly import SkewPoly, sp_mul, sp_right_divmod

# bracketings of up to this many factors are enumerated by the oracle
ORACLE_FACTORS = 8


class PetitAlgebra:
    """``S_f`` for a monic ``f`` of degree ``m >= 1``.

    ``f0`` holds the tail with ``f = t^m - sum f0[j] t^j``.  ``constacyclic_a``
    is ``a`` when ``f = t^m - a`` and ``None`` otherwise.
    """

    def __init__(self, ctx: FieldCtx, sigma: FrobPower, f: SkewPoly):
        if f.ctx != ctx or f.sigma != sigma:
            raise ContextMismatchError("modulus lives in a different ring")
        if not f.is_monic() or f.degree < 1:
            raise ValueError("the modulus must be monic of degree at least 1")
        self.ctx = ctx
        self.sigma = sigma
        self.f = f
        self.m = f.degree
        self.f0 = tuple(ctx.neg(f.coeff(j)) for j in range(self.m))
        if all(not c for c in self.f0[1:]):
            self.constacyclic_a = self.f0[0]
        else:
            self.constacyclic_a = None

    @classmethod
    def constacyclic(cls, ctx: FieldCtx, sigma, m: int, a: int) -> "PetitAlgebra":
        if isinstance(sigma, int):
            sigma = FrobPower(sigma, ctx.r)
        if m < 1:
            raise ValueError("m must be at least 1")
        coeffs = [ctx.neg(a)] + [0] * (m - 1) + [1]
        return cls(ctx, sigma, SkewPoly(ctx, sigma, coeffs))

    @property
    def n(self) -> int:
        """Order of sigma."""
        return self.sigma.order

    @property
    def a(self) -> int:
        if self.constacyclic_a is None:
            raise ValueError("algebra is not of the form t^m - a")
        return self.constacyclic_a

    def _key(self):
        return (self.ctx, self.sigma, self.f.coeffs)

    def __eq__(self, other):
        return isinstance(other, PetitAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.constacyclic_a is not None:
            return f"PetitAlgebra({self.ctx.spec}, s={self.sigma.s}, m={self.m}, a={self.ctx.encode(self.a)})"
        return f"PetitAlgebra({self.ctx.spec}, s={self.sigma.s}, f={self.f.coeffs})"

    def same_ring(self, other: "PetitAlgebra") -> bool:
        return self.ctx == other.ctx and self.sigma == other.sigma and self.m == other.m

    # -- element construction ----------------------------------------------
    def elem(self, coeffs) -> "AlgebraElem":
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > self.m:
            if any(coeffs[self.m :]):
                raise ValueError("element has degree >= m; reduce it first")
            coeffs = coeffs[: self.m]
        return AlgebraElem(self, tuple(coeffs + [0] * (self.m - len(coeffs))))

    def zero(self) -> "AlgebraElem":
        return self.elem([])

    def one(self) -> "AlgebraElem":
        return self.elem([1])

    def monomial(self, alpha: int, k: int) -> "AlgebraElem":
        if not 0 <= k < self.m:
            raise ValueError(f"degree {k} out of range for m={self.m}")
        return self.elem([0] * k + [alpha])

    def reduce(self, g: SkewPoly) -> "AlgebraElem":
        return self.elem(sp_right_divmod(g, self.f)[1].dense(self.m))

    def basis(self):
        """F_p-basis ``p^u t^i`` (``p^u`` is the u-th polynomial-basis vector of K)."""
        p = self.ctx.p
        return [self.monomial(p**u, i) for i in range(self.m) for u in range(self.ctx.r)]

    @property
    def kernel_args(self):
        return self.ctx.kernel_tables, self.sigma.s, self.f0


@dataclass(frozen=True)
class AlgebraElem:
    alg: PetitAlgebra
    coeffs: tuple

    @property
    def poly(self) -> SkewPoly:
        return SkewPoly(self.alg.ctx, self.alg.sigma, self.coeffs)

    def _check(self, other):
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        if other.alg != self.alg:
            raise ContextMismatchError("elements of different algebras")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        F = self.alg.ctx
        return AlgebraElem(self.alg, tuple(F.add(x, y) for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        F = self.alg.ctx
        return AlgebraElem(self.alg, tuple(F.neg(x) for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return petit_mul(self, other)

    def scale(self, c: int) -> "AlgebraElem":
        F = self.alg.ctx
        return AlgebraElem(self.alg, tuple(F.mul(c, x) for x in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __repr__(self):
        return f"AlgebraElem({self.poly!r})"


@dataclass(frozen=True)
class Monomial:
    """``alpha t^k`` with ``alpha != 0``."""

    alpha: int
    k: int

    def __post_init__(self):
        if not self.alpha:
            raise ValueError("monomial coefficient must be nonzero")
        if self.k < 0:
            raise ValueError("monomial degree must be nonnegative")

    def elem(self, alg: PetitAlgebra) -> AlgebraElem:
        return alg.monomial(self.alpha, self.k)


def petit_mul(g: AlgebraElem, h: AlgebraElem) -> AlgebraElem:
    """``g o h = g h mod_r f``."""
    if g.alg != h.alg:
        raise ContextMismatchError("elements of different algebras")
    T, sig, f0 = g.alg.kernel_args
    return AlgebraElem(g.alg, tuple(_kernels.petit_mul(T, sig, f0, g.coeffs, h.coeffs)))


def petit_mul_reference(g: AlgebraElem, h: AlgebraElem) -> AlgebraElem:
    """Same product computed through ``S[t; sigma]`` arithmetic and right division."""
    return g.alg.reduce(sp_mul(g.poly, h.poly))


def left_nested_powers(z: AlgebraElem, count: int) -> list[AlgebraElem]:
    """``[L(z,0)=1, L(z,1)=z, ..., L(z,count-1)]``."""
    T, sig, f0 = z.alg.kernel_args
    rows = _kernels.left_powers(T, sig, f0, z.coeffs, count)
    return [AlgebraElem(z.alg, tuple(r)) for r in rows]


def left_nested_power(z: AlgebraElem, s: int) -> AlgebraElem:
    if s < 1:
        raise ValueError("left-nested powers start at s = 1")
    return left_nested_powers(z, s + 1)[s]


def power_assoc_condition(ctx: FieldCtx, sigma: FrobPower, m: int, k: int, alpha: int, b: int) -> bool:
    """``alpha b == sigma^m(alpha) sigma^k(b)``."""
    lhs = ctx.mul(alpha, b)
    rhs = ctx.mul(ctx.frob(alpha, sigma.s * m), ctx.frob(b, sigma.s * k))
    return lhs == rhs


def closed_power(ctx, sigma, m, b, alpha, k, s) -> tuple[int, int]:
    """Coefficient and degree of the closed power formula for ``(alpha t^k)^s``."""
    coef = iter_norm(ctx, sigma ** k, s, alpha)
    z = (s * k) // m
    for i in range(1, z + 1):
        coef = ctx.mul(coef, ctx.frob(b, sigma.s * (s * k - i * m)))
    return coef, (s * k) % m


def _monomial_in(alg: PetitAlgebra, z) -> AlgebraElem:
    if isinstance(z, Monomial):
        if not z.k < alg.m:
            raise ValueError(f"degree {z.k} out of range for m={alg.m}")
        return z.elem(alg)
    return z


def least_failing_nesting(alg: PetitAlgebra, z: AlgebraElem, limit: int | None = None):
    """Least ``r`` with ``L(z,r) o z != z o L(z,r)``, or ``None`` up to ``limit``."""
    limit = limit or 2 * alg.m
    pw = left_nested_powers(z, limit + 2)
    for r in range(1, limit + 1):
        if petit_mul(pw[r], z) != pw[r + 1]:
            return r
    return None


def monomial_power_formula(alg: PetitAlgebra, z, s: int, require_power_assoc: bool = True) -> AlgebraElem:
    """The closed form of ``(alpha t^k)^s`` in ``S_{t^m - b}``.

    Raises :class:`PowerAssociativityError` when the monomial is not
    power-associative (unless ``require_power_assoc`` is false, in which case
    the formula is still returned; it always equals the left-nested power).
    """
    b = alg.a
    if not isinstance(z, Monomial):
        raise TypeError("monomial_power_formula takes a Monomial")
    if s < 1:
        raise ValueError("s must be at least 1")
    if not z.k < alg.m:
        raise ValueError(f"degree {z.k} out of range for m={alg.m}")
    ctx, sigma, m = alg.ctx, alg.sigma, alg.m
    if require_power_assoc and not power_assoc_condition(ctx, sigma, m, z.k, z.alpha, b):
        elem = z.elem(alg)
        r = least_failing_nesting(alg, elem)
        left = right = None
        if r is not None:
            pw = left_nested_powers(elem, r + 2)
            left, right = petit_mul(pw[r], elem), pw[r + 1]
        raise PowerAssociativityError(
            f"alpha t^{z.k} is not power-associative in {alg!r}"
            + (f"; L(z,{r}) o z != z o L(z,{r})" if r is not None else ""),
            r=r,
            left=left,
            right=right,
        )
    coef, deg = closed_power(ctx, sigma, m, b, z.alpha, z.k, s)
    return alg.monomial(coef, deg)


def bracketing_oracle(z: AlgebraElem, factors: int) -> bool:
    """True iff every bracketing of ``z^n`` agrees for all ``n <= factors``.

    Works size by size: if all bracketings of every smaller size agree, the
    bracketings of size ``n`` are exactly the products ``v_i o v_(n-i)``.
    """
    vals = [None, z]
    for n in range(2, factors + 1):
        first = petit_mul(vals[1], vals[n - 1])
        for i in range(2, n):
            if petit_mul(vals[i], vals[n - i]) != first:
                return False
        vals.append(first)
    return True


def is_power_assoc_monomial(alg: PetitAlgebra, z, mode: str = "criterion") -> bool:
    if not isinstance(z, Monomial):
        raise TypeError("is_power_assoc_monomial takes a Monomial")
    m = alg.m
    if not 1 <= z.k < m:
        raise ValueError(f"k={z.k} must satisfy 1 <= k < m={m}")
    if mode == "criterion":
        return power_assoc_condition(alg.ctx, alg.sigma, m, z.k, z.alpha, alg.a)
    if mode != "oracle":
        raise ValueError(f"unknown mode {mode!r}")
    elem = z.elem(alg)
    limit = 2 * m
    pw = left_nested_powers(elem, limit + 1)
    # least r with r k >= m is the first place a reduction enters
    r = -(-m // z.k)
    if petit_mul(pw[r], elem) != petit_mul(elem, pw[r]):
        return False
    for s in range(1, limit):
        for ell in range(1, limit - s + 1):
            if petit_mul(pw[s], pw[ell]) != pw[s + ell]:
                return False
    return bracketing_oracle(elem, max(ORACLE_FACTORS, 2))


def associator_scan(alg: PetitAlgebra):
    """First basis triple ``(x, y, z)`` with ``(x y) z != x (y z)``, else ``None``."""
    basis = alg.basis()
    for x in basis:
        for y in basis:
            xy = petit_mul(x, y)
            for w in basis:
                if petit_mul(xy, w) != petit_mul(x, petit_mul(y, w)):
                    return x, y, w
    return None


def is_associative_algebra(alg: PetitAlgebra) -> bool:
    """``S_{t^m - a}`` is associative iff ``a`` is sigma-fixed and ``n | m``."""
    a = alg.a
    return in_fixed_field(alg.ctx, alg.sigma, a) and alg.m % alg.n == 0


def keystep_sides(ctx, sigma, m, k, alpha, b, s, ell) -> tuple[int, int]:
    z = (s * k) // m
    res = s * k - z * m
    norm = iter_norm(ctx, sigma ** k, ell, alpha)
    lhs = ctx.frob(norm, sigma.s * res)
    rhs = ctx.frob(norm, sigma.s * s * k)
    for j in range(1, z + 1):
        lhs = ctx.mul(lhs, ctx.frob(b, sigma.s * (s * k - j * m)))
        rhs = ctx.mul(rhs, ctx.frob(b, sigma.s * (s * k - j * m + ell * k)))
    return lhs, rhs


def keystep_identity_check(ctx, sigma, m, k, alpha, b, s, ell) -> bool:
    """Compare both sides of the key twisting identity behind the power formula.

    Requires ``alpha b == sigma^m(alpha) sigma^k(b)`` with ``alpha, b`` nonzero.
    """
    if isinstance(sigma, int):
        sigma = FrobPower(sigma, ctx.r)
    if not alpha or not b:
        raise HypothesisError("alpha and b must be nonzero")
    if not power_assoc_condition(ctx, sigma, m, k, alpha, b):
        raise HypothesisError("alpha b != sigma^m(alpha) sigma^k(b)")
    lhs, rhs = keystep_sides(ctx, sigma, m, k, alpha, b, s, ell)
    return lhs == rhs


def coprime(k: int, m: int) -> bool:
    return gcd(k, m) == 1

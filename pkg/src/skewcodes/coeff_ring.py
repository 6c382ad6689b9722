"""Finite fields F_{p^r} with discrete-log tables and Frobenius automorphisms.

Elements are plain ints in ``range(q)``: the base-``p`` digits of the int are
the coordinates of the element in the polynomial basis ``1, x, ..., x^(r-1)``
of ``F_p[x]/(modulus)``.  So the prime field ``F_p`` is literally
``0, 1, ..., p-1`` and ``4`` in ``F_25`` is the integer 4.

Multiplication goes through exp/log tables of the designated primitive element
``xi``; addition of non-binary fields goes through a Zech logarithm table
(``1 + xi^d = xi^zech[d]``).  All tables are built once in :func:`field_make`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import FieldError

MAX_ORDER = 1 << 20
ZERO_TOKENS = ("-", "z")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FrobPower:
    """The automorphism ``x -> x^(p^s)`` of ``F_{p^r}``; ``s`` is kept mod ``r``."""

    s: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise FieldError("extension degree must be positive")
        object.__setattr__(self, "s", self.s % self.r)

    @property
    def order(self) -> int:
        return self.r // math.gcd(self.r, self.s)

    @property
    def is_identity(self) -> bool:
        return self.s == 0

    def __mul__(self, other: "FrobPower") -> "FrobPower":
        if not isinstance(other, FrobPower):
            return NotImplemented
        if other.r != self.r:
            raise FieldError("cannot compose automorphisms of different fields")
        return FrobPower(self.s + other.s, self.r)

    def __pow__(self, j: int) -> "FrobPower":
        return FrobPower(self.s * j, self.r)

    def inverse(self) -> "FrobPower":
        return FrobPower(-self.s, self.r)


def _polymulmod(a, b, mod, p):
    """Multiply coefficient lists ``a*b`` modulo the monic ``mod`` over F_p."""
    r = len(mod) - 1
    prod = [0] * (2 * r - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, r - 1, -1):
        c = prod[d]
        if c:
            for j in range(r + 1):
                prod[d - r + j] = (prod[d - r + j] - c * mod[j]) % p
    return prod[:r]


def _x_has_full_order(mod, p, r):
    q = p**r
    n = q - 1
    if r == 1:
        root = (-mod[0]) % p
        if root == 0:
            return False
        return all(pow(root, n // ell, p) != 1 for ell in prime_factors(n)) if n > 1 else True

    def power(e):
        result = [1] + [0] * (r - 1)
        base = [0, 1] + [0] * (r - 2)
        while e:
            if e & 1:
                result = _polymulmod(result, base, mod, p)
            base = _polymulmod(base, base, mod, p)
            e >>= 1
        return result

    one = [1] + [0] * (r - 1)
    if power(n) != one:
        return False
    return all(power(n // ell) != one for ell in prime_factors(n))


def find_primitive_modulus(p: int, r: int) -> tuple[int, ...]:
    """Smallest monic degree-``r`` polynomial over F_p whose root generates F_{p^r}^x.

    Candidates ``x^r + c_{r-1} x^{r-1} + ... + c_0`` are ordered by the integer
    ``c_0 + c_1 p + ... + c_{r-1} p^(r-1)``.  Returns ``(c_0, ..., c_{r-1}, 1)``.
    A polynomial whose root has order ``p^r - 1`` is necessarily irreducible.
    """
    for code in range(1, p**r):
        digits = [(code // p**i) % p for i in range(r)]
        if digits[0] == 0:
            continue
        mod = digits + [1]
        if _x_has_full_order(mod, p, r):
            return tuple(mod)
    raise FieldError(f"no primitive polynomial found for p={p}, r={r}")


class FieldCtx:
    """A concrete finite field ``F_{p^r}``.

    Attributes
    ----------
    p, r, q : int
        Characteristic, extension degree and order ``p**r``.
    modulus : tuple of int
        Coefficients ``(c_0, ..., c_{r-1}, 1)`` of the defining polynomial.
    xi : int
        The primitive element (the class of ``x``).
    """

    def __init__(self, p: int, r: int, modulus: tuple[int, ...]):
        self.p = p
        self.r = r
        self.q = p**r
        self.n = self.q - 1
        self.modulus = tuple(modulus)
        self._build_tables()

    def _build_tables(self):
        p, r, q, n = self.p, self.r, self.q, self.n
        mod = self.modulus
        powers = [p**i for i in range(r)]
        exp = [0] * n
        log = [-1] * q
        digits = [1] + [0] * (r - 1)
        for e in range(n):
            v = 0
            for i in range(r):
                v += digits[i] * powers[i]
            exp[e] = v
            log[v] = e
            top = digits[r - 1]
            digits = [0] + digits[: r - 1]
            if top:
                for j in range(r):
                    digits[j] = (digits[j] - top * mod[j]) % p
        if any(log[v] < 0 for v in range(1, q)):
            raise FieldError("modulus root is not primitive")
        zech = [-1] * n
        for d in range(n):
            v = exp[d]
            c0 = v % p
            w = v - c0 + (c0 + 1) % p
            zech[d] = log[w] if w else -1
        self._exp = exp
        self._log = log
        self._zech = zech
        self.xi = exp[1 % n]
        self.minus_one = p - 1

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.r, self.modulus) == (
            other.p,
            other.r,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        return f"FieldCtx({self.p}^{self.r})"

    @property
    def spec(self) -> str:
        return f"{self.p}^{self.r}"

    # -- arithmetic ----------------------------------------------------------
    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if not x:
            return y
        if not y:
            return x
        lx = self._log[x]
        d = self._log[y] - lx
        if d < 0:
            d += self.n
        z = self._zech[d]
        if z < 0:
            return 0
        return self._exp[(lx + z) % self.n]

    def neg(self, x: int) -> int:
        if self.p == 2 or not x:
            return x
        return self.mul(x, self.minus_one)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if not x or not y:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % self.n]

    def inv(self, x: int) -> int:
        if not x:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[(-self._log[x]) % self.n]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if not x:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[x] * e) % self.n]

    def frob(self, x: int, s: int) -> int:
        """``x^(p^s)``; ``s`` is taken mod ``r``."""
        if not x:
            return 0
        return self._exp[(self._log[x] * pow(self.p, s % self.r, self.n)) % self.n]

    def sum(self, xs) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def prod(self, xs) -> int:
        acc = 1
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    # -- representations -----------------------------------------------------
    def elem(self, e: int) -> int:
        """The element ``xi^e``."""
        return self._exp[e % self.n]

    def exponent(self, x: int) -> int:
        if not x:
            raise FieldError("zero has no discrete logarithm")
        return self._log[x]

    def coords(self, x: int) -> list[int]:
        return [(x // self.p**i) % self.p for i in range(self.r)]

    def from_coords(self, cs) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(cs))

    def encode(self, x: int) -> str:
        return "-" if not x else str(self._log[x])

    def decode(self, text) -> int:
        if text is None:
            return 0
        if isinstance(text, int):
            return self.elem(text)
        text = str(text).strip()
        if text in ZERO_TOKENS:
            return 0
        if not re.fullmatch(r"-?\d+", text):
            raise FieldError(f"malformed element encoding {text!r}")
        return self.elem(int(text))

    def to_json(self, x: int):
        return None if not x else self._log[x]

    def units(self) -> range:
        return range(1, self.q)

    def elements(self) -> range:
        return range(self.q)

    def automorphisms(self) -> list[FrobPower]:
        return [FrobPower(j, self.r) for j in range(self.r)]

    def aut(self, s: int) -> FrobPower:
        return FrobPower(s, self.r)

    def fixed_field(self, aut: FrobPower) -> list[int]:
        return [x for x in self.elements() if self.frob(x, aut.s) == x]

    def show_table(self) -> list[dict]:
        rows = [{"exponent": None, "encoding": "-", "coords": [0] * self.r}]
        for e in range(self.n):
            x = self._exp[e]
            rows.append({"exponent": e, "encoding": str(e), "coords": self.coords(x)})
        return rows

    # -- dense tables for the compiled kernels ------------------------------
    @cached_property
    def frob_table(self) -> np.ndarray:
        """``frob_table[j, x] == x^(p^j)`` for ``0 <= j < r``."""
        table = np.zeros((self.r, self.q), dtype=np.int64)
        log = np.asarray(self._log, dtype=np.int64)
        exp = np.asarray(self._exp, dtype=np.int64)
        nz = np.arange(1, self.q)
        for j in range(self.r):
            table[j, nz] = exp[(log[nz] * pow(self.p, j, self.n)) % self.n]
        return table

    @cached_property
    def kernel_tables(self):
        from ._kernels import make_tables

        return make_tables(
            self.p,
            self.q,
            self.r,
            np.asarray(self._exp, dtype=np.int64),
            np.asarray(self._log, dtype=np.int64),
            np.asarray(self._zech, dtype=np.int64),
            self.frob_table,
        )


@lru_cache(maxsize=64)
def _cached_field(p: int, r: int) -> FieldCtx:
    return FieldCtx(p, r, find_primitive_modulus(p, r))


def field_make(p: int, r: int) -> FieldCtx:
    """Build ``F_{p^r}`` with its canonical primitive element.

    Raises :class:`FieldError` for a non-prime ``p``, ``r < 1`` or a field
    larger than ``2**20`` elements.  Contexts are cached and immutable.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if not isinstance(r, int) or r < 1:
        raise FieldError(f"extension degree {r} must be a positive integer")
    if p**r > MAX_ORDER:
        raise FieldError(f"{p}^{r} exceeds the field size cap of 2^20")
    return _cached_field(p, r)


def parse_field_spec(text: str) -> FieldCtx:
    """Parse ``"p^r"`` (or a bare prime ``"p"``) into a field."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*", str(text))
    if not m:
        raise FieldError(f"malformed field spec {text!r}; expected 'p^r'")
    return field_make(int(m.group(1)), int(m.group(2) or 1))


def apply_aut(ctx: FieldCtx, aut: FrobPower, x: int) -> int:
    return ctx.frob(x, aut.s)


def iter_norm(ctx: FieldCtx, aut: FrobPower, i: int, beta: int) -> int:
    """``beta * aut(beta) * ... * aut^(i-1)(beta)``; the empty product is 1."""
    acc = 1
    for j in range(i):
        acc = ctx.mul(acc, ctx.frob(beta, aut.s * j))
    return acc


def norm_relation_check(ctx: FieldCtx, aut: FrobPower, i: int, j: int, beta: int) -> bool:
    """Check ``N_{i+j}(beta) == N_i(beta) * aut^i(N_j(beta))``."""
    lhs = iter_norm(ctx, aut, i + j, beta)
    rhs = ctx.mul(iter_norm(ctx, aut, i, beta), ctx.frob(iter_norm(ctx, aut, j, beta), aut.s * i))
    return lhs == rhs


def in_fixed_field(ctx: FieldCtx, aut: FrobPower, x: int) -> bool:
    return ctx.frob(x, aut.s) == x


def bracket_m_s(p: int, s: int, m: int) -> int:
    """``(p^(s m) - 1) / (p^s - 1)``, the exponent with ``N_m(x) = x^[m]_s``."""
    if m < 1 or s < 1:
        raise ValueError("bracket_m_s needs m >= 1 and s >= 1")
    value = sum(p ** (s * i) for i in range(m))
    if value >= 1 << 128:
        raise OverflowError("[m]_s exceeds the 128-bit range")
    return value

"""Skew constacyclic codes: principal left ideals of ``S_{t^m - a}``.

A code is represented by its monic generator ``g``, a right divisor of
``t^m - a``; its codewords are the coefficient vectors of ``u o g`` with
``deg u < m - deg g``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import _kernels
from .errors import BudgetExceededError
from .homs import DEFAULT_BUDGET, apply_hom
from .linalg import in_rowspace, rank, rref, rowspace_equal
from .petit import PetitAlgebra, petit_mul
from .skew_poly import SkewPoly, sp_right_divmod


def divides_modulus(alg: PetitAlgebra, g: SkewPoly) -> bool:
    return sp_right_divmod(alg.f, g)[1].is_zero()


def right_divisors(alg: PetitAlgebra, d: int, budget: int = DEFAULT_BUDGET) -> list[SkewPoly]:
    """All monic ``g`` of degree ``d`` with ``t^m - a = q g`` for some ``q``."""
    if not 1 <= d < alg.m:
        raise ValueError(f"divisor degree {d} must satisfy 1 <= d < m={alg.m}")
    q = alg.ctx.q
    if q**d > budget:
        raise BudgetExceededError(f"q^d = {q ** d} exceeds the budget {budget}")
    out = []
    for low in itertools.product(range(q), repeat=d):
        g = SkewPoly(alg.ctx, alg.sigma, list(low) + [1])
        if divides_modulus(alg, g):
            out.append(g)
    return out


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple

    @property
    def min_distance(self):
        return next((w for w, c in enumerate(self.counts) if w and c), None)

    @property
    def size(self) -> int:
        return sum(self.counts)


class SkewCode:
    def __init__(self, algebra: PetitAlgebra, generator: SkewPoly):
        if algebra.constacyclic_a is None:
            raise ValueError("codes are defined for moduli t^m - a")
        if not generator.is_monic():
            raise ValueError("generator must be monic")
        if generator.degree >= algebra.m:
            raise ValueError("generator degree must be below m")
        if not divides_modulus(algebra, generator):
            raise ValueError("generator does not right-divide t^m - a")
        self.algebra = algebra
        self.generator = generator
        self.length = algebra.m
        self.dim = algebra.m - generator.degree
        g = algebra.elem(generator.coeffs)
        rows = []
        for i in range(self.dim):
            rows.append(list(petit_mul(algebra.monomial(1, i), g).coeffs))
        self.gen_matrix = rows

    @property
    def ctx(self):
        return self.algebra.ctx

    def contains(self, word) -> bool:
        return in_rowspace(self.ctx, self.gen_matrix, list(word))

    def rank(self) -> int:
        return rank(self.ctx, self.gen_matrix)

    def same_code(self, other: "SkewCode") -> bool:
        return self.algebra == other.algebra and rowspace_equal(self.ctx, self.gen_matrix, other.gen_matrix)

    def params(self, budget: int = DEFAULT_BUDGET) -> tuple:
        return (self.length, self.dim, weight_distribution(self, budget).min_distance)

    def __repr__(self):
        return f"SkewCode({self.algebra!r}, g={self.generator.coeffs}, dim={self.dim})"


def code_from_generator(algebra: PetitAlgebra, g: SkewPoly) -> SkewCode:
    return SkewCode(algebra, g)


def weight_distribution(code: SkewCode, budget: int = DEFAULT_BUDGET) -> WeightDistribution:
    """Exact weight counts by enumerating all ``q^dim`` codewords."""
    if code.ctx.q**code.dim > budget:
        raise BudgetExceededError(f"q^dim = {code.ctx.q ** code.dim} exceeds the budget {budget}")
    counts = _kernels.weight_distribution(code.ctx.kernel_tables, code.gen_matrix, code.length)
    return WeightDistribution(tuple(counts))


def min_distance(code: SkewCode, budget: int = DEFAULT_BUDGET):
    return weight_distribution(code, budget).min_distance


def monic_generator_of_span(ctx, sigma, rows) -> SkewPoly:
    """Monic lowest-degree element of the span of ``rows``.

    Pivoting on columns from the top degree down leaves the row of least
    degree last, already monic.
    """
    m = len(rows[0])
    red, _ = rref(ctx, rows, col_order=range(m - 1, -1, -1))
    return SkewPoly(ctx, sigma, red[-1])


def map_code(spec, code: SkewCode) -> SkewCode:
    """Image of ``code`` under a certified isomorphism (``spec.source`` must be the code's algebra)."""
    if spec.source != code.algebra:
        raise ValueError("spec source is not the code's algebra")
    images = [apply_hom(spec, code.algebra.elem(row)).coeffs for row in code.gen_matrix]
    g = monic_generator_of_span(code.ctx, code.algebra.sigma, images)
    image = SkewCode(spec.target, g)
    if not rowspace_equal(code.ctx, image.gen_matrix, images):
        raise ValueError("image is not the principal ideal of its least element; map is not an isomorphism")
    return image

import pytest

from skewcodes import FrobPower, HypothesisError, field_make, iter_norm
from skewcodes.classify import (
    ClassMode,
    UnionFind,
    associative_sector_equivalence,
    count_formula,
    count_vs_oracle,
    norm_subgroup,
    partition,
    sector_statements,
)
from skewcodes.errors import BudgetExceededError

from conftest import GRID, oracle_field
from oracles import PolyField, cosets

MODES = ["m-sigma-equivalence", "m-sigma-isometry", "equivalence", "isometry"]


def _elem_sets(ctx, report):
    return {frozenset(ctx.elem(e) for e in c) for c in report.classes}


def _refines(fine, coarse):
    return all(any(c <= d for d in coarse) for c in fine)


def test_classmode_parse():
    assert ClassMode.parse("m_sigma_isometry") is ClassMode.M_SIGMA_ISOMETRY
    assert ClassMode.parse(ClassMode.ISOMETRY) is ClassMode.ISOMETRY
    with pytest.raises(ValueError):
        ClassMode.parse("similarity")


def test_union_find_smaller_root():
    uf = UnionFind(range(6))
    uf.union(4, 2)
    uf.union(5, 4)
    assert uf.find(5) == 2
    assert sorted(map(sorted, uf.groups())) == [[0], [1], [2, 4, 5], [3]]


@pytest.mark.parametrize("p,r,s,m", GRID)
def test_equivalence_classes_are_norm_cosets(p, r, s, m):
    ctx = field_make(p, r)
    rep = partition(ctx, FrobPower(s, r), m, "m-sigma-equivalence")
    expected = {frozenset(c) for c in cosets(oracle_field(ctx), s, m)}
    assert _elem_sets(ctx, rep) == expected


@pytest.mark.parametrize("p,r,s,m", GRID)
def test_norm_subgroup_methods_agree(p, r, s, m):
    ctx = field_make(p, r)
    assert norm_subgroup(ctx, s, m, "generator") == norm_subgroup(ctx, s, m, "image")


def test_norm_subgroup_identity_sigma(F9):
    assert norm_subgroup(F9, 0, 2) == frozenset(F9.elem(2 * j) for j in range(4))
    assert norm_subgroup(F9, 0, 2, "image") == norm_subgroup(F9, 0, 2)


@pytest.mark.parametrize("p,r,s,m", GRID)
def test_mode_lattice(p, r, s, m):
    ctx = field_make(p, r)
    reps = {mode: _elem_sets(ctx, partition(ctx, FrobPower(s, r), m, mode)) for mode in MODES}
    assert _refines(reps["m-sigma-equivalence"], reps["m-sigma-isometry"])
    assert _refines(reps["m-sigma-equivalence"], reps["equivalence"])
    assert _refines(reps["m-sigma-isometry"], reps["isometry"])
    assert _refines(reps["equivalence"], reps["isometry"])
    for mode in MODES:
        assert set().union(*reps[mode]) == set(ctx.units())


@pytest.mark.parametrize("p,r,s,m", [g for g in GRID if g[:2] != (2, 4)] + [(2, 3, 1, 3), (2, 4, 2, 3)])
@pytest.mark.parametrize("mode", MODES)
def test_criterion_partition_matches_oracle(p, r, s, m, mode):
    ctx = field_make(p, r)
    sig = FrobPower(s, r)
    assert partition(ctx, sig, m, mode, "criterion").classes == partition(ctx, sig, m, mode, "oracle").classes


def test_criterion_partition_matches_oracle_f16():
    ctx = field_make(2, 4)
    for mode in ("m-sigma-isometry", "isometry"):
        assert partition(ctx, 2, 4, mode, "criterion").classes == partition(ctx, 2, 4, mode, "oracle").classes


def test_identity_sigma_classes_are_unions_of_cosets():
    ctx = field_make(3, 2)
    rep = partition(ctx, 0, 3, "isometry")
    eq = partition(ctx, 0, 3, "m-sigma-equivalence")
    assert _refines(_elem_sets(ctx, eq), _elem_sets(ctx, rep))


@pytest.mark.parametrize("p,r,s,m", [(3, 2, 1, 3), (5, 2, 1, 4), (2, 4, 2, 3)])
def test_classes_independent_of_modulus(p, r, s, m):
    # another primitive modulus gives an isomorphic field; class sizes must match
    ctx = field_make(p, r)
    chosen = tuple(ctx.modulus)
    other = None
    for code in range(p**r - 1, 0, -1):
        mod = [(code // p**i) % p for i in range(r)] + [1]
        if mod[0] and tuple(mod) != chosen and PolyField(p, mod).order(p) == p**r - 1:
            other = PolyField(p, mod)
            break
    assert other is not None
    sizes = sorted(len(c) for c in cosets(other, s, m))
    rep = partition(ctx, FrobPower(s, r), m, "m-sigma-equivalence")
    assert sorted(len(c) for c in rep.classes) == sizes


def test_partition_budget():
    with pytest.raises(BudgetExceededError):
        partition(field_make(2, 13), 1, 2)


def test_partition_flags(F9):
    rep = partition(F9, 1, 4, "m-sigma-isometry")
    inside = [c for c, f in zip(rep.classes, rep.flags) if f["inside_subfield"]]
    assert inside == [[0], [4]]
    assert all(f["associative_sector"] for f in rep.flags if f["inside_subfield"])


def test_count_formula_values():
    f = count_formula(3, 2, 1, 4)
    assert (f["w"], f["N"], f["n_divides_m"]) == (8, 7, True)
    f = count_formula(3, 2, 1, 3)
    assert f["per_case"]["t_divides_A"] == 7
    assert f["corrected"]["t_divides_A"] == 6
    f = count_formula(5, 2, 1, 3)
    assert f["per_case"]["t_divides_A"] == 23
    assert f["corrected"]["t_divides_A"] == 20
    with pytest.raises(HypothesisError):
        count_formula(2, 3, 2, 3)


def test_count_vs_oracle_headline():
    rep = count_vs_oracle(3, 2, 1, 4)
    assert rep.formula_N == 7
    assert rep.oracle_N == 6
    assert not rep.agree
    assert rep.witnesses == [[0], [4]]
    assert rep.per_case_agree


def test_count_vs_oracle_per_case_mismatch():
    for params, stated, right in [((3, 2, 1, 3), 7, 6), ((5, 2, 1, 3), 23, 20)]:
        rep = count_vs_oracle(*params)
        case = rep.per_case["t_divides_A"]
        assert case["formula"] == stated
        assert case["corrected"] == right
        assert case["oracle"] == [right]
        assert not case["match"]
        assert not rep.per_case_agree


@pytest.mark.parametrize("p,r,s", [(2, 2, 1), (3, 2, 1), (5, 2, 1), (2, 4, 2), (2, 4, 1), (2, 3, 1), (7, 2, 1), (3, 3, 1)])
def test_corrected_counts_match_cosets(p, r, s):
    ctx = field_make(p, r)
    sigma = FrobPower(s, r)
    for m in range(2, 6):
        f = count_formula(p, r, s, m)
        for c in cosets(oracle_field(ctx), s, m):
            outside = sum(1 for x in c if x not in {y for y in ctx.units() if ctx.frob(y, s) == y})
            assert outside in set(f["corrected"].values())
        # the coset size is (q-1)/w
        assert len(norm_subgroup(ctx, sigma, m)) * f["w"] == ctx.n


@pytest.mark.parametrize("p,r,s,m", [(3, 2, 1, 2), (3, 2, 1, 4), (2, 4, 2, 4), (5, 2, 1, 2), (2, 2, 1, 4)])
def test_associative_sector_agreement(p, r, s, m):
    ctx = field_make(p, r)
    sigma = FrobPower(s, r)
    fixed = [x for x in ctx.units() if ctx.frob(x, s) == x]
    for a in fixed:
        for b in fixed:
            for k in range(1, m):
                for tau in ctx.automorphisms():
                    for alpha in list(ctx.units())[:: max(1, ctx.n // 6)]:
                        assert sector_statements(ctx, sigma, m, a, b, k, tau, alpha).agree
                associative_sector_equivalence(ctx, sigma, m, a, b, k)


def test_associative_sector_example(F9):
    # t -> t^3 on S_1 with m = 4 is an isometry
    assert associative_sector_equivalence(F9, 1, 4, 1, 1, 3, tau=0, alpha=1)
    # b = 2 gives b^3 = 2, and 1 != N_4(alpha) 2 needs a suitable alpha
    sigma = FrobPower(1, 2)
    want = any(iter_norm(F9, sigma, 4, al) == 2 for al in F9.units())
    assert associative_sector_equivalence(F9, 1, 4, 1, 2, 3) == want


def test_associative_sector_hypotheses(F9):
    with pytest.raises(HypothesisError):
        associative_sector_equivalence(F9, 1, 4, F9.xi, 1, 3)
    with pytest.raises(HypothesisError):
        associative_sector_equivalence(F9, 1, 3, 1, 1, 2)
    with pytest.raises(HypothesisError):
        associative_sector_equivalence(F9, 1, 4, 1, 1, 4)

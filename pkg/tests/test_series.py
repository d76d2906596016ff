"""Symmetric powers, stratum enumeration, the three series and their identities."""

import random
from fractions import Fraction
from itertools import product

import pytest

from curvemotive import (
    ExponentVector,
    RingElement,
    Specialization,
    Stratum,
    TruncatedSeries,
    divisorial_closed_form,
    divisorial_semigroup_stratum_sum,
    enumerate_strata,
    expand,
    expand_totally_rational,
    nhat,
    poincare_divisorial,
    poincare_generalised,
    poincare_generalised_totally_rational,
    semigroup_gf,
    stratum_class,
    sym_power_class,
    v_of,
    w_of,
)

L = RingElement.lefschetz
one = RingElement.one()


def ev(*xs):
    return ExponentVector(xs)


# -- symmetric powers --------------------------------------------------------


def test_sym_power_trivial_cases():
    assert sym_power_class(None, 1, 2, 0) == one
    assert sym_power_class(None, 1, 2, 1) == L() + one - RingElement.integer(2)
    assert sym_power_class("k2", 2, 3, 1) == RingElement.symbol("k2") * L() - 2 * one


def test_sym_power_binomial_example():
    # coefficient of t^2 in (1 - L t)^{-1} (1 - t): L^2 - L
    assert sym_power_class(None, 1, 2, 2) == L(2) - L()


def test_sym_power_no_removed_points():
    # nu = 0: the full projective line, sum of L-powers
    expected = one + L() + L(2) + L(3)
    assert sym_power_class(None, 1, 0, 3) == expected


def test_sym_power_matches_convolution_oracle():
    # coefficient of x^n in the product of the geometric series in (e L x)
    # and the binomial (1-x)^(nu-1), convolved by hand
    from math import comb

    rng = random.Random(11)
    for _ in range(60):
        nu = rng.randint(0, 4)
        n = rng.randint(0, 5)
        degree = rng.choice((1, 2))
        label = "k" if degree > 1 else None
        e = one if degree == 1 else RingElement.symbol("k")
        geometric = [(e * L()) ** k for k in range(n + 1)]
        if nu >= 1:
            binom = [
                RingElement.integer((-1) ** l * comb(nu - 1, l))
                for l in range(nu)
            ]
        else:
            binom = [one] * (n + 1)
        expected = RingElement.zero()
        for k, g_k in enumerate(geometric):
            l = n - k
            if 0 <= l < len(binom):
                expected = expected + g_k * binom[l]
        assert sym_power_class(label, degree, nu, n) == expected


# -- stratum classes ---------------------------------------------------------


def test_stratum_class_examples(cusp):
    assert stratum_class(Stratum.zero(3), cusp) == one
    st = Stratum(pairs=((1, 3),), branches=(), point_mults=(0, 0, 0), pair_mults=((1, 1),))
    assert stratum_class(st, cusp) == L() - one
    st = Stratum(pairs=(), branches=(), point_mults=(0, 0, 1))
    assert stratum_class(st, cusp, "circ") == L() - 2 * one
    assert stratum_class(st, cusp, "bullet") == L() - one
    with pytest.raises(ValueError):
        stratum_class(
            Stratum(pairs=(), branches=(1,), point_mults=(0, 0, 0), branch_mults=((1, 1),)),
            cusp,
            "bullet",
        )


# -- enumeration -------------------------------------------------------------


def naive_strata(g, bound, mode):
    """Nested-loop enumeration: box per variable, then exact filtering."""
    bound = tuple(Fraction(b) for b in bound)
    pairs0 = [site.key for site in g.pairs]
    branch_range = range(1, g.r + 1)
    m = g.m_matrix

    def var_cap(idx):
        # unit of nhat at idx raises exponent coordinate c by m[idx][c]
        caps = []
        for c, b in enumerate(bound):
            col = c if mode == "divisorial" else g.branch(c + 1).attach - 1
            caps.append(b / m[idx][col])
        return int(min(caps))

    found = set()
    pair_subsets = [
        tuple(p for p, keep in zip(pairs0, flags) if keep)
        for flags in product((False, True), repeat=len(pairs0))
    ]
    branch_subsets = (
        [
            tuple(j for j, keep in zip(branch_range, flags) if keep)
            for flags in product((False, True), repeat=g.r)
        ]
        if mode == "full"
        else [()]
    )
    for pairs in pair_subsets:
        for branches in branch_subsets:
            ranges = [range(var_cap(i) + 1) for i in range(g.s)]
            for i1, i2 in pairs:
                ranges.append(range(1, var_cap(i1 - 1) + 1))
                ranges.append(range(1, var_cap(i2 - 1) + 1))
            for j in branches:
                attach = g.branch(j).attach
                ranges.append(range(1, var_cap(attach - 1) + 1))
                ranges.append(range(1, int(max(bound)) + 1))
            for values in product(*ranges):
                point_mults = values[: g.s]
                rest = values[g.s :]
                pair_mults = tuple(
                    (rest[2 * k], rest[2 * k + 1]) for k in range(len(pairs))
                )
                off = 2 * len(pairs)
                branch_mults = tuple(
                    (rest[off + 2 * k], rest[off + 2 * k + 1])
                    for k in range(len(branches))
                )
                st = Stratum(
                    pairs=pairs,
                    branches=branches,
                    point_mults=point_mults,
                    pair_mults=pair_mults,
                    branch_mults=branch_mults,
                )
                exp = (
                    w_of(nhat(st, g), g)
                    if mode == "divisorial"
                    else v_of(st, g)
                )
                if exp.leq(bound):
                    found.add(st)
    return found


@pytest.mark.parametrize("mode", ["full", "divisorial"])
def test_enumeration_matches_naive_oracle(cusp, chain2_h12, mode):
    for g, bound in ((cusp, 7), (chain2_h12, 5)):
        arity = g.r if mode == "full" else g.s
        got = list(enumerate_strata(g, (bound,) * arity, mode=mode))
        assert len(got) == len(set(got)), "strata must be emitted exactly once"
        assert set(got) == naive_strata(g, (bound,) * arity, mode)


def test_enumeration_zero_bound(cusp):
    assert list(enumerate_strata(cusp, (0,), mode="full")) == [Stratum.zero(3)]
    assert list(enumerate_strata(cusp, (0, 0, 0), mode="divisorial")) == [
        Stratum.zero(3)
    ]


def test_enumeration_single_divisorial(single):
    strata = list(enumerate_strata(single, (3,), mode="divisorial"))
    assert sorted(st.point_mults[0] for st in strata) == [0, 1, 2, 3]


def test_enumeration_cusp_excludes_branch_stratum_beyond_bound(cusp):
    strata = list(enumerate_strata(cusp, (6,), mode="full"))
    assert Stratum(pairs=(), branches=(), point_mults=(0, 0, 1)) in strata
    barely = Stratum(
        pairs=(), branches=(1,), point_mults=(0, 0, 0), branch_mults=((1, 1),)
    )
    assert barely not in strata  # v = 7 > 6
    assert barely in enumerate_strata(cusp, (7,), mode="full")


def test_integral_mode_checks_w_not_just_exponents():
    # branch on E1: every branch exponent v is an integer, but w_2 is
    # fractional for odd nhat_2, and those strata carry fractional
    # L-codimensions; strict mode must drop them anyway
    from curvemotive import build

    g = build(
        {
            "centers": [{"prox": []}, {"prox": [1], "h": 2}],
            "branches": [{"attach": 1}],
        }
    )
    literal = poincare_generalised(g, (5,))
    assert all(exp.is_integral for exp in literal.terms)
    assert not literal.is_integral_lattice  # fractional L-powers sneak in
    strict = poincare_generalised(g, (5,), strictness="integral")
    assert strict.skipped_nonintegral > 0
    assert strict.is_integral_lattice


def test_integral_mode_drops_and_counts(chain2_h12):
    literal = list(enumerate_strata(chain2_h12, (4, 6), mode="divisorial"))
    integral = list(
        enumerate_strata(chain2_h12, (4, 6), mode="divisorial", strictness="integral")
    )
    assert len(integral) < len(literal)
    assert all(w_of(nhat(st, chain2_h12), chain2_h12).is_integral for st in integral)
    series = poincare_divisorial(chain2_h12, (4, 6), strictness="integral")
    assert series.skipped_nonintegral == len(literal) - len(integral)


# -- the branch series -------------------------------------------------------


def test_pg_constant_term(cusp, chain2_h12):
    for g in (cusp, chain2_h12):
        series = poincare_generalised(g, (3,) * g.r)
        assert series.coefficient((0,) * g.r) == one


def test_pg_cusp_frozen_low_order(cusp):
    series = poincare_generalised(cusp, (7,))
    assert series.coefficient(ev(0)) == one
    assert series.coefficient(ev(1)) == RingElement.zero()
    assert series.coefficient(ev(2)) == L(-1)
    assert series.coefficient(ev(3)) == L(-2)
    assert series.coefficient(ev(4)) == L(-3)
    assert series.coefficient(ev(5)) == L(-4)
    assert series.coefficient(ev(6)) == L(-5)
    assert series.coefficient(ev(7)) == L(-6)


def test_pg_classical_specialization_is_semigroup(cusp):
    series = poincare_generalised(cusp, (20,))
    spec = Specialization(lefschetz=Fraction(1), default=Fraction(1))
    values = series.specialize(spec)
    support = sorted(int(exp[0]) for exp in values)
    gf = semigroup_gf([2, 3], 20)
    assert support == [k for k, hit in enumerate(gf) if hit]
    assert all(v == 1 for v in values.values())


def test_pg_requires_a_branch():
    from curvemotive import build

    g = build({"centers": [{"prox": []}]})
    with pytest.raises(ValueError):
        poincare_generalised(g, ())


def test_pg_totally_rational_reduction(cusp, satellite5, chain2, chain3):
    for g in (cusp, satellite5, chain2, chain3):
        general = poincare_generalised(g, (10,) * g.r)
        reduced = poincare_generalised_totally_rational(g, (10,) * g.r)
        assert general == reduced


# -- the divisorial series ---------------------------------------------------


def test_pdg_single_blowup_frozen(single):
    series = poincare_divisorial(single, (3,))
    # coefficient at t^n is L^(-n(n+1)/2) (1 + L^-1 + ... + L^-n) shifted by L^n
    assert series.coefficient(ev(0)) == one
    assert series.coefficient(ev(1)) == L(-1) + L(-2)
    assert series.coefficient(ev(2)) == L(-3) + L(-4) + L(-5)
    assert series.coefficient(ev(3)) == L(-6) + L(-7) + L(-8) + L(-9)


def test_pdg_zero_bound_is_one(cusp):
    series = poincare_divisorial(cusp, (0, 0, 0))
    assert series.terms == {ev(0, 0, 0): one}


# -- the extended-semigroup series -------------------------------------------


def test_closed_form_single(single):
    cf = divisorial_closed_form(single)
    assert cf.to_text() == "1 / ((1 - t1)*(1 - L*t1))"
    series = expand(cf, (4,))
    for w in range(5):
        expected = sum((L(k) for k in range(w + 1)), RingElement.zero())
        assert series.coefficient(ev(w)) == expected


def test_closed_form_vs_stratum_sum(corpus):
    for name, g in corpus.items():
        bound = (6,) * g.s
        assert expand(divisorial_closed_form(g), bound) == \
            divisorial_semigroup_stratum_sum(g, bound), name


def test_closed_form_vs_stratum_sum_many_bounds(cusp, chain2_h12):
    # every scalar bound up to 12, plus non-uniform bounds
    cf_chain = divisorial_closed_form(chain2_h12)
    for b in range(13):
        bound = (b, b)
        assert expand(cf_chain, bound) == divisorial_semigroup_stratum_sum(
            chain2_h12, bound
        ), b
    cf_cusp = divisorial_closed_form(cusp)
    for bound in ((4, 6, 12), (1, 2, 3), (12, 0, 5)):
        assert expand(cf_cusp, bound) == divisorial_semigroup_stratum_sum(
            cusp, bound
        ), bound


def test_stratum_sum_zero_bound_is_one(cusp):
    series = divisorial_semigroup_stratum_sum(cusp, (0, 0, 0))
    assert series.terms == {ev(0, 0, 0): one}


def test_closed_form_chain2_h12_frozen(chain2_h12):
    bound = (3, 4)
    series = expand(divisorial_closed_form(chain2_h12), bound)
    e2 = RingElement.symbol("E2")
    es = RingElement.symbol("P(1,2)")
    assert series.coefficient(ev(1, 1)) == L() - one
    assert series.coefficient(ev(1, Fraction(3, 2))) == e2 * L() - one
    assert series.coefficient(ev(2, Fraction(5, 2))) == (
        (L() - one) * (e2 * L() - one) + es * L() - one
    )
    assert series == divisorial_semigroup_stratum_sum(chain2_h12, bound)


def test_totally_rational_closed_form_reduction(cusp, satellite5, chain3):
    for g in (cusp, satellite5, chain3):
        bound = (8,) * g.s
        assert expand(divisorial_closed_form(g), bound) == expand_totally_rational(
            g, bound
        )
    with pytest.raises(ValueError):
        expand_totally_rational(
            __import__("curvemotive").build(
                {"centers": [{"prox": []}, {"prox": [1], "h": 2}]}
            ),
            (2, 2),
        )


def test_cusp_closed_form_first_coefficients(cusp):
    series = expand(divisorial_closed_form(cusp), (4, 6, 12))
    assert series.coefficient(ev(0, 0, 0)) == one
    assert series.coefficient(ev(1, 1, 2)) == L()
    assert series.coefficient(ev(1, 2, 3)) == L()
    # w = (2,2,4) = 2 * row1
    assert series.coefficient(ev(2, 2, 4)) == L(2)


# -- series infrastructure ----------------------------------------------------


def test_series_json_round_trip(cusp, chain2_h12):
    for g, bound in ((cusp, (4, 6, 12)), (chain2_h12, (3, 4))):
        series = expand(divisorial_closed_form(g), bound)
        again = TruncatedSeries.from_json(series.to_json())
        assert again == series
        assert again.to_json() == series.to_json()


def test_series_rendering_orders_terms_graded_lex(single):
    series = poincare_divisorial(single, (2,))
    lines = series.to_text().splitlines()
    assert lines[0].startswith("1:")
    assert lines[1].startswith("t1:")
    assert lines[2].startswith("t1^2:")


def test_workers_do_not_change_results(cusp):
    base = poincare_generalised(cusp, (12,))
    for workers in (2, 8):
        assert poincare_generalised(cusp, (12,), workers=workers) == base
        assert (
            divisorial_semigroup_stratum_sum(cusp, (4, 4, 4), workers=workers)
            == divisorial_semigroup_stratum_sum(cusp, (4, 4, 4))
        )


def test_repeated_runs_identical_text(satellite5):
    a = poincare_divisorial(satellite5, (6,) * 5).to_text()
    b = poincare_divisorial(satellite5, (6,) * 5).to_text()
    assert a == b


def test_two_branch_series(cusp_two_branches):
    g = cusp_two_branches
    series = poincare_generalised(g, (6, 6))
    assert series.coefficient(ev(0, 0)) == one
    assert series == poincare_generalised_totally_rational(g, (6, 6))
    # branch 2 sits on E1, so t2 tracks the multiplicity filtration
    assert series.coefficient(ev(2, 1)) != RingElement.zero()
    naive = naive_strata(g, (6, 6), "full")
    assert set(enumerate_strata(g, (6, 6), mode="full")) == naive


def test_cross_checks_on_random_graphs():
    from conftest import random_graph

    rng = random.Random(20260810)
    exercised_branches = 0
    for _ in range(15):
        g = random_graph(rng, max_centers=5)
        bound = (4,) * g.s
        poincare_divisorial(g, bound)  # dual-path equality asserted inside
        assert expand(divisorial_closed_form(g), bound) == \
            divisorial_semigroup_stratum_sum(g, bound)
        if g.r >= 1:
            exercised_branches += 1
            poincare_generalised(g, (4,) * g.r)
    assert exercised_branches >= 3

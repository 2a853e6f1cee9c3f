"""Acceptance criteria, one test each; the terminal summary prints a PASS/FAIL line per criterion."""
from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import product
from math import comb

import pytest

from ncboolean.anticommutator import anticommutator_boolean, ac_term_table, census, joint_boolean_of_word, oracle_joint_boolean
from ncboolean.cumulants import CumulantSequence, FreeModel, boolean_cumulants_of_sum, free_additive_boolean, joint_moment_free
from ncboolean.density import anticommutator_density, verify_density
from ncboolean.distributions import AtomicDistribution
from ncboolean.errors import DomainError
from ncboolean.partitions import Coloring, SignedTuple, enumerate_nc_colored, vnrp_majorant
from ncboolean.series import RationalSeries, eta_from_boolean, f_series_oracle, solve_anticommutator_general, solve_sum_eta, sqrt

from oracles import catalan, colored_nc_brute, has_vnrp_brute, ll_brute, rand_boolean, rand_model

F = Fraction
R = RationalSeries


def census_from_closed_form(order):
    # 1/2 - sqrt((1-8z)(1-2z-sqrt(1-8z))/(8z)), one spare degree for the division by z
    w = order + 1
    inner = R([1, -2] + [0] * (w - 1)) - sqrt(R([1, -8] + [0] * (w - 1)))
    inner = R(inner.coeffs[1:]) * F(1, 8)
    return list((F(1, 2) - sqrt(R([1, -8] + [0] * (order - 1)) * inner)).coeffs[1:])


@pytest.mark.acceptance(1, "census of ac-friendly partitions matches the generating series (2n <= 14)")
def test_census_exactness():
    start = time.perf_counter()
    assert census(2) == 1 and census(4) == 5
    predicted = census_from_closed_form(7)
    assert predicted[:2] == [1, 5]
    counts = [census(2 * n) for n in range(1, 8)]
    assert counts == predicted
    assert time.perf_counter() - start <= 120


@pytest.mark.acceptance(2, "ac-friendly pairings: Cat(m-1) on 4m points, none on 4m-2 points")
def test_pairing_census():
    for m in (1, 2, 3):
        assert census(4 * m, "pairings") == catalan(m - 1)
        assert census(4 * m - 2, "pairings") == 0


@pytest.mark.acceptance(3, "ac-friendly even-block partitions: 3/(4m-1) C(4m-1, m-1)")
def test_even_block_census():
    got = [census(4 * m, "even-blocks") for m in (1, 2, 3)]
    want = [F(3, 4 * m - 1) * comb(4 * m - 1, m - 1) for m in (1, 2, 3)]
    assert got == want == [1, 3, 15]


@pytest.mark.acceptance(4, "constructive VNRP majorant equals the exhaustive majorant and is unique")
def test_majorant_property_suite():
    start = time.perf_counter()
    rng = random.Random(2024)
    for _ in range(200):
        s = rng.choice((2, 3))
        m = rng.randint(1, 7)
        cols = tuple(rng.randint(1, s) for _ in range(m))
        c = Coloring(cols, s)
        pool = colored_nc_brute(cols)
        assert set(pool) == set(enumerate_nc_colored(m, c))
        vnrp = [t for t in pool if has_vnrp_brute(t, cols)]
        for sigma in pool:
            above = [t for t in vnrp if ll_brute(sigma, t)]
            assert len(above) == 1
            assert vnrp_majorant(sigma, c) == above[0]
    assert time.perf_counter() - start <= 120


@pytest.mark.acceptance(5, "VNRP moment path equals free-cumulant path on all words of length <= 8")
def test_moment_paths_agree():
    words = ["".join(w) for n in range(1, 9) for w in product("ab", repeat=n)]
    for seed in range(50):
        model = rand_model(1000 + seed)
        for w in words:
            assert joint_moment_free(model, w, "vnrp") == joint_moment_free(model, w, "free_cumulant")


@pytest.mark.acceptance(6, "ac-friendly word cumulants equal the products-as-arguments oracle")
def test_word_cumulant_oracle():
    tuples = [SignedTuple(t) for n in range(1, 5) for t in product("1*", repeat=n)]
    for seed in range(20):
        model = rand_model(2000 + seed)
        for e in tuples:
            assert joint_boolean_of_word(model, e) == oracle_joint_boolean(model, e)
    table = ac_term_table("11*")
    assert sorted((t.a_sizes, t.b_sizes) for t in table.terms) == sorted([
        ((1, 1, 1), (3,)),
        ((1, 2), (1, 2)),
        ((1, 2), (1, 2)),
        ((1, 2), (3,)),
        ((3,), (1, 1, 1)),
        ((3,), (1, 2)),
    ])


@pytest.mark.acceptance(7, "solver eta of ab+ba matches closed forms and the partition sum for n <= 7")
def test_named_solver_outputs():
    start = time.perf_counter()
    order = 7
    laws = {
        "half_two": AtomicDistribution.parse("0:1/2,2:1/2"),
        "bernoulli": AtomicDistribution.parse("-1:1/2,1:1/2"),
        "three_point": AtomicDistribution.parse("-sqrt(2):1/4,0:1/2,sqrt(2):1/4"),
    }
    got = {}
    for name, law in laws.items():
        eta = law.eta(2 * order)
        sol = solve_anticommutator_general(eta, eta, order)
        got[name] = list(sol.eta_ac.coeffs[1:])
        beta = CumulantSequence(eta.coeffs[1 : order + 1], "boolean")
        model = FreeModel.pair(beta, beta)
        assert got[name] == [anticommutator_boolean(model, n) for n in range(1, order + 1)]

    # 1 - sqrt((1-8z)(1-2z-sqrt(1-8z))/(2z)) = 2 x the census series
    assert got["half_two"] == [2 * c for c in census_from_closed_form(order)]
    assert got["half_two"][:2] == [2 * 1, 2 * 5]
    assert got["bernoulli"] == [2 * catalan((n - 2) // 2) if n % 2 == 0 else 0 for n in range(1, order + 1)]
    assert got["three_point"] == [
        0 if n % 2 else 2 * F(3, 2 * n - 1) * comb(2 * n - 1, n // 2 - 1) for n in range(1, order + 1)
    ]
    assert got["three_point"][1] == 2 and got["three_point"][3] == 6
    assert time.perf_counter() - start <= 180


def _symmetric(beta):
    return CumulantSequence(tuple(0 if k % 2 else x for k, x in enumerate(beta.values, 1)), "boolean")


@pytest.mark.acceptance(8, "matrix-solver F entries equal the admissible-word oracle to order 8")
def test_f_matrix_oracle():
    models = [rand_model(3000 + seed) for seed in range(10)]
    rng = random.Random(3100)
    symmetric = [FreeModel.pair(_symmetric(rand_boolean(rng, 8)), _symmetric(rand_boolean(rng, 8))) for _ in range(3)]
    for model in models + symmetric:
        sol = solve_anticommutator_general(eta_from_boolean(model.betas[0]), eta_from_boolean(model.betas[1]), 4)
        for M, syms in ((sol.F_a, ("a", "a*")), (sol.F_b, ("b", "b*"))):
            for l in syms:
                for l2 in syms:
                    assert M.entry(l, l2) == f_series_oracle(model, l, l2, 8)
    for model in symmetric:
        sol = solve_anticommutator_general(eta_from_boolean(model.betas[0]), eta_from_boolean(model.betas[1]), 4)
        for M, l in ((sol.F_a, "a"), (sol.F_a, "a*"), (sol.F_b, "b"), (sol.F_b, "b*")):
            assert M.entry(l, l).is_zero()
        assert f_series_oracle(model, "a", "a", 8).is_zero()


@pytest.mark.acceptance(9, "density moments k = 0..6 match series moments within 1e-6; support respected")
def test_density_verification():
    start = time.perf_counter()
    report = verify_density(6, 1e-6)
    for k, quad, exact, err in report.rows:
        assert err <= 1e-6, (k, quad, exact)
    assert report.passed
    for x in (-1.0, 0.0, 8.0, -1.5, 8.5):
        with pytest.raises(DomainError):
            anticommutator_density(x)
    assert time.perf_counter() - start <= 30


@pytest.mark.acceptance(10, "sum eta system equals the depth-parity formula and free additivity")
def test_sum_system():
    for seed in range(20):
        model = rand_model(4000 + seed)
        got = solve_sum_eta(eta_from_boolean(model.betas[0]), eta_from_boolean(model.betas[1]), 8)
        direct = boolean_cumulants_of_sum(model)
        assert list(got.coeffs[1:]) == list(direct.values)
        assert direct == free_additive_boolean(model)

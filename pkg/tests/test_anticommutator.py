from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import prod

import pytest

from ncboolean.anticommutator import (
    ac_term_table,
    anticommutator_boolean,
    anticommutator_boolean_same,
    anticommutator_sequence,
    census,
    census_table,
    joint_boolean_of_word,
    oracle_joint_boolean,
    word_of,
)
from ncboolean.cumulants import CumulantSequence, FreeModel, boolean_to_moments, joint_moment_free
from ncboolean.errors import InputError
from ncboolean.partitions import Partition, SignedTuple, enumerate_ac_friendly, enumerate_nc, is_ac_friendly, kreweras

from oracles import catalan, rand_model

B = lambda *v: CumulantSequence(v, "boolean")  # noqa: E731


def eps_tuples(n):
    return [SignedTuple(t) for t in product("1*", repeat=n)]


def test_small_examples():
    model = rand_model(1)
    ba, bb = model.betas[0].values, model.betas[1].values
    assert joint_boolean_of_word(model, "1") == ba[0] * bb[0]
    assert oracle_joint_boolean(model, "1") == ba[0] * bb[0]
    assert anticommutator_boolean(model, 1) == 2 * ba[0] * bb[0]
    ones = B(*[1] * 6)
    assert anticommutator_boolean(FreeModel.pair(ones, ones), 2) == 10
    assert anticommutator_boolean_same(ones, 1) == 2
    bern = B(0, 1, 0, 0, 0, 0)
    assert anticommutator_boolean(FreeModel.pair(bern, bern), 2) == 2
    assert anticommutator_boolean_same(bern, 3) == 0
    even = B(0, 1, 0, 1, 0, 1)
    assert anticommutator_boolean_same(even, 2) == 2


def test_six_term_table():
    table = ac_term_table("11*")
    assert len(table) == 6
    assert table.size_multiset() == Counter({
        ((1, 1, 1), (3,)): 1,
        ((1, 2), (1, 2)): 2,
        ((1, 2), (3,)): 1,
        ((3,), (1, 1, 1)): 1,
        ((3,), (1, 2)): 1,
    })
    assert all(is_ac_friendly(t.partition) for t in table.terms)
    ones = B(*[1] * 3)
    model = FreeModel.pair(ones, ones)
    assert joint_boolean_of_word(model, "11*") == oracle_joint_boolean(model, "11*") == 6


def test_star_start_swaps_letters():
    model = rand_model(2)
    swapped = FreeModel.pair(model.betas[1], model.betas[0])
    for n in range(1, 5):
        for e in eps_tuples(n):
            if e[0] == "*":
                assert joint_boolean_of_word(model, e) == joint_boolean_of_word(swapped, e.complement())
    assert word_of("*1") == "baab"


@pytest.mark.parametrize("n", range(1, 6))
def test_all_ones_tuple_is_kreweras_formula(n):
    model = rand_model(n)
    ba, bb = model.betas[0].values, model.betas[1].values
    want = sum(
        (prod(ba[len(u) - 1] for u in p.blocks) * prod(bb[len(v) - 1] for v in kreweras(p).blocks) for p in enumerate_nc(n)),
        Fraction(0),
    )
    assert joint_boolean_of_word(model, "1" * n) == want


@pytest.mark.parametrize("seed", range(4))
def test_oracle_and_summation_identity(seed):
    model = rand_model(seed)
    for n in range(1, 5):
        total = Fraction(0)
        for e in eps_tuples(n):
            v = joint_boolean_of_word(model, e)
            assert v == oracle_joint_boolean(model, e)
            total += v
        assert total == anticommutator_boolean(model, n)


@pytest.mark.parametrize("seed", range(4))
def test_swap_symmetry_and_same_law(seed):
    model = rand_model(seed)
    swapped = FreeModel.pair(model.betas[1], model.betas[0])
    for n in range(1, 6):
        assert anticommutator_boolean(model, n) == anticommutator_boolean(swapped, n)
    same = FreeModel.pair(model.betas[0], model.betas[0])
    for n in range(1, 6):
        assert anticommutator_boolean(same, n) == anticommutator_boolean_same(model.betas[0], n)


@pytest.mark.parametrize("seed", range(2))
def test_moments_of_anticommutator(seed):
    model = rand_model(seed)
    moms = boolean_to_moments(anticommutator_sequence(model, 4)).values
    for n in range(1, 5):
        direct = sum((joint_moment_free(model, "".join(w)) for w in product(("ab", "ba"), repeat=n)), Fraction(0))
        assert moms[n - 1] == direct


def test_census_examples():
    assert census(2) == 1 and census(4) == 5 and census(6) == 22
    assert census(4, "pairings") == 1
    assert census(8, "even-blocks") == 3
    assert [census(4 * m - 2, "pairings") for m in (1, 2, 3)] == [0, 0, 0]
    with pytest.raises(InputError):
        census(4, "odd")
    with pytest.raises(InputError):
        census(18)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_pairings_are_doublings(m):
    doubled = set()
    for p in enumerate_nc(2 * m):
        if all(len(b) == 2 for b in p.blocks) and (1, 2 * m) in p.blocks:
            blocks = []
            for i, j in p.blocks:
                blocks += [(2 * i - 1, 2 * j), (2 * i, 2 * j - 1)]
            doubled.add(Partition(blocks, 4 * m))
    pairings = {p for p in enumerate_ac_friendly(4 * m) if all(len(b) == 2 for b in p.blocks)}
    assert pairings == doubled
    assert len(doubled) == catalan(m - 1)


def test_census_table_export():
    t = census_table([2, 4], ["all", "pairings"])
    assert t.to_csv() == "two_n,filter,count\n2,all,1\n2,pairings,0\n4,all,5\n4,pairings,1\n"
    assert t.to_json()[2] == {"two_n": 4, "filter": "all", "count": 5}


def test_guards():
    model = rand_model(0, order=3)
    with pytest.raises(InputError):
        anticommutator_boolean(model, 4)
    with pytest.raises(InputError):
        anticommutator_boolean(model, 0)
    with pytest.raises(InputError):
        joint_boolean_of_word(rand_model(0, s=3), "1")
    with pytest.raises(InputError):
        anticommutator_boolean_same(B(1, 2), 3)
    with pytest.raises(InputError):
        joint_boolean_of_word(model, "12")

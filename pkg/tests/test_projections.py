from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncboolean.errors import InputError, PreconditionError, StructureError
from ncboolean.partitions import (
    BlockProjection,
    Coloring,
    Partition,
    enumerate_interval,
    enumerate_nc,
    enumerate_nc_colored,
    has_vnrp,
    ll_leq,
    nesting,
    partition_from_projection,
    projection_from_coarsening,
    projection_from_marked,
    special_blocks,
    vnrp_majorant,
)

from oracles import colored_nc_brute, has_vnrp_brute, ll_brute

P = Partition.parse


def test_ll_examples():
    p = P("{{1,4},{2,3}}")
    assert ll_leq(p, p)
    assert ll_leq(p, Partition.one(4))
    assert not ll_leq(P("{{1,2},{3,4}}"), Partition.one(4))
    assert ll_leq(P("{{1},{2},{3}}"), P("{{1},{2},{3}}"))
    assert not ll_leq(Partition.one(3), Partition.zero(3))


@pytest.mark.parametrize("n", range(1, 7))
def test_ll_matches_bruteforce(n):
    ps = enumerate_nc(n)
    for p in ps:
        for q in ps:
            assert ll_leq(p, q) == ll_brute(p, q)


def test_special_blocks_examples():
    p = P("{{1,4},{2,3}}")
    assert special_blocks(p, Partition.one(4)) == (0,)
    assert special_blocks(p, p) == (0, 1)
    with pytest.raises(PreconditionError):
        special_blocks(P("{{1,2},{3,4}}"), Partition.one(4))


def test_projection_examples():
    p = P("{{1,6},{2,3},{4,5}}")
    phi = projection_from_marked(p, {0})
    assert phi.image == (0, 0, 0) and phi.range() == (0,)
    assert partition_from_projection(phi) == Partition.one(6)
    phi = projection_from_marked(p, {0, 2})
    assert partition_from_projection(phi) == P("{{1,2,3,6},{4,5}}")
    with pytest.raises(PreconditionError):
        projection_from_marked(p, {1})
    with pytest.raises(InputError):
        projection_from_marked(p, {0, 7})


def test_invalid_projections_rejected():
    p = P("{{1,4},{2,3}}")
    with pytest.raises(StructureError):
        BlockProjection(p, (1, 1))  # not extensive
    q = P("{{1,6},{2,5},{3,4}}")
    with pytest.raises(StructureError):
        BlockProjection(q, (0, 2, 2))  # inner block mapped onto a nested one
    with pytest.raises(StructureError):
        BlockProjection(P("{{1,3},{2,4}}"), (0, 1))
    with pytest.raises(InputError):
        BlockProjection(p, (0,))


def test_projection_to_non_idempotent_image_rejected():
    q = P("{{1,6},{2,5},{3,4}}")
    with pytest.raises(StructureError):
        BlockProjection(q, (0, 0, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_upper_ideal_is_indexed_by_marked_sets(n):
    # {q : p << q} is in bijection with subsets of inner blocks
    ps = enumerate_nc(n)
    for p in ps:
        info = nesting(p)
        inner = [k for k in range(len(p)) if info.parent[k] is not None]
        seen = set()
        for r in range(len(inner) + 1):
            for extra in combinations(inner, r):
                phi = projection_from_marked(p, set(info.outer) | set(extra))
                q = partition_from_projection(phi)
                assert ll_leq(p, q)
                assert projection_from_coarsening(p, q) == phi
                assert set(special_blocks(p, q)) == set(phi.range())
                seen.add(q)
        assert len(seen) == 2 ** len(inner)
        if n <= 6:
            assert seen == {q for q in ps if ll_leq(p, q)}


def _maximal(pool):
    return {p for p in pool if not any(q != p and ll_leq(p, q) for q in pool)}


@pytest.mark.parametrize("n", range(1, 8))
def test_maximal_elements_are_interval(n):
    assert _maximal(enumerate_nc(n)) == set(enumerate_interval(n))


colour_words = st.lists(st.integers(1, 2), min_size=1, max_size=7)


@settings(max_examples=80, deadline=None)
@given(colour_words)
def test_vnrp_maximal_elements(cols):
    c = Coloring(tuple(cols))
    pool = enumerate_nc_colored(len(cols), c)
    vnrp = {p for p in pool if has_vnrp(p, c)}
    assert vnrp == {p for p in colored_nc_brute(cols) if has_vnrp_brute(p, cols)}
    assert _maximal(pool) == vnrp


@settings(max_examples=80, deadline=None)
@given(colour_words)
def test_majorant_is_unique_vnrp_above(cols):
    c = Coloring(tuple(cols))
    pool = enumerate_nc_colored(len(cols), c)
    vnrp = [t for t in pool if has_vnrp(t, c)]
    for p in pool:
        tau = vnrp_majorant(p, c)
        assert tau in pool and has_vnrp(tau, c) and ll_leq(p, tau)
        assert [t for t in vnrp if ll_leq(p, t)] == [tau]


def test_majorant_examples_and_guards():
    c = Coloring((1, 2, 2, 1))
    assert vnrp_majorant(P("{{1,4},{2},{3}}"), c) == P("{{1,4},{2},{3}}")
    c = Coloring((1, 1, 1, 1))
    assert vnrp_majorant(P("{{1,4},{2,3}}"), c) == Partition.one(4)
    with pytest.raises(InputError):
        vnrp_majorant(Partition.one(2), Coloring((1, 2)))
    with pytest.raises(InputError):
        has_vnrp(Partition.one(2), Coloring((1, 2)))
    with pytest.raises(StructureError):
        vnrp_majorant(P("{{1,3},{2,4}}"), Coloring((1, 1, 1, 1)))

import pytest

from spiderfree.checks import is_colouring, is_cvc, is_fvs, is_ifvs, is_matching_cut
from spiderfree.errors import CapacityError, ValidationError
from spiderfree.generators import complete, cycle, path, petersen, random_subcubic, star
from spiderfree.graph import Graph, disjoint_union, subdivide
from spiderfree.oracles import (OracleCaps, k_colouring, oracle_chromatic, oracle_has_matching_cut,
                                oracle_min_cvc, oracle_min_fvs, oracle_min_ifvs)
from spiderfree.search import cycle_branch, hub_branch

from conftest import connected_upto, graphs_upto

TWO_TRIANGLES = disjoint_union(cycle(3), cycle(3))


@pytest.mark.parametrize("g, size", [(cycle(5), 1), (complete(4), 2), (TWO_TRIANGLES, 2), (path(4), 0)])
def test_min_fvs(g, size):
    res = oracle_min_fvs(g)
    assert len(res) == size and is_fvs(g, res)


def test_min_ifvs_examples():
    assert oracle_min_ifvs(complete(4)) is None
    assert len(oracle_min_ifvs(cycle(4))) == 1
    res = oracle_min_ifvs(subdivide(complete(4), 2))
    assert len(res) == 2 == len(oracle_min_fvs(complete(4)))


def test_min_cvc_examples():
    assert oracle_min_cvc(path(3)) == frozenset({1})
    assert len(oracle_min_cvc(cycle(4))) == 3
    assert oracle_min_cvc(disjoint_union(path(2), path(2))) is None
    assert oracle_min_cvc(disjoint_union(path(3), Graph(2))) == frozenset({1})


def test_min_cvc_required():
    res = oracle_min_cvc(path(5), required=[0])
    assert 0 in res and is_cvc(path(5), res)


@pytest.mark.parametrize("g, chi", [(complete(4), 4), (cycle(5), 3), (cycle(6), 2), (star(3), 2),
                                    (Graph(3), 1), (petersen(), 3)])
def test_chromatic(g, chi):
    k, col = oracle_chromatic(g, with_colouring=True)
    assert k == chi and is_colouring(g, col, k)
    assert k_colouring(g, k - 1) is None or k == 1


def test_matching_cut_examples():
    bridged = disjoint_union(cycle(4), cycle(4)).add_edges([(0, 4)])
    cut = oracle_has_matching_cut(bridged)
    assert cut is not None and is_matching_cut(bridged, cut)
    assert oracle_has_matching_cut(complete(4)) is None
    cut = oracle_has_matching_cut(cycle(4))
    assert len(cut) == 2 and is_matching_cut(cycle(4), cut)
    with pytest.raises(ValidationError):
        oracle_has_matching_cut(TWO_TRIANGLES)


def test_caps():
    small = OracleCaps(subset=5, branch=6, chromatic=5, matching_cut=5)
    with pytest.raises(CapacityError):
        oracle_min_fvs(cycle(7), small)
    with pytest.raises(CapacityError):
        oracle_min_cvc(cycle(6), caps=small)
    with pytest.raises(CapacityError):
        oracle_chromatic(cycle(6), small)
    with pytest.raises(CapacityError):
        oracle_has_matching_cut(cycle(6), small)


def test_witnesses_and_ifvs_vs_fvs_exhaustive():
    for g in graphs_upto(6):
        f = oracle_min_fvs(g)
        i = oracle_min_ifvs(g)
        assert is_fvs(g, f)
        if i is not None:
            assert is_ifvs(g, i) and len(i) >= len(f)


def test_branching_engines_match_bitmask():
    for g in connected_upto(7):
        f = len(oracle_min_fvs(g))
        assert len(cycle_branch(g)) == f == len(hub_branch(g))
        i = oracle_min_ifvs(g)
        for eng in (cycle_branch, hub_branch):
            res = eng(g, independent=True)
            assert (res is None) == (i is None)
            if res is not None:
                assert len(res) == len(i) and is_ifvs(g, res)


@pytest.mark.parametrize("seed", range(6))
def test_branch_route_matches_bitmask_route(seed):
    g = random_subcubic(18, seed)
    small = OracleCaps(subset=10)
    assert len(oracle_min_fvs(g, small)) == len(oracle_min_fvs(g))
    a, b = oracle_min_ifvs(g, small), oracle_min_ifvs(g)
    assert (a is None) == (b is None) and (a is None or len(a) == len(b))

import pytest
from hypothesis import given, settings, strategies as st

from spiderfree.blocks import CactusClass, cactus_classify, cactus_cycles, is_very_nice_cactus
from spiderfree.checks import is_fvs, is_ifvs
from spiderfree.errors import ValidationError
from spiderfree.generators import complete, cycle, path, petersen, random_nice_cactus, random_subcubic, theta
from spiderfree.graph import Graph
from spiderfree.ifvs import (Outcome, TransformState, complete_ifvs, make_nice_cactus, min_fvs_exact,
                             min_ifvs_subcubic, normalize_degree3)
from spiderfree.oracles import oracle_min_fvs


def _pipeline(g):
    f = normalize_degree3(g, min_fvs_exact(g))
    return make_nice_cactus(TransformState(g, f))


def test_min_fvs_exact_examples():
    assert len(min_fvs_exact(complete(4))) == 2
    assert min_fvs_exact(path(6)) == frozenset()
    g = random_nice_cactus(5, seed=3, very_nice=True)
    assert len(min_fvs_exact(g)) == len(cactus_cycles(g)) == 5


def test_normalize_pendant_triangle():
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])
    assert normalize_degree3(g, {1}) == frozenset({0})


def test_normalize_identity_on_degree3():
    g = petersen()
    f = min_fvs_exact(g)
    assert normalize_degree3(g, f) == f


def test_normalize_theta():
    # one internal vertex alone leaves a cycle, so start from one on each of two paths
    g = theta(2, 3, 1)
    res = normalize_degree3(g, {3, 5})
    assert res and res <= {0, 1} and is_fvs(g, res)
    with pytest.raises(ValidationError):
        normalize_degree3(g, {3})


def test_normalize_rejects_cycles_and_non_fvs():
    with pytest.raises(ValidationError):
        normalize_degree3(cycle(5), {0})
    with pytest.raises(ValidationError):
        normalize_degree3(theta(1, 1, 1), set())


def test_make_nice_cactus_k4_minus_edge_with_triangles():
    # K4 minus the edge 2-3, and a triangle hanging from each of 2 and 3
    g = Graph(10, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 5), (5, 6), (6, 4),
                   (3, 7), (7, 8), (8, 9), (9, 7)])
    st_ = _pipeline(g)
    st_.check()
    h, _ = st_.rest()
    assert cactus_classify(h) >= CactusClass.NICE_CACTUS


def test_make_nice_cactus_noop_on_nice_cactus():
    g = Graph(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)])
    st_ = _pipeline(g)
    assert st_.j == frozenset() and st_.steps == ()


def test_make_nice_cactus_diamond_with_pendants():
    g = Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 5)])
    st_ = _pipeline(g)
    assert len(st_.j) == 1


def test_complete_ifvs_central_cycle():
    # central C5; three of its vertices lead via a 1-vertex path to a triangle
    edges = [(i, (i + 1) % 5) for i in range(5)]
    nxt = 5
    for hub in (0, 1, 2):
        a, b, c, d = nxt, nxt + 1, nxt + 2, nxt + 3
        edges += [(hub, a), (a, b), (b, c), (c, d), (d, b)]
        nxt += 4
    g = Graph(nxt, edges)
    f = normalize_degree3(g, min_fvs_exact(g))
    res = complete_ifvs(TransformState(g, f))
    assert res.outcome is Outcome.SOLUTION and res.case == "free-cycle-vertex"
    assert res.size == 4 and is_ifvs(g, res.vertices)


def test_complete_ifvs_acyclic_returns_j():
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    st_ = TransformState(g, frozenset({0, 2}), frozenset({0}))
    # H = g - {0} is a path, so the answer is J
    assert complete_ifvs(st_).vertices == frozenset({0})


def test_k4_and_small_cases():
    assert min_ifvs_subcubic(complete(4)).outcome is Outcome.NO_IFVS_K4
    assert min_ifvs_subcubic(cycle(6)).size == 1
    assert min_ifvs_subcubic(path(5)).vertices == frozenset()


def test_petersen():
    g = petersen()
    res = min_ifvs_subcubic(g)
    assert res.size == len(oracle_min_fvs(g)) and res.degree3_only
    assert is_ifvs(g, res.vertices)


def test_very_nice_cactus_case():
    g = random_nice_cactus(4, seed=11, very_nice=True)
    res = min_ifvs_subcubic(g)
    assert res.size == 4 and res.degree3_only is False and is_ifvs(g, res.vertices)


def test_rejects_bad_input():
    with pytest.raises(ValidationError):
        min_ifvs_subcubic(complete(5))
    with pytest.raises(ValidationError):
        min_ifvs_subcubic(Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_exhaustive_small(subcubic10):
    for g in subcubic10:
        if g.n > 8:
            continue
        res = min_ifvs_subcubic(g)
        if res.outcome is Outcome.NO_IFVS_K4:
            continue
        assert res.size == len(oracle_min_fvs(g)) and is_ifvs(g, res.vertices)
        assert res.degree3_only == (not is_very_nice_cactus(g))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(4, 40), seed=st.integers(0, 2**32), extra=st.floats(0.0, 1.0))
def test_random_subcubic_matches_oracle(n, seed, extra):
    g = random_subcubic(n, seed, extra=extra)
    if not g.is_connected():
        return
    res = min_ifvs_subcubic(g)
    if res.outcome is Outcome.NO_IFVS_K4:
        assert g.n == 4
        return
    assert is_ifvs(g, res.vertices)
    assert res.size == len(oracle_min_fvs(g))

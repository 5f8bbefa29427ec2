import pytest
from hypothesis import given, settings, strategies as st

from spiderfree.blocks import bridges_and_blocks
from spiderfree.checks import is_colouring, is_ifvs
from spiderfree.errors import ValidationError
from spiderfree.generators import complete, cycle, path, petersen, random_composite, spider, star, theta
from spiderfree.graph import Graph, disjoint_union
from spiderfree.meta import (Complexity, PartKind, ProblemKind, brooks_colouring, check_structure_theorem,
                             classify_h, decompose_ct, solve, treedepth_bound_linear, treedepth_bound_quadratic)
from spiderfree.oracles import oracle_chromatic, oracle_min_ifvs


def bridged(a: Graph, b: Graph, u: int = 0, v: int = 0) -> Graph:
    return disjoint_union(a, b).add_edges([(u, a.n + v)])


TRI_BRIDGE = bridged(cycle(3), cycle(3))


def test_problem_kind():
    assert ProblemKind("Coloring", 3).name == "colouring"
    with pytest.raises(ValidationError):
        ProblemKind("matchingcut", 2)
    with pytest.raises(ValidationError):
        ProblemKind("colouring", 0)
    with pytest.raises(ValidationError):
        ProblemKind("vertexcover")


def test_decompose_subcubic_single_c_part():
    inst = decompose_ct(petersen())
    assert len(inst.parts) == 1 and inst.parts[0].kind is PartKind.C and inst.parts[0].graph.n == 10


def test_decompose_two_k5():
    inst = decompose_ct(bridged(complete(5), complete(5)))
    assert [p.kind for p in inst.parts] == [PartKind.T] and not inst.connecting_bridges


def test_decompose_k5_and_subcubic():
    g = bridged(complete(5), theta(1, 1, 1), 0, 2)
    inst = decompose_ct(g)
    assert sorted(p.kind.value for p in inst.parts) == ["C", "T"]
    assert len(inst.connecting_bridges) == 1
    t = next(p for p in inst.parts if p.kind is PartKind.T)
    assert t.treedepth.exact and t.treedepth.value == 5


def test_solve_fvs_two_triangles():
    rep = solve("fvs", TRI_BRIDGE)
    assert rep.value == 2 and rep.validation


def test_solve_colouring_two_c5():
    rep = solve("colouring", bridged(cycle(5), cycle(5)), k=3)
    assert rep.decision and rep.value == 3 and is_colouring(bridged(cycle(5), cycle(5)), rep.witness, 3)


def test_solve_ifvs_cactus_bridge_subcubic():
    cactus = bridged(cycle(4), cycle(3), 1, 1)
    g = bridged(cactus, theta(1, 2, 2), 0, 2)
    rep = solve("ifvs", g)
    assert rep.validation and not rep.flags
    assert rep.value == len(oracle_min_ifvs(g)) and is_ifvs(g, rep.witness)


def test_solve_budget_semantics():
    assert solve("fvs", TRI_BRIDGE, k=2).decision is True
    assert solve("fvs", TRI_BRIDGE, k=1).decision is False
    assert solve("colouring", complete(4), k=3).decision is False


def test_solve_cvc_rules():
    g = bridged(cycle(4), cycle(4))
    rep = solve("cvc", g)
    for u, v in bridges_and_blocks(g).proper_bridges:
        assert u in rep.witness and v in rep.witness
    assert solve("cvc", disjoint_union(path(2), path(2))).decision is False
    assert solve("cvc", disjoint_union(path(3), Graph(2))).value == 1
    assert solve("cvc", path(2)).value == 1


def test_solve_matching_cut_rules():
    rep = solve("matchingcut", TRI_BRIDGE)
    assert rep.decision and rep.witness == [(0, 3)]
    assert solve("matchingcut", complete(4)).decision is False
    with pytest.raises(ValidationError):
        solve("matchingcut", disjoint_union(cycle(3), cycle(3)))


def test_disconnected_fvs_componentwise():
    g = disjoint_union(complete(4), cycle(5), path(3))
    assert solve("fvs", g).value == 3
    assert solve("ifvs", g).decision is False


def test_brooks_colouring():
    assert max(brooks_colouring(complete(4))) == 3
    for g in (petersen(), cycle(7), theta(1, 2, 3), path(4)):
        col = brooks_colouring(g)
        assert col is None or (is_colouring(g, col) and max(col) + 1 == oracle_chromatic(g))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_composites_validate(seed):
    g = random_composite(14, seed)
    for p in ("fvs", "ifvs", "colouring", "matchingcut"):
        rep = solve(p, g)
        assert rep.validation is not False


def test_structure_bounds():
    assert treedepth_bound_quadratic(1, 1) == 56 and treedepth_bound_linear(3) == 8


def test_structure_k5():
    rep = check_structure_theorem(complete(5))
    assert not rep.free_s11qr and not rep.premise_quadratic and rep.holds_quadratic


def test_structure_star_with_tail():
    g = Graph(9, [(0, i) for i in range(1, 5)] + [(0, 5), (5, 6), (6, 7), (7, 8)])
    rep = check_structure_theorem(g, 1, 3)
    assert not rep.free_s111r and not rep.premise_linear and rep.holds_linear


def test_structure_premise_holds():
    # K5 has only five vertices, so it cannot contain the six-vertex S_{1,1,1,2}
    rep = check_structure_theorem(complete(5), 1, 2)
    assert rep.premise_quadratic and rep.premise_linear
    assert rep.treedepth == 5 and rep.holds_quadratic and rep.holds_linear


@pytest.mark.parametrize("h, expect", [
    (path(6), {p: "PolynomialTime" for p in ("fvs", "ifvs", "cvc", "matchingcut", "colouring")}),
    (cycle(4), {p: "NPComplete" for p in ("fvs", "ifvs", "cvc", "matchingcut", "colouring")}),
    (spider(2, 2, 2, 2), {"fvs": "NPComplete", "ifvs": "NPComplete", "colouring": "NPComplete",
                          "cvc": "Open", "matchingcut": "Open"}),
    (spider(1, 1, 3, 2), {p: "PolynomialTime" for p in ("fvs", "ifvs", "cvc", "matchingcut", "colouring")}),
    (star(5), {p: "NPComplete" for p in ("fvs", "ifvs", "cvc", "matchingcut", "colouring")}),
])
def test_classify_h(h, expect):
    assert classify_h(h) == expect


def test_classify_h_never_both():
    from spiderfree.enumeration import connected_graphs
    for n in range(1, 7):
        for h in connected_graphs(n):
            res = classify_h(h)
            assert set(res.values()) <= {c.value for c in Complexity}

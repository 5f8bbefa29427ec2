import pytest

from spiderfree.blocks import CactusClass, bridges_and_blocks, cactus_classify, is_quasi_bridgeless
from spiderfree.enumeration import canonical_form
from spiderfree.errors import GraphParseError, ValidationError
from spiderfree.generators import complete, cycle, path, spider, star
from spiderfree.graph import Graph, connected_components, disjoint_union, parse_graph, subdivide
from spiderfree.treedepth import longest_path_length, treedepth_exact

from conftest import graphs_upto


def test_parse_path():
    g = parse_graph("3\n0 1\n1 2")
    assert (g.n, g.m) == (3, 2)
    assert g.sorted_edges() == [(0, 1), (1, 2)]


def test_parse_k4_comments_and_duplicates():
    g = parse_graph("# k4\n4\n0 1\n1 2\n2 3\n3 0\n0 2\n1 3\n1 0\n")
    assert g == complete(4)


def test_parse_errors():
    with pytest.raises(ValidationError):
        parse_graph("2\n0 0")
    with pytest.raises(GraphParseError) as exc:
        parse_graph("3\n0 1\n1 x")
    assert exc.value.line == 3
    with pytest.raises(GraphParseError):
        parse_graph("2\n0 5")


def test_text_round_trip():
    g = spider(2, 1, 3, 1)
    assert parse_graph(g.to_text()) == g


def test_components():
    g = disjoint_union(path(3), cycle(3))
    assert sorted(len(back) for _, back in connected_components(g)) == [3, 3]
    assert len(connected_components(cycle(5))) == 1
    assert [len(b) for _, b in connected_components(Graph(4))] == [1, 1, 1, 1]


def test_bridges_examples():
    d = bridges_and_blocks(path(3))
    assert sorted(d.bridges) == [(0, 1), (1, 2)] and d.proper_bridges == []
    two = disjoint_union(cycle(3), cycle(3)).add_edges([(0, 3)])
    d = bridges_and_blocks(two)
    assert d.bridges == [(0, 3)] and d.proper_bridges == [(0, 3)]
    d = bridges_and_blocks(cycle(5))
    assert d.bridges == [] and len(d.blocks) == 1
    assert not is_quasi_bridgeless(two) and is_quasi_bridgeless(path(3))


def _bridges_by_definition(g):
    base = len(g.component_sets())
    return sorted(e for e in g.sorted_edges() if len(g.remove_edges([e]).component_sets()) > base)


def test_bridges_exhaustive():
    for g in graphs_upto(7):
        d = bridges_and_blocks(g)
        assert sorted(d.bridges) == _bridges_by_definition(g)
        counted = sorted(e for be in d.block_edges for e in be)
        assert counted == g.sorted_edges()


@pytest.mark.parametrize("g, expected", [
    (cycle(4), CactusClass.VERY_NICE_CACTUS),
    (Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]), CactusClass.CACTUS),
    (complete(4), CactusClass.NOT_CACTUS),
    (Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]), CactusClass.VERY_NICE_CACTUS),
    (path(4), CactusClass.NICE_CACTUS),
])
def test_cactus_classify(g, expected):
    assert cactus_classify(g) == expected


def test_cactus_classify_disconnected():
    with pytest.raises(ValidationError):
        cactus_classify(disjoint_union(cycle(3), cycle(3)))


def test_subdivide_examples():
    assert canonical_form(subdivide(cycle(3), 1)) == canonical_form(cycle(6))
    g = subdivide(complete(4), 2)
    assert (g.n, g.m) == (16, 18)
    assert canonical_form(subdivide(path(2), 3)) == canonical_form(path(5))


def test_spider_generators():
    assert canonical_form(spider(1, 1, 1, 1)) == canonical_form(star(4))
    g = spider(2, 2, 2, 2)
    assert g.n == 9 and g.max_degree() == 4
    assert star(5).degree(0) == 5
    with pytest.raises(ValidationError):
        spider(1, 0, 1, 1)


@pytest.mark.parametrize("g, td", [(Graph(1), 1), (path(7), 3), (complete(4), 4), (cycle(5), 4), (star(4), 2)])
def test_treedepth_examples(g, td):
    assert treedepth_exact(g) == td


@pytest.mark.parametrize("g, lp", [(cycle(5), 4), (complete(4), 3), (star(4), 2)])
def test_longest_path_examples(g, lp):
    assert longest_path_length(g) == lp


def test_treedepth_vs_longest_path_exhaustive():
    # td is sandwiched between td(longest path) and its vertex count
    for g in graphs_upto(7):
        if g.n == 0:
            continue
        td, lp = treedepth_exact(g), longest_path_length(g)
        assert lp + 1 >= td
        assert td >= (lp + 1).bit_length()

import pytest

from spiderfree.blocks import is_very_nice_cactus
from spiderfree.enumeration import IsoSet, all_graphs, canonical_form, connected_graphs, very_nice_cacti
from spiderfree.generators import cycle, petersen
from spiderfree.graph import Graph

# OEIS A001349 (connected graphs) and A000088 (all graphs)
CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


@pytest.mark.parametrize("n", sorted(CONNECTED))
def test_connected_counts(n):
    assert len(connected_graphs(n)) == CONNECTED[n]


@pytest.mark.parametrize("n", sorted(ALL))
def test_all_counts(n):
    assert len(all_graphs(n)) == ALL[n]


def test_canonical_form_is_invariant():
    g = petersen()
    perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4]
    assert canonical_form(g.relabel(perm)) == canonical_form(g)
    assert canonical_form(cycle(6)) != canonical_form(Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_isoset_dedups():
    s = IsoSet()
    assert s.add(cycle(5)) and not s.add(cycle(5).relabel([4, 2, 0, 3, 1]))
    assert len(s.graphs) == 1


def test_very_nice_cacti_are_very_nice():
    cacti = very_nice_cacti(9)
    assert cacti and all(is_very_nice_cactus(g) for g in cacti)
    assert len({canonical_form(g) for g in cacti}) == len(cacti)

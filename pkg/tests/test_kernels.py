"""The compiled kernels and their plain-Python originals must agree."""

import numpy as np
import pytest

from spiderfree import _accel, kernels
from spiderfree.generators import random_composite, random_subcubic

from conftest import connected_upto

py = _accel.python_impl


def _cases():
    out = list(connected_upto(5))[::3]
    out += [random_subcubic(9, s) for s in range(4)] + [random_composite(10, s) for s in range(4)]
    return out


@pytest.mark.parametrize("independent", [False, True])
def test_min_feedback_set(independent):
    for g in _cases():
        eu, ev = g.edge_array[:, 0].copy(), g.edge_array[:, 1].copy()
        args = (g.masks, eu, ev, g.n, independent, 0)
        assert int(kernels.min_feedback_set(*args)) == int(py(kernels.min_feedback_set)(*args))


def test_connected_cover_and_matching_cut():
    for g in _cases():
        eu, ev = g.edge_array[:, 0].copy(), g.edge_array[:, 1].copy()
        args = (g.masks, eu, ev, g.n, 0)
        assert int(kernels.min_connected_cover(*args)) == int(py(kernels.min_connected_cover)(*args))
        assert int(kernels.matching_cut_side(g.masks, g.n)) == int(py(kernels.matching_cut_side)(g.masks, g.n))


def test_treedepth_and_longest_path():
    for g in _cases():
        a = kernels.treedepth_table(g.masks, g.n)
        b = py(kernels.treedepth_table)(g.masks, g.n)
        assert np.array_equal(np.asarray(a), np.asarray(b))
        assert int(kernels.longest_path_edges(g.masks, g.n)) == int(py(kernels.longest_path_edges)(g.masks, g.n))


def test_flag_parsing():
    assert isinstance(_accel.ENABLED, bool)
    assert _accel.ENABLED == (_accel.numba is not None and not _accel.DISABLED)


def test_env_flag_selects_fallback():
    import os
    import subprocess
    import sys
    code = ("from spiderfree import _accel\n"
            "from spiderfree.generators import petersen\n"
            "from spiderfree.oracles import oracle_min_fvs\n"
            "print(_accel.ENABLED, sorted(oracle_min_fvs(petersen())))")
    env = dict(os.environ, SPIDERFREE_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    from spiderfree.generators import petersen
    from spiderfree.oracles import oracle_min_fvs
    assert out.stdout.strip() == f"False {sorted(oracle_min_fvs(petersen()))}"

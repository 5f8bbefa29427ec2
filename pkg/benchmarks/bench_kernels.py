"""Compiled (numba) kernels versus their plain-Python originals.

Per-kernel timings run in-process through ``python_impl``; ``--end-to-end``
additionally times a small oracle workload in two subprocesses, one with
SPIDERFREE_DISABLE_NUMBA=1.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--end-to-end]
"""

import argparse
import os
import subprocess
import sys
import time

from spiderfree import _accel, kernels
from spiderfree.generators import petersen, random_composite, random_subcubic

WORKLOAD = """
import time
from spiderfree.generators import random_composite
from spiderfree.oracles import oracle_min_fvs, oracle_min_cvc, oracle_has_matching_cut
t = time.perf_counter()
for s in range(30):
    g = random_composite(13, s)
    oracle_min_fvs(g); oracle_min_cvc(g); oracle_has_matching_cut(g)
print(time.perf_counter() - t)
"""


def _ends(g):
    return g.edge_array[:, 0].copy(), g.edge_array[:, 1].copy()


def cases():
    g1, g2, g3 = petersen(), random_subcubic(14, 1), random_composite(13, 4)
    out = []
    for name, g in (("petersen", g1), ("subcubic14", g2), ("composite13", g3)):
        eu, ev = _ends(g)
        out += [
            (f"min_feedback_set[{name}]", kernels.min_feedback_set, (g.masks, eu, ev, g.n, False, 0)),
            (f"min_connected_cover[{name}]", kernels.min_connected_cover, (g.masks, eu, ev, g.n, 0)),
            (f"matching_cut_side[{name}]", kernels.matching_cut_side, (g.masks, g.n)),
        ]
    out.append(("treedepth_table[petersen]", kernels.treedepth_table, (g1.masks, g1.n)))
    out.append(("longest_path_edges[subcubic14]", kernels.longest_path_edges, (g2.masks, g2.n)))
    return out


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--end-to-end", action="store_true")
    args = ap.parse_args(argv)
    print(f"numba enabled: {_accel.ENABLED}")
    print(f"{'kernel':40s} {'numba s':>10s} {'python s':>10s} {'speedup':>9s}")
    for name, fn, fargs in cases():
        fn(*fargs)  # compile outside the timing
        fast = best_of(fn, fargs, args.repeat)
        slow = best_of(_accel.python_impl(fn), fargs, 1)
        print(f"{name:40s} {fast:10.4f} {slow:10.4f} {slow / max(fast, 1e-9):8.1f}x")
    if args.end_to_end:
        for flag in ("0", "1"):
            env = dict(os.environ, SPIDERFREE_DISABLE_NUMBA=flag)
            res = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
            print(f"end-to-end oracle workload, SPIDERFREE_DISABLE_NUMBA={flag}: {float(res.stdout):.2f}s")


if __name__ == "__main__":
    main()

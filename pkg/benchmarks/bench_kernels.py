"""Compare the numba kernels with their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N] [--end-to-end]

Kernel timings call both implementations directly.  ``--end-to-end`` also
runs a census in two subprocesses, one with ``SPGAMES_DISABLE_NUMBA=1``.
"""
import argparse
import itertools
import os
import subprocess
import sys
import time

import numpy as np

from spgames import _kernels as K
from spgames.census import _perms, _subset_table, families


def best_of(fn, repeat):
    fn()  # compile / warm caches
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def workloads(rng):
    faces = rng.integers(1, 1 << 20, size=1500, dtype=np.uint64)
    n = 40
    adj = np.zeros(n, dtype=np.uint64)
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < 0.7:
            adj[i] |= np.uint64(1 << j)
            adj[j] |= np.uint64(1 << i)
    perms = _perms(5)
    fams = np.array(list(families(5, 2)), dtype=np.uint64)
    table = _subset_table(perms)
    labels = np.arange(32, dtype=np.uint64)
    return [
        ("maximal (1500 faces)", K.maximal_nb, K.maximal_np, (faces,)),
        ("link (1500 faces)", K.link_nb, K.link_np, (np.sort(K.maximal_nb(faces)), 3)),
        ("max_cliques (40 nodes, p=0.7)", K.max_cliques_nb, K.max_cliques_np, (adj,)),
        (f"set_codes ({fams.size} families, 120 perms)", K.set_codes_nb, K.set_codes_np, (fams, table)),
        ("orbit_min (32 labels, 120 perms)", K.orbit_min_nb, K.orbit_min_np, (labels, perms)),
    ]


def end_to_end(args):
    code = "from spgames.census import run_census; import time; t=time.perf_counter(); run_census(6, 1); print(time.perf_counter()-t)"
    for flag in ("0", "1"):
        env = dict(os.environ, SPGAMES_DISABLE_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        label = "numpy" if flag == "1" else "numba"
        print(f"census 6x1 ({label}): {float(out.stdout):.3f}s")


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--end-to-end", action="store_true")
    args = p.parse_args()
    if not K.HAVE_NUMBA:
        sys.exit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':44s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, fast, slow, inputs in workloads(rng):
        a, b = fast(*inputs), slow(*inputs)
        if not np.array_equal(np.sort(np.asarray(a)), np.sort(np.asarray(b))):
            sys.exit(f"{name}: numba and numpy disagree")
        tf = best_of(lambda: fast(*inputs), args.repeat)
        ts = best_of(lambda: slow(*inputs), args.repeat)
        print(f"{name:44s} {tf * 1e3:9.3f}ms {ts * 1e3:9.3f}ms {ts / tf:7.1f}x")
    if args.end_to_end:
        end_to_end(args)


if __name__ == "__main__":
    main()

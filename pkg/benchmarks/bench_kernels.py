"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both paths are called explicitly with ``use_numba``, so the environment
switch does not matter here; without numba only the numpy column is shown.
"""

import argparse
import time

import numpy as np

from folbkit import _kernels as K
from folbkit import families
from folbkit._accel import HAVE_NUMBA
from folbkit.corpus import random_connected
from folbkit.metric import build_metric


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    q6 = families.hypercube(6)
    g40 = random_connected(40, rng, 0.08)
    g12 = random_connected(12, rng, 0.3)
    m6, m40, m12 = build_metric(q6), build_metric(g40), build_metric(g12)
    r12 = m12.betweenness()
    c6 = families.cycle(6)
    c6d = K.apsp(c6.adj, use_numba=False)
    return [
        ("apsp Q6", lambda u: K.apsp(q6.adj, use_numba=u)),
        ("apsp random n=40", lambda u: K.apsp(g40.adj, use_numba=u)),
        ("four-point Q6", lambda u: K.four_point(m6.dist, use_numba=u)),
        ("four-point random n=40", lambda u: K.four_point(m40.dist, use_numba=u)),
        ("axioms IB4-IB7 n=12", lambda u: [K.axiom_witness(r12, k, use_numba=u) for k in (4, 5, 6, 7)]),
        ("isometric C6 in Q6", lambda u: K.embed(q6.adj, m6.dist, c6.adj, c6d, True, use_numba=u)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    rows = []
    for name, fn in cases():
        if HAVE_NUMBA:
            fn(True)  # compile
        t_np = best_of(lambda: fn(False), args.repeat)
        t_nb = best_of(lambda: fn(True), args.repeat) if HAVE_NUMBA else float("nan")
        rows.append((name, t_np, t_nb))
    print(f"{'kernel':<26}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, a, b in rows:
        print(f"{name:<26}{a * 1e3:>12.2f}{b * 1e3:>12.2f}{a / b:>10.1f}")


if __name__ == "__main__":
    main()

"""Compare the numba and numpy kernel backends.

Each backend runs in its own interpreter (the backend is fixed at import
time by ``GMFORGE_KERNEL``).  Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

CASES = ("rref 200x200", "rref 400x600", "groebner G(1,4)", "image E'")


def _time(fn, repeat):
    fn()  # warm up (numba compilation)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_cases(repeat: int) -> dict:
    import numpy as np

    from gmforge import _kernels
    from gmforge.grass import pluecker_ideal
    from gmforge.ideals import Ideal
    from gmforge.recipes import build_edge_surface

    p = 31991
    rng = np.random.default_rng(0)
    A1 = rng.integers(0, p, size=(200, 200), dtype=np.int64)
    A2 = rng.integers(0, p, size=(400, 600), dtype=np.int64)
    G = pluecker_ideal(4, p)

    def grass():
        Ideal(G.ring, G.gens).groebner()

    out = {
        "backend": _kernels.BACKEND,
        "rref 200x200": _time(lambda: _kernels.rref(A1.copy(), p), repeat),
        "rref 400x600": _time(lambda: _kernels.rref(A2.copy(), p), repeat),
        "groebner G(1,4)": _time(grass, repeat),
        "image E'": _time(lambda: build_edge_surface(1, p).surface.degree(), repeat),
    }
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.worker:
        print(json.dumps(run_cases(args.repeat)))
        return 0
    results = {}
    for backend in ("numba", "numpy"):
        env = dict(os.environ, GMFORGE_KERNEL=backend)
        proc = subprocess.run(
            [sys.executable, __file__, "--worker", "--repeat", str(args.repeat)],
            env=env, capture_output=True, text=True, check=True,
        )
        results[backend] = json.loads(proc.stdout.strip().splitlines()[-1])
    print(f"{'case':18} {'numba [s]':>10} {'numpy [s]':>10} {'speedup':>8}")
    for case in CASES:
        a, b = results["numba"][case], results["numpy"][case]
        print(f"{case:18} {a:10.4f} {b:10.4f} {b / a:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

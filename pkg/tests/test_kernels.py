"""The numba and numpy elimination kernels agree."""

import os
import subprocess
import sys

import numpy as np

from gmforge import _kernels

P = 31991


def test_rref_backends_agree():
    rng = np.random.default_rng(0)
    for shape in ((20, 30), (40, 25), (33, 33)):
        A = rng.integers(0, P, size=shape, dtype=np.int64)
        A[5] = (A[1] * 3 + A[2]) % P
        B, C = A.copy(), A.copy()
        pa = _kernels.rref(B, P)
        pb = _kernels._np_rref(C, P)
        assert list(pa) == list(pb)
        assert np.array_equal(B, C)


def test_rank_and_nullspace():
    rng = np.random.default_rng(1)
    A = rng.integers(0, P, size=(6, 10), dtype=np.int64)
    A[4] = (A[0] + 2 * A[3]) % P
    assert _kernels.rank(A, P) == 5
    K = _kernels.nullspace(A, P)
    assert K.shape[0] == 5
    assert not ((A @ K.T) % P).any()


def test_solve_affine():
    rng = np.random.default_rng(2)
    A = rng.integers(0, P, size=(5, 5), dtype=np.int64)
    x = rng.integers(0, P, size=5, dtype=np.int64)
    b = (A @ x) % P
    sol = _kernels.solve_affine(A, b, P)
    assert np.array_equal((A @ np.asarray(sol)) % P, b)


def test_backend_flag():
    assert _kernels.BACKEND in ("numba", "numpy")


def _basis_under(backend):
    code = (
        "from gmforge.grass import pluecker_ideal\n"
        "from gmforge.recipes import build_edge_surface\n"
        "import random\n"
        "G = pluecker_ideal(4, 31991).groebner()\n"
        "E = build_edge_surface(random.Random(1)).surface.ideal.groebner()\n"
        "print('|'.join(str(g) for g in G + E))\n"
    )
    env = dict(os.environ, GMFORGE_KERNEL=backend)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_groebner_identical_across_backends():
    assert _basis_under("numba") == _basis_under("numpy")

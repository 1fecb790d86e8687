"""Modular linear-algebra kernels.

Two implementations of every kernel live here: a numba-compiled one and a
plain numpy one.  The numba path is used when numba imports and the
environment variable ``GMFORGE_KERNEL`` is not set to ``numpy``.  Both paths
return identical results; ``benchmarks/bench_kernels.py`` compares them.

All matrices hold int64 residues in ``[0, p)`` with ``p < 2**31``, so a
product of two residues fits in a signed 64-bit word.
"""

import os

import numpy as np

BACKEND = "numpy"
_REQUESTED = os.environ.get("GMFORGE_KERNEL", "numba").strip().lower()

if _REQUESTED != "numpy":
    try:
        from numba import njit

        BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba is a declared dependency
        BACKEND = "numpy"


# --------------------------------------------------------------------------
# numpy implementations
# --------------------------------------------------------------------------


def _np_rref(A, p):
    """Reduced row echelon form of ``A`` over F_p, in place.

    Returns the list of pivot columns; rows past ``len(pivots)`` are zero.
    """
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = (A[r, c:] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            A[rows, c:] = (A[rows, c:] + (p - col[rows])[:, None] * A[r, c:][None, :]) % p
        pivots.append(c)
        r += 1
    return pivots


def _np_reduce_rows(
    red_ptr, red_idx, red_val, piv_of_col, row_ptr, row_idx, row_val, ncols, p
):
    """Reduce sparse rows against sparse monic reducers.

    ``piv_of_col[c]`` is the reducer whose leading column is ``c`` (or -1).
    Reducer entries are sorted by column, leading entry first and equal to 1.
    Returns a dense ``(nrows, ncols)`` array of remainders.
    """
    nrows = len(row_ptr) - 1
    out = np.zeros((nrows, ncols), dtype=np.int64)
    for i in range(nrows):
        out[i, row_idx[row_ptr[i]:row_ptr[i + 1]]] = row_val[row_ptr[i]:row_ptr[i + 1]]
    if nrows == 0:
        return out
    for c in range(ncols):
        k = piv_of_col[c]
        if k < 0:
            continue
        coef = out[:, c]
        hit = np.nonzero(coef)[0]
        if hit.size == 0:
            continue
        s, e = red_ptr[k], red_ptr[k + 1]
        cols = red_idx[s:e]
        vals = red_val[s:e]
        m = (p - coef[hit]) % p
        out[np.ix_(hit, cols)] = (out[np.ix_(hit, cols)] + m[:, None] * vals[None, :]) % p
    return out


# --------------------------------------------------------------------------
# numba implementations
# --------------------------------------------------------------------------

if BACKEND == "numba":

    @njit(cache=True)
    def _nb_rref(A, p):
        nrows, ncols = A.shape
        pivots = np.empty(min(nrows, ncols), dtype=np.int64)
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            k = -1
            for i in range(r, nrows):
                if A[i, c] != 0:
                    k = i
                    break
            if k < 0:
                continue
            if k != r:
                for j in range(c, ncols):
                    t = A[r, j]
                    A[r, j] = A[k, j]
                    A[k, j] = t
            # modular inverse by exponentiation
            base = A[r, c]
            e = p - 2
            inv = 1
            while e > 0:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for j in range(c, ncols):
                A[r, j] = (A[r, j] * inv) % p
            for i in range(nrows):
                if i == r:
                    continue
                f = A[i, c]
                if f == 0:
                    continue
                f = p - f
                for j in range(c, ncols):
                    a = A[r, j]
                    if a != 0:
                        A[i, j] = (A[i, j] + f * a) % p
            pivots[r] = c
            r += 1
        return pivots[:r]

    @njit(cache=True)
    def _nb_reduce_rows(
        red_ptr, red_idx, red_val, piv_of_col, row_ptr, row_idx, row_val, ncols, p
    ):
        nrows = len(row_ptr) - 1
        out = np.zeros((nrows, ncols), dtype=np.int64)
        for i in range(nrows):
            acc = out[i]
            for t in range(row_ptr[i], row_ptr[i + 1]):
                acc[row_idx[t]] = row_val[t]
            for c in range(ncols):
                v = acc[c]
                if v == 0:
                    continue
                k = piv_of_col[c]
                if k < 0:
                    continue
                f = p - v
                for t in range(red_ptr[k], red_ptr[k + 1]):
                    j = red_idx[t]
                    acc[j] = (acc[j] + f * red_val[t]) % p
        return out


def rref(A, p):
    """Row-reduce ``A`` (int64, residues mod ``p``) in place; return pivot columns."""
    if A.size == 0:
        return []
    if BACKEND == "numba":
        return [int(c) for c in _nb_rref(A, np.int64(p))]
    return _np_rref(A, p)


def reduce_rows(red_ptr, red_idx, red_val, piv_of_col, row_ptr, row_idx, row_val, ncols, p):
    if BACKEND == "numba":
        return _nb_reduce_rows(
            red_ptr, red_idx, red_val, piv_of_col, row_ptr, row_idx, row_val,
            np.int64(ncols), np.int64(p),
        )
    return _np_reduce_rows(
        red_ptr, red_idx, red_val, piv_of_col, row_ptr, row_idx, row_val, ncols, p
    )


def rank(A, p):
    return len(rref(np.array(A, dtype=np.int64, copy=True), p))


def nullspace(A, p):
    """Basis (as rows) of the right kernel ``{v : A v = 0}`` over F_p."""
    A = np.array(A, dtype=np.int64, copy=True) % p
    nrows, ncols = A.shape
    piv = rref(A, p)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, c in enumerate(piv):
            basis[i, c] = (-A[r, f]) % p
    return basis


def left_nullspace(A, p):
    """Basis (as rows) of ``{w : w A = 0}``."""
    return nullspace(np.asarray(A).T, p)


def solve_affine(A, b, p):
    """One solution of ``A x = b`` over F_p, or None."""
    A = np.asarray(A, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1) % p
    M = np.hstack([A, b])
    piv = rref(M, p)
    ncols = A.shape[1]
    if piv and piv[-1] == ncols:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for r, c in enumerate(piv):
        x[c] = M[r, ncols]
    return x

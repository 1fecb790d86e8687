"""Buchberger's algorithm with Gebauer-Moeller pruning over F_p.

Pairs are selected by sugar degree.  All pairs sharing the minimal sugar are
reduced together: their S-polynomial halves, plus every multiple of a basis
element needed to reduce them, are laid out as rows of one sparse matrix
and eliminated by :mod:`gmforge._kernels`.  For homogeneous input this is
the normal strategy, and stopping after degree ``d`` yields a basis that is
exact in all degrees ``<= d``.

Polynomials travel through this module as ``(mons, coefs)`` list pairs with
``mons`` packed and sorted descending in the ring order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .arith import Polynomial, Ring

log = logging.getLogger(__name__)


@dataclass
class GBStats:
    batches: int = 0
    pairs: int = 0
    pruned: int = 0
    rows: int = 0
    max_cols: int = 0
    truncated_at: int | None = None
    degrees: list = field(default_factory=list)


class _Elem:
    __slots__ = ("lt", "mons", "coefs", "sugar")

    def __init__(self, mons, coefs, sugar):
        self.lt = mons[0]
        self.mons = mons
        self.coefs = coefs
        self.sugar = sugar


def _normalize(ring: Ring, termdict: dict):
    """Sorted, monic ``(mons, coefs)`` from a term dictionary (non-empty)."""
    mons = sorted(termdict, key=ring.key, reverse=True)
    p = ring.prime
    inv = pow(termdict[mons[0]], -1, p)
    return mons, [(termdict[m] * inv) % p for m in mons]


def _find_reducer(ring, lts, m):
    divides = ring.divides
    for lt, k in lts:
        if divides(lt, m):
            return k
    return -1


def _matrix_reduce(ring: Ring, G: list, lts: list, rows: list, reducers: dict, stats=None):
    """Reduce ``rows`` by multiples of basis elements.

    ``rows`` are ``(mons, coefs)`` pairs; ``reducers`` maps a pivot monomial to
    ``(shift, elem index)`` and is completed here by symbolic preprocessing.
    Returns the reduced rows, echelonized, as ``(mons, coefs)`` (monic).
    """
    p = ring.prime
    seen = set()
    todo = []
    for mons, _ in rows:
        for m in mons:
            if m not in seen:
                seen.add(m)
                todo.append(m)
    for m, (u, k) in reducers.items():
        for t in G[k].mons:
            mm = t + u
            if mm not in seen:
                seen.add(mm)
                todo.append(mm)
    while todo:
        m = todo.pop()
        if m in reducers:
            continue
        k = _find_reducer(ring, lts, m)
        if k < 0:
            continue
        u = m - G[k].lt
        reducers[m] = (u, k)
        for t in G[k].mons:
            mm = t + u
            if mm not in seen:
                seen.add(mm)
                todo.append(mm)

    cols = sorted(seen, key=ring.key, reverse=True)
    col_of = {m: i for i, m in enumerate(cols)}
    ncols = len(cols)

    piv_of_col = np.full(ncols, -1, dtype=np.int64)
    red_ptr = [0]
    red_idx: list[int] = []
    red_val: list[int] = []
    for r, (m, (u, k)) in enumerate(reducers.items()):
        piv_of_col[col_of[m]] = r
        e = G[k]
        red_idx.extend(col_of[t + u] for t in e.mons)
        red_val.extend(e.coefs)
        red_ptr.append(len(red_idx))

    row_ptr = [0]
    row_idx: list[int] = []
    row_val: list[int] = []
    for mons, coefs in rows:
        row_idx.extend(col_of[m] for m in mons)
        row_val.extend(coefs)
        row_ptr.append(len(row_idx))

    free = np.nonzero(piv_of_col < 0)[0]
    out = _kernels.reduce_rows(
        np.asarray(red_ptr, dtype=np.int64),
        np.asarray(red_idx, dtype=np.int64),
        np.asarray(red_val, dtype=np.int64),
        piv_of_col,
        np.asarray(row_ptr, dtype=np.int64),
        np.asarray(row_idx, dtype=np.int64),
        np.asarray(row_val, dtype=np.int64),
        ncols,
        p,
    )
    if stats is not None:
        stats.rows += len(rows) + len(reducers)
        stats.max_cols = max(stats.max_cols, ncols)
    A = np.ascontiguousarray(out[:, free])
    nz = np.nonzero(A.any(axis=1))[0]
    if nz.size == 0:
        return []
    A = np.ascontiguousarray(A[nz])
    piv = _kernels.rref(A, p)
    result = []
    freecols = [cols[c] for c in free]
    for r in range(len(piv)):
        row = A[r]
        idx = np.nonzero(row)[0]
        result.append(([freecols[j] for j in idx], [int(row[j]) for j in idx]))
    return result


def _update(ring: Ring, G: list, active: list, pairs: list, h: int, stats):
    """Gebauer-Moeller update of the active basis and the pair list."""
    lcm = ring.lcm
    divides = ring.divides
    coprime = ring.coprime
    mh = G[h].lt

    C = [(g, lcm(mh, G[g].lt)) for g in active]
    D = []
    while C:
        g, lg = C.pop()
        if coprime(mh, G[g].lt):
            D.append((g, lg))
            continue
        if any(divides(l2, lg) for _, l2 in C) or any(divides(l2, lg) for _, l2 in D):
            stats.pruned += 1
            continue
        D.append((g, lg))
    E = []
    for g, lg in D:
        if coprime(mh, G[g].lt):
            stats.pruned += 1
        else:
            E.append((g, lg))

    kept = []
    for pr in pairs:
        _, lg, i, j = pr
        if (
            divides(mh, lg)
            and lcm(G[i].lt, mh) != lg
            and lcm(G[j].lt, mh) != lg
        ):
            stats.pruned += 1
            continue
        kept.append(pr)
    for g, lg in E:
        sg = ring.mdeg(lg)
        sugar = max(G[g].sugar + sg - ring.mdeg(G[g].lt), G[h].sugar + sg - ring.mdeg(mh))
        kept.append((sugar, lg, g, h))
    pairs[:] = kept
    active[:] = [g for g in active if not divides(mh, G[g].lt)] + [h]


def buchberger(polys, ring: Ring, degree_limit: int | None = None, stats: GBStats | None = None):
    """Reduced Groebner basis of the ideal generated by ``polys``.

    ``polys`` are term dictionaries or :class:`Polynomial` objects in ``ring``.
    With ``degree_limit`` (homogeneous input only) the result is a truncated
    basis, exact in degrees up to the limit.  Returns a list of
    ``(mons, coefs)``, sorted by increasing leading monomial.
    """
    if stats is None:
        stats = GBStats()
    p = ring.prime
    inputs = []
    for f in polys:
        t = f.termdict if isinstance(f, Polynomial) else f
        t = {m: c % p for m, c in t.items() if c % p}
        if not t:
            continue
        if 0 in t and len(t) == 1:
            return [([0], [1])]
        mons, coefs = _normalize(ring, t)
        sugar = max(ring.mdeg(m) for m in mons)
        inputs.append((sugar, mons, coefs))

    G: list[_Elem] = []
    active: list[int] = []
    pairs: list = []
    while pairs or inputs:
        d = min([pr[0] for pr in pairs] + [s for s, _, _ in inputs])
        if degree_limit is not None and d > degree_limit:
            stats.truncated_at = degree_limit
            break
        batch = [pr for pr in pairs if pr[0] == d]
        pairs[:] = [pr for pr in pairs if pr[0] != d]
        new_inputs = [(m, c) for s, m, c in inputs if s == d]
        inputs = [x for x in inputs if x[0] != d]
        stats.batches += 1
        stats.pairs += len(batch)

        reducers: dict = {}
        row_keys = set()
        rows = []
        for _, lg, i, j in batch:
            ui, uj = lg - G[i].lt, lg - G[j].lt
            if lg not in reducers:
                reducers[lg] = (ui, i)
            elif (ui, i) not in row_keys and reducers[lg] != (ui, i):
                row_keys.add((ui, i))
                rows.append(([t + ui for t in G[i].mons], G[i].coefs))
            if (uj, j) not in row_keys and reducers[lg] != (uj, j):
                row_keys.add((uj, j))
                rows.append(([t + uj for t in G[j].mons], G[j].coefs))
        rows.extend(new_inputs)
        lts = [(G[g].lt, g) for g in active]
        new = _matrix_reduce(ring, G, lts, rows, reducers, stats)
        if any(mons == [0] for mons, _ in new):
            return [([0], [1])]
        stats.degrees.append((d, len(new)))
        for mons, coefs in new:
            G.append(_Elem(mons, coefs, d))
            _update(ring, G, active, pairs, len(G) - 1, stats)

    return _interreduce(ring, [G[g] for g in active], stats)


def _interreduce(ring: Ring, elems: list, stats=None):
    """Minimal, fully tail-reduced basis from a minimal basis."""
    divides = ring.divides
    elems = [
        e for e in elems
        if not any(o is not e and divides(o.lt, e.lt) for o in elems)
    ]
    elems.sort(key=lambda e: ring.key(e.lt))
    if not elems:
        return []
    tails = [(e.mons[1:], e.coefs[1:]) for e in elems]
    nfs = normal_forms_raw(ring, elems, tails, stats)
    out = []
    for e, (mons, coefs) in zip(elems, nfs):
        out.append(([e.lt] + mons, [1] + coefs))
    return out


def normal_forms_raw(ring: Ring, elems: list, polys: list, stats=None):
    """Normal forms of ``(mons, coefs)`` polys modulo basis elements ``elems``.

    Unlike :func:`_matrix_reduce`, rows are kept apart (no mutual echelon).
    """
    G = list(elems)
    lts = [(e.lt, k) for k, e in enumerate(G)]
    p = ring.prime
    reducers: dict = {}
    seen = set()
    todo = []
    for mons, _ in polys:
        for m in mons:
            if m not in seen:
                seen.add(m)
                todo.append(m)
    while todo:
        m = todo.pop()
        k = _find_reducer(ring, lts, m)
        if k < 0:
            continue
        u = m - G[k].lt
        reducers[m] = (u, k)
        for t in G[k].mons:
            mm = t + u
            if mm not in seen:
                seen.add(mm)
                todo.append(mm)
    if not reducers:
        return [(list(m), list(c)) for m, c in polys]
    cols = sorted(seen, key=ring.key, reverse=True)
    col_of = {m: i for i, m in enumerate(cols)}
    ncols = len(cols)
    piv_of_col = np.full(ncols, -1, dtype=np.int64)
    red_ptr = [0]
    red_idx: list[int] = []
    red_val: list[int] = []
    for r, (m, (u, k)) in enumerate(reducers.items()):
        piv_of_col[col_of[m]] = r
        red_idx.extend(col_of[t + u] for t in G[k].mons)
        red_val.extend(G[k].coefs)
        red_ptr.append(len(red_idx))
    out_polys = []
    chunk = 2048
    freecols_idx = np.nonzero(piv_of_col < 0)[0]
    freecols = [cols[c] for c in freecols_idx]
    args = (
        np.asarray(red_ptr, dtype=np.int64),
        np.asarray(red_idx, dtype=np.int64),
        np.asarray(red_val, dtype=np.int64),
        piv_of_col,
    )
    for start in range(0, len(polys), chunk):
        part = polys[start:start + chunk]
        row_ptr = [0]
        row_idx: list[int] = []
        row_val: list[int] = []
        for mons, coefs in part:
            row_idx.extend(col_of[m] for m in mons)
            row_val.extend(c % p for c in coefs)
            row_ptr.append(len(row_idx))
        out = _kernels.reduce_rows(
            *args,
            np.asarray(row_ptr, dtype=np.int64),
            np.asarray(row_idx, dtype=np.int64),
            np.asarray(row_val, dtype=np.int64),
            ncols,
            p,
        )
        out = out[:, freecols_idx]
        for row in out:
            idx = np.nonzero(row)[0]
            out_polys.append(([freecols[j] for j in idx], [int(row[j]) for j in idx]))
    if stats is not None:
        stats.max_cols = max(stats.max_cols, ncols)
    return out_polys


def elems_from_basis(basis):
    return [_Elem(m, c, 0) for m, c in basis]


def to_polynomials(ring: Ring, basis) -> list[Polynomial]:
    return [Polynomial(ring, dict(zip(m, c))) for m, c in basis]

"""Dense univariate polynomials over F_p and their roots in F_p.

A polynomial is a list of residues, constant term first, with no trailing
zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def monic(f, p):
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [(c * inv) % p for c in f]


def sub(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return trim(out)


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % p for c in out])


def divmod_(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 0)
    for k in range(len(f) - 1, dg - 1, -1):
        c = (f[k] * inv) % p
        if c:
            q[k - dg] = c
            for j, b in enumerate(g):
                f[k - dg + j] = (f[k - dg + j] - c * b) % p
    return trim(q), trim(f[:dg])


def gcd(f, g, p):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, divmod_(f, g, p)[1]
    return monic(f, p)


def powmod(base, e, mod, p):
    result = [1]
    base = divmod_(base, mod, p)[1]
    while e:
        if e & 1:
            result = divmod_(mul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = divmod_(mul(base, base, p), mod, p)[1]
    return result


def evaluate(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def roots(f, p, rng):
    """Distinct roots of ``f`` in F_p, sorted.

    Isolates the split part ``gcd(f, x^p - x)`` and splits it with
    Cantor-Zassenhaus equal-degree factorization.
    """
    f = monic(trim(f), p)
    if len(f) <= 1:
        return []
    xp = powmod([0, 1], p, f, p)
    g = gcd(f, sub(xp, [0, 1], p), p)
    out = []
    _split(g, p, rng, out)
    return sorted(out)


def _split(g, p, rng, out):
    d = len(g) - 1
    if d <= 0:
        return
    if d == 1:
        out.append((-g[0] * pow(g[1], -1, p)) % p)
        return
    if p == 2:  # pragma: no cover - odd primes only
        for x in (0, 1):
            if evaluate(g, x, p) == 0:
                out.append(x)
        return
    while True:
        a = rng.randrange(p)
        h = powmod([a, 1], (p - 1) // 2, g, p)
        h = gcd(g, sub(h, [1], p), p)
        if 0 < len(h) - 1 < d:
            break
    _split(h, p, rng, out)
    _split(divmod_(g, h, p)[0], p, rng, out)


def factor_squarefree(f, p, rng):
    """Monic irreducible factors of a squarefree ``f`` over F_p.

    Distinct-degree factorization followed by Cantor-Zassenhaus
    equal-degree splitting.
    """
    f = monic(trim(f), p)
    out = []
    k = 0
    h = [0, 1]
    while len(f) - 1 >= 2 * (k + 1):
        k += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, [0, 1], p), p)
        if len(g) > 1:
            _split_equal_degree(g, k, p, rng, out)
            f = divmod_(f, g, p)[0]
            h = divmod_(h, f, p)[1]
    if len(f) > 1:
        out.append(f)
    return sorted(out, key=lambda g: (len(g), g))


def _split_equal_degree(g, k, p, rng, out):
    d = len(g) - 1
    if d == k:
        out.append(g)
        return
    e = (p**k - 1) // 2
    while True:
        a = trim([rng.randrange(p) for _ in range(d)])
        if len(a) < 2:
            continue
        h = gcd(g, sub(powmod(a, e, g, p), [1], p), p)
        if 0 < len(h) - 1 < d:
            break
    _split_equal_degree(h, k, p, rng, out)
    _split_equal_degree(divmod_(g, h, p)[0], k, p, rng, out)

"""Numba-compiled mod-p elimination kernels.

Plain nested loops, written to compile under @njit.  Same contracts as the
numpy versions in _kernels_numpy: int64 input reduced into [0, p), destroyed
in place, p*p below 2**63.
"""

from __future__ import annotations

import numba


@numba.njit(cache=True)
def _pow_mod(base, exp, p):
    result = 1
    b = base % p
    e = exp
    while e > 0:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return result


@numba.njit(cache=True)
def rank_mod_p(a, p):
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(c, n):
                tmp = a[r, k]
                a[r, k] = a[piv, k]
                a[piv, k] = tmp
        inv = _pow_mod(a[r, c], p - 2, p)
        for k in range(c, n):
            a[r, k] = a[r, k] * inv % p
        for i in range(r + 1, m):
            f = a[i, c]
            if f != 0:
                for k in range(c, n):
                    a[i, k] = (a[i, k] - f * a[r, k]) % p
        r += 1
    return r


@numba.njit(cache=True)
def det_mod_p(a, p):
    n = a.shape[0]
    det = 1
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != c:
            for k in range(c, n):
                tmp = a[c, k]
                a[c, k] = a[piv, k]
                a[piv, k] = tmp
            det = (p - det) % p
        det = det * a[c, c] % p
        inv = _pow_mod(a[c, c], p - 2, p)
        for k in range(c, n):
            a[c, k] = a[c, k] * inv % p
        for i in range(c + 1, n):
            f = a[i, c]
            if f != 0:
                for k in range(c, n):
                    a[i, k] = (a[i, k] - f * a[c, k]) % p
    return det

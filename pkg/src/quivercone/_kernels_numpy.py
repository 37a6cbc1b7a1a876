"""Vectorized pure-numpy mod-p elimination kernels.

Fallback path for the numba kernels; selected by QUIVERCONE_PURE_NUMPY=1 or
when numba is unavailable.  Inputs are int64 arrays with entries already
reduced into [0, p); p*p must stay below 2**63, which the oracle layer
enforces when it validates the prime.
"""

from __future__ import annotations

import numpy as np


def rank_mod_p(a, p):
    """Rank over F_p by row elimination.  Destroys `a`."""
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, int(p))
        a[r, c:] = a[r, c:] * inv % p
        below = a[r + 1 :, c]
        rows = np.nonzero(below)[0]
        if rows.size:
            block = a[r + 1 :, c:]
            block[rows] = (block[rows] - below[rows, None] * a[r, c:][None, :]) % p
        r += 1
    return r


def det_mod_p(a, p):
    """Determinant over F_p.  Destroys `a`; the empty matrix has determinant 1."""
    n = a.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            a[[c, i]] = a[[i, c]]
            det = (p - det) % p
        piv = int(a[c, c])
        det = det * piv % p
        inv = pow(piv, -1, int(p))
        a[c, c:] = a[c, c:] * inv % p
        below = a[c + 1 :, c]
        rows = np.nonzero(below)[0]
        if rows.size:
            block = a[c + 1 :, c:]
            block[rows] = (block[rows] - below[rows, None] * a[c, c:][None, :]) % p
    return int(det)

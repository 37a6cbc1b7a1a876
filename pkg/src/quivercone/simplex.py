"""Dense exact-rational simplex: maximize c.x subject to A x <= b, x >= 0.

Textbook tableau method over fractions.Fraction with Bland's anti-cycling
rule.  Only the case b >= 0 is needed here (the origin is feasible, so no
phase one).  Returns the optimal value, or None when unbounded.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CapExceededError

DEFAULT_CELL_CAP = 4_000_000


def maximize(objective, rows, rhs, *, cell_cap=DEFAULT_CELL_CAP):
    m = len(rows)
    n = len(objective)
    if (m + 1) * (n + m + 1) > cell_cap:
        raise CapExceededError(
            f"LP tableau would need {(m + 1) * (n + m + 1)} cells > cap {cell_cap}"
        )
    for b in rhs:
        if b < 0:
            raise ValueError("maximize() requires b >= 0")

    # tableau: columns 0..n-1 structural, n..n+m-1 slack, last column rhs
    width = n + m + 1
    tab = []
    for i in range(m):
        row = [Fraction(x) for x in rows[i]] + [Fraction(0)] * m + [Fraction(rhs[i])]
        row[n + i] = Fraction(1)
        tab.append(row)
    # objective row holds -c so that a negative entry means "can improve"
    zrow = [-Fraction(x) for x in objective] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))

    while True:
        enter = -1
        for j in range(n + m):  # Bland: smallest improving index
            if zrow[j] < 0:
                enter = j
                break
        if enter < 0:
            return zrow[-1]
        leave = -1
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return None  # unbounded
        piv = tab[leave][enter]
        prow = tab[leave]
        for j in range(width):
            prow[j] /= piv
        for i in range(m):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                row = tab[i]
                for j in range(width):
                    row[j] -= f * prow[j]
        f = zrow[enter]
        if f:
            for j in range(width):
                zrow[j] -= f * prow[j]
        basis[leave] = enter

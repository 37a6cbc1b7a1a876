"""Littlewood-Richardson coefficients by direct skew-tableau backtracking.

The coefficient c(lam, mu; nu) counts fillings of the skew shape nu/lam with
content mu that weakly increase along rows, strictly increase down columns,
and whose reverse reading word is a lattice word.  The backtracking walks
the cells in reading order (rows top to bottom, each row right to left), so
the lattice condition is checked incrementally.  No symmetric-function
machinery is involved; this module is the independent combinatorial oracle
for star-quiver cone membership.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .model import canonical_family


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative parts; trailing zeros are normalized away."""

    parts: tuple

    def __init__(self, parts=()):
        seq = tuple(int(x) for x in parts)
        for a in seq:
            if a < 0:
                raise ValidationError("partition parts must be nonnegative")
        for a, b in zip(seq, seq[1:]):
            if b > a:
                raise ValidationError("partition parts must be weakly decreasing")
        while seq and seq[-1] == 0:
            seq = seq[:-1]
        object.__setattr__(self, "parts", seq)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError:
            raise ValidationError(f"bad partition literal {text!r}") from None

    def size(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def part(self, i):
        return self.parts[i] if i < len(self.parts) else 0

    def contains(self, other):
        return all(self.part(i) >= other.part(i) for i in range(other.length()))

    def padded(self, n):
        if self.length() > n:
            raise ValidationError(f"partition has more than {n} rows")
        return self.parts + (0,) * (n - self.length())

    def __str__(self):
        return ",".join(str(p) for p in self.parts) if self.parts else "-"


def _as_partition(x):
    return x if isinstance(x, Partition) else Partition(x)


def lr_coefficient(lam, mu, nu):
    """Number of lattice skew tableaux of shape nu/lam and content mu."""
    lam = _as_partition(lam)
    mu = _as_partition(mu)
    nu = _as_partition(nu)
    if nu.size() != lam.size() + mu.size():
        return 0
    if not nu.contains(lam):
        return 0
    if mu.size() == 0:
        return 1
    rows = nu.length()
    ncolors = mu.length()
    # cells in reading order: rows top-down, right to left within a row
    cells = []
    for r in range(rows):
        for c in range(nu.part(r) - 1, lam.part(r) - 1, -1):
            cells.append((r, c))
    grid = {}
    counts = [0] * (ncolors + 1)
    remaining = [mu.part(i) for i in range(ncolors)]
    count = 0

    def place(pos):
        nonlocal count
        if pos == len(cells):
            count += 1
            return
        r, c = cells[pos]
        right = grid.get((r, c + 1))
        above = grid.get((r - 1, c)) if r > 0 and c >= lam.part(r - 1) else None
        lo = 1 if above is None else above + 1
        hi = ncolors if right is None else right
        for val in range(lo, hi + 1):
            if remaining[val - 1] == 0:
                continue
            if val > 1 and counts[val] + 1 > counts[val - 1]:
                continue  # lattice word condition
            grid[(r, c)] = val
            counts[val] += 1
            remaining[val - 1] -= 1
            place(pos + 1)
            remaining[val - 1] += 1
            counts[val] -= 1
            del grid[(r, c)]

    place(0)
    return count


def _partitions_between(lo, hi, size):
    """Partitions nu with lo <= nu <= hi (containment) and |nu| = size.

    Yields in descending lexicographic order.
    """
    rows = hi.length()

    def rec(i, prev, left, acc):
        if i == rows:
            if left == 0:
                yield Partition(acc)
            return
        top = min(hi.part(i), prev, left)
        bottom = lo.part(i)
        # remaining rows can absorb at most this much
        for val in range(top, bottom - 1, -1):
            rest_cap = sum(min(hi.part(j), val) for j in range(i + 1, rows))
            need = left - val
            rest_floor = sum(lo.part(j) for j in range(i + 1, rows))
            if need < rest_floor or need > rest_cap:
                continue
            yield from rec(i + 1, val, need, acc + [val])

    if size < lo.size() or size > hi.size():
        return
    yield from rec(0, size if rows else 0, size, [])


def lr_expansion(lam, mu):
    """All (nu, coefficient) with nonzero coefficient, descending lex order."""
    lam = _as_partition(lam)
    mu = _as_partition(mu)
    size = lam.size() + mu.size()
    hi_rows = lam.length() + mu.length()
    hi = Partition([lam.part(0) + mu.part(0)] * hi_rows) if hi_rows else Partition(())
    out = []
    for nu in _partitions_between(lam, hi, size):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((nu, c))
    return out


def multi_lr(lams, mu):
    """Multiplicity of the `mu` factor in the ordered product of the `lams`.

    Folds pairwise coefficients; intermediate shapes are pruned to those
    contained in `mu`, which is exhaustive because shapes only grow.
    """
    mu = _as_partition(mu)
    lams = [_as_partition(l) for l in lams]
    if not lams:
        return 1 if mu.size() == 0 else 0
    first = lams[0]
    acc = {first: 1} if mu.contains(first) else {}
    for lam in lams[1:]:
        nxt = {}
        for kappa, mult in acc.items():
            size = kappa.size() + lam.size()
            for nu in _partitions_between(kappa, mu, size):
                c = lr_coefficient(kappa, lam, nu)
                if c:
                    nxt[nu] = nxt.get(nu, 0) + mult * c
        acc = nxt
    return acc.get(mu, 0)


@dataclass(frozen=True)
class StarCheck:
    lr_multiplicity: int
    lr_positive: bool
    cone_member: bool

    @property
    def agree(self):
        return self.lr_positive == self.cone_member


def star_quiver(s):
    """The quiver x1, ..., xs -> y."""
    from .model import Quiver

    sources = tuple(f"x{i}" for i in range(1, s + 1))
    return Quiver(sources + ("y",), tuple((x, "y") for x in sources))


def star_cone_check(n, s, lams, mu, *, table=None, cap=None):
    """Tensor-multiplicity positivity versus cone membership on the star quiver.

    The sink carries the reversed negation of `mu` (the dual highest weight),
    every source the padded partition itself.  By saturation of the tensor
    cone, positivity of the multiplicity is equivalent to membership of the
    integral weight, with no stretching factor needed.
    """
    from .cone import DominantWeight, cone_contains
    from .horn import DEFAULT_CAP

    if cap is None:
        cap = DEFAULT_CAP
    lams = [_as_partition(l) for l in lams]
    mu = _as_partition(mu)
    if len(lams) != s:
        raise ValidationError(f"expected {s} source partitions, got {len(lams)}")
    for l in lams + [mu]:
        if l.length() > n:
            raise ValidationError(f"partition {l} has more than {n} rows")
    quiver = star_quiver(s)
    family = canonical_family(quiver, {v: n for v in quiver.vertices})
    values = {f"x{i + 1}": lams[i].padded(n) for i in range(s)}
    values["y"] = tuple(-m for m in reversed(mu.padded(n)))
    weight = DominantWeight(family, values)
    mult = multi_lr(lams, mu)
    member = cone_contains(quiver, family, weight, table=table, cap=cap)
    return StarCheck(lr_multiplicity=mult, lr_positive=mult > 0, cone_member=member)

"""Exact combinatorial counts: Euler forms, filtered map dimensions, kappa weights.

Everything here is plain integer arithmetic on labels.  The one convention
that matters is the compatibility rule for a linear map between filtered
spaces on a shared label axis: the elementary map sending the basis vector
with label k to the one with label j is filtration-compatible iff j <= k.
For a sub/quotient pair the two label sets are disjoint, so the count is the
strict one (j < k).
"""

from __future__ import annotations

import itertools

from .errors import ValidationError
from .model import LabeledFamily, Subfamily, subquotient


def _check_family(quiver, family):
    for v in quiver.vertices:
        family[v]  # raises on missing vertex


def _check_dims(quiver, alpha):
    out = {}
    for v in quiver.vertices:
        try:
            a = int(alpha[v])
        except KeyError:
            raise ValidationError(f"dimension vector misses vertex {v!r}") from None
        if a < 0:
            raise ValidationError(f"negative dimension at vertex {v!r}")
        out[v] = a
    return out


def euler_form(quiver, alpha, beta):
    """<alpha, beta> = sum_x a_x b_x - sum_{arrows x->y} a_x b_y."""
    a = _check_dims(quiver, alpha)
    b = _check_dims(quiver, beta)
    total = sum(a[v] * b[v] for v in quiver.vertices)
    total -= sum(a[x] * b[y] for x, y in quiver.arrows)
    return total


def dim_hom_space(quiver, alpha, beta):
    """Dimension of the arrow-hom space: sum over arrows x->y of a_x b_y."""
    a = _check_dims(quiver, alpha)
    b = _check_dims(quiver, beta)
    return sum(a[x] * b[y] for x, y in quiver.arrows)


def dim_compatible(quiver, fam_v, fam_w):
    """Dimension of the space of filtration-compatible vertex maps.

    Counts elementary maps e_k -> e_j with j <= k, per vertex, on the shared
    label axis.
    """
    _check_family(quiver, fam_v)
    _check_family(quiver, fam_w)
    total = 0
    for x in quiver.vertices:
        lw = fam_w[x]
        for k in fam_v[x]:
            total += sum(1 for j in lw if j <= k)
    return total


def eul(quiver, fam_v, fam_w):
    """Filtered Euler number: compatible-map dimension minus arrow-hom dimension."""
    return dim_compatible(quiver, fam_v, fam_w) - dim_hom_space(
        quiver, fam_v.dims(), fam_w.dims()
    )


def eul_subquotient(quiver, family, sub):
    """eul of the (sub, quotient) pair cut out of `family` by `sub`."""
    fv, fw = subquotient(family, sub)
    return eul(quiver, fv, fw)


class Weight:
    """Integer or rational linear functional on (vertex, label) coordinates.

    Coordinates absent from the mapping have coefficient zero; zero entries
    are dropped on construction.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        self._coeffs = {k: v for k, v in items if v != 0}

    def __getitem__(self, key):
        return self._coeffs.get(key, 0)

    def items(self):
        return sorted(self._coeffs.items())

    def support(self):
        return set(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def coefficient_sum(self):
        return sum(self._coeffs.values())

    def restrict(self, keep):
        """Weight keeping only the coordinates for which keep((vertex, label))."""
        return Weight({k: v for k, v in self._coeffs.items() if keep(k)})

    def pairing(self, sub):
        """Evaluate against the 0/1 indicator of a subfamily's labels."""
        return sum(self._coeffs.get((x, l), 0) for x in sub.vertices for l in sub[x])

    def __add__(self, other):
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return Weight(out)

    def __sub__(self, other):
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) - v
        return Weight(out)

    def __eq__(self, other):
        return isinstance(other, Weight) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        inner = ", ".join(f"{x}:{l}={c}" for (x, l), c in self.items())
        return f"Weight({{{inner}}})"


def coordinate_weight(vertex, label):
    """The coordinate functional e^vertex_label."""
    return Weight({(vertex, label): 1})


def kappa(quiver, family, sub):
    """Trace-difference weight attached to the diagonal element picked out by `sub`.

    Sums the positive vertex roots made negative by the element (pairs i < j
    with i outside and j inside the subfamily) minus the representation
    weights made negative (arrow coordinates from inside the subfamily at the
    source to outside it at the target).  The coefficients always sum to zero.
    """
    if sub.ambient != family:
        raise ValidationError("subfamily does not belong to this family")
    _check_family(quiver, family)
    coeffs = {}

    def add(key, val):
        coeffs[key] = coeffs.get(key, 0) + val

    for x in quiver.vertices:
        chosen = set(sub[x])
        for i, j in itertools.combinations(family[x], 2):
            if i not in chosen and j in chosen:
                add((x, i), 1)
                add((x, j), -1)
    for x, y in quiver.arrows:
        chosen_y = set(sub[y])
        outside_y = [j for j in family[y] if j not in chosen_y]
        for i in sub[x]:
            for j in outside_y:
                add((y, j), -1)
                add((x, i), 1)
    return Weight(coeffs)

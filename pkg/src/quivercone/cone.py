"""Cone inequality generation, membership, element classification, pruning.

The cone of a labeled family is cut out, inside the dominant chamber, by the
trace-zero equality together with one inequality per Horn subfamily K:
sum of the weight's values over K's labels <= 0.  The subcone of weights
proportional to per-vertex trace characters only sees the cardinality
vectors of the Horn subfamilies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import simplex
from .errors import QuiverFileError, ValidationError
from .euler import eul, kappa
from .horn import (
    DEFAULT_CAP,
    HornTable,
    horn_families,
    is_q_intersecting,
)
from .model import (
    LabeledFamily,
    Subfamily,
    canonicalize,
    format_subfamily,
    subquotient,
)


class DominantWeight:
    """Per-vertex weakly decreasing rational values aligned with ascending labels."""

    __slots__ = ("_family", "_values")

    def __init__(self, family, values):
        items = values.items() if hasattr(values, "items") else values
        given = {}
        for vertex, seq in items:
            if vertex in given:
                raise ValidationError(f"duplicate vertex {vertex!r} in weight")
            given[vertex] = tuple(_as_rational(x) for x in seq)
        if set(given) != set(family.vertices):
            raise ValidationError("weight support does not match the family")
        for v in family.vertices:
            if len(given[v]) != len(family[v]):
                raise ValidationError(
                    f"weight at vertex {v!r} has {len(given[v])} values, "
                    f"family has {len(family[v])} labels"
                )
            for a, b in zip(given[v], given[v][1:]):
                if a < b:
                    raise ValidationError(f"weight at vertex {v!r} is not dominant")
        self._family = family
        self._values = {v: given[v] for v in family.vertices}

    @property
    def family(self):
        return self._family

    def values(self, vertex):
        return self._values[vertex]

    def value(self, vertex, label):
        idx = self._family[vertex].index(label)
        return self._values[vertex][idx]

    def trace(self):
        return sum(sum(seq) for seq in self._values.values())

    def scaled(self, factor):
        factor = _as_rational(factor)
        if factor < 0:
            raise ValidationError("scaling a dominant weight needs a factor >= 0")
        return DominantWeight(
            self._family, {v: [factor * x for x in seq] for v, seq in self._values.items()}
        )

    def __add__(self, other):
        if other._family != self._family:
            raise ValidationError("cannot add weights on different families")
        return DominantWeight(
            self._family,
            {
                v: [a + b for a, b in zip(self._values[v], other._values[v])]
                for v in self._family.vertices
            },
        )

    def __eq__(self, other):
        return (
            isinstance(other, DominantWeight)
            and self._family == other._family
            and self._values == other._values
        )

    def __repr__(self):
        inner = "; ".join(
            f"{v}:" + ",".join(str(x) for x in seq) for v, seq in self._values.items()
        )
        return f"DominantWeight({inner})"


def _as_rational(x):
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, str):
        return Fraction(x)
    raise ValidationError(f"not an exact rational value: {x!r}")


def parse_weight_file(text, family):
    """Parse ``weight <vertex> v1 ... vk`` lines into a DominantWeight."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] != "weight":
            raise QuiverFileError(f"unknown directive {tok[0]!r}", lineno)
        if len(tok) < 2:
            raise QuiverFileError("weight line needs a vertex name", lineno)
        name = tok[1]
        if name in values:
            raise QuiverFileError(f"duplicate weight line for vertex {name!r}", lineno)
        try:
            values[name] = [Fraction(t) for t in tok[2:]]
        except (ValueError, ZeroDivisionError):
            raise QuiverFileError("weight values must be rationals", lineno) from None
    try:
        return DominantWeight(family, values)
    except ValidationError as exc:
        raise QuiverFileError(str(exc)) from None


@dataclass(frozen=True)
class Inequality:
    """One Horn inequality: the 0/1 indicator of `subfamily`, sense <= 0."""

    subfamily: Subfamily
    eul: int
    trivial: bool  # empty or full subfamily; implied by 0 <= 0 / trace zero

    def coefficient(self, vertex, label):
        return 1 if label in self.subfamily[vertex] else 0

    def dot(self, weight):
        total = 0
        for v in self.subfamily.vertices:
            for l in self.subfamily[v]:
                total += weight.value(v, l)
        return total

    def coords(self):
        return [
            (v, l) for v in self.subfamily.vertices for l in self.subfamily[v]
        ]

    def render(self):
        coords = ",".join(f"{v}:{l}" for v, l in self.coords())
        return (
            f"K\t{format_subfamily(self.subfamily)}\teul={self.eul}"
            f"\tsum[{coords}] <= 0"
        )


@dataclass(frozen=True)
class TraceEquality:
    """The global trace-zero equality over all (vertex, label) coordinates."""

    family: LabeledFamily

    def dot(self, weight):
        return weight.trace()

    def render(self):
        return "EQ\tsum[all] = 0"


def cone_inequalities(
    quiver, family, *, essential_only=False, table=None, cap=DEFAULT_CAP
):
    """The complete (possibly redundant) inequality description of the cone.

    Returns (TraceEquality, [Inequality...]) with one record per Horn
    subfamily in enumeration order; with essential_only, per Horn subfamily
    with eul = 0.  The empty and full subfamilies stay in the list, flagged
    trivial, so that the raw output is a faithful transcription.
    """
    records = []
    for sub, e in horn_families(quiver, family, table=table, cap=cap):
        if essential_only and e != 0:
            continue
        records.append(
            Inequality(subfamily=sub, eul=e, trivial=sub.is_empty() or sub.is_full())
        )
    return TraceEquality(family), records


def cone_contains(quiver, family, weight, *, table=None, cap=DEFAULT_CAP):
    """Exact membership of a dominant weight in the cone of `family`."""
    ok, _ = cone_membership(quiver, family, weight, table=table, cap=cap)
    return ok


def cone_membership(quiver, family, weight, *, table=None, cap=DEFAULT_CAP):
    """Like cone_contains but also reports the first failing constraint.

    Returns (True, None) or (False, reason-string).
    """
    if not isinstance(weight, DominantWeight):
        raise ValidationError("membership needs a DominantWeight")
    if weight.family != family:
        raise ValidationError("weight has the wrong support for this family")
    if weight.trace() != 0:
        return False, "trace"
    for sub, e in horn_families(quiver, family, table=table, cap=cap):
        if e != 0:
            continue  # eul = 0 subfamilies already cut the same cone
        value = sum(weight.value(v, l) for v in sub.vertices for l in sub[v])
        if value > 0:
            return False, format_subfamily(sub)
    return True, None


@dataclass(frozen=True)
class SigmaEquality:
    coeffs: tuple  # (vertex, n_vertex) pairs in vertex order

    def dot(self, sigma):
        return sum(n * sigma[v] for v, n in self.coeffs)

    def render(self):
        inner = ",".join(f"{v}*{n}" for v, n in self.coeffs)
        return f"EQ\tsum[{inner}] = 0"


@dataclass(frozen=True)
class SigmaInequality:
    alpha: tuple  # (vertex, cardinality) pairs in vertex order

    def dot(self, sigma):
        return sum(a * sigma[v] for v, a in self.alpha)

    def render(self):
        key = ";".join(f"{v}:{a}" for v, a in self.alpha)
        inner = ",".join(f"{v}*{a}" for v, a in self.alpha)
        return f"ALPHA\t{key}\tsum[{inner}] <= 0"


def sigma_inequalities(quiver, family, *, table=None, cap=DEFAULT_CAP):
    """Cardinality-vector projection of the Horn system.

    The functional of a Horn subfamily K seen on per-vertex trace characters
    only depends on the cardinalities |K_x|, so the projected system is the
    deduped list of those vectors, plus the projected trace equality.
    """
    equality = SigmaEquality(
        tuple((v, len(family[v])) for v in quiver.vertices)
    )
    seen = set()
    records = []
    for sub, _ in horn_families(quiver, family, table=table, cap=cap):
        alpha = tuple((v, len(sub[v])) for v in quiver.vertices)
        if alpha in seen:
            continue
        seen.add(alpha)
        records.append(SigmaInequality(alpha))
    return equality, records


def _check_sigma(quiver, sigma):
    out = {}
    for v in quiver.vertices:
        try:
            out[v] = _as_rational(sigma[v])
        except KeyError:
            raise ValidationError(f"sigma vector misses vertex {v!r}") from None
    return out


def sigma_contains(quiver, family, sigma, *, table=None, cap=DEFAULT_CAP):
    """Membership of a per-vertex character vector in the projected subcone."""
    sigma = _check_sigma(quiver, sigma)
    equality, records = sigma_inequalities(quiver, family, table=table, cap=cap)
    if equality.dot(sigma) != 0:
        return False
    return all(rec.dot(sigma) <= 0 for rec in records)


@dataclass(frozen=True)
class Classification:
    admissible: bool
    covering: bool
    ressayre: bool
    horn_element: bool


def classify_element(quiver, family, sub, *, table=None, cap=DEFAULT_CAP):
    """Classify the diagonal element picked out by `sub`.

    covering: the subfamily meets every representation; ressayre: covering
    with eul = 0; horn element: eul = 0 and both components of the kappa
    weight lie in the cones of the subfamily and its complement (checked
    recursively on canonical relabelings).
    """
    if sub.ambient != family:
        raise ValidationError("subfamily does not belong to this family")
    if table is None:
        table = HornTable(quiver, cap=cap)
    sub_fam, quot_fam = subquotient(family, sub)
    e = eul(quiver, sub_fam, quot_fam)
    covering = is_q_intersecting(quiver, family, sub, table=table, cap=cap)
    ressayre = covering and e == 0
    horn_element = False
    if e == 0:
        w = kappa(quiver, family, sub)
        horn_element = _component_in_cone(
            quiver, sub_fam, w, table, cap
        ) and _component_in_cone(quiver, quot_fam, w, table, cap)
    return Classification(
        admissible=True, covering=covering, ressayre=ressayre, horn_element=horn_element
    )


def _component_in_cone(quiver, part_family, weight, table, cap):
    values = {}
    for v in quiver.vertices:
        seq = tuple(weight[(v, l)] for l in part_family[v])
        for a, b in zip(seq, seq[1:]):
            if a < b:
                return False  # not dominant, so certainly not in the cone
        values[v] = seq
    canon = canonicalize(part_family)
    dw = DominantWeight(canon, values)
    return cone_contains(quiver, canon, dw, table=table, cap=cap)


def prune_redundant(
    equality, inequalities, *, lp_cell_cap=simplex.DEFAULT_CELL_CAP
):
    """Drop inequalities implied by the rest plus the equality and dominance.

    Exact rational LP per candidate: maximize its functional subject to all
    kept others (<= 0), the trace equality, the per-vertex dominance order,
    and a unit cap on the candidate itself; optimal value 0 means redundant.
    Duplicates and the zero functional are dropped up front.  Output order
    follows the input.
    """
    family = equality.family
    coords = [(v, l) for v in family.vertices for l in family[v]]
    coord_idx = {c: i for i, c in enumerate(coords)}
    n = len(coords)

    vectors = []
    kept = []
    seen = set()
    for rec in inequalities:
        vec = [0] * n
        for c in rec.coords():
            vec[coord_idx[c]] = 1
        key = tuple(vec)
        if key in seen or not any(vec):
            continue
        seen.add(key)
        vectors.append(vec)
        kept.append(rec)

    # free coordinates are split as x = pos - neg
    def widen(vec):
        return [x for pair in zip(vec, [-x for x in vec]) for x in pair]

    trace = [1] * n
    base_rows = [widen(trace), widen([-1] * n)]
    dominance = []
    for v in family.vertices:
        labels = family[v]
        for t in range(len(labels) - 1):
            row = [0] * n
            row[coord_idx[(v, labels[t])]] = -1
            row[coord_idx[(v, labels[t + 1])]] = 1
            dominance.append(widen(row))

    alive = [True] * len(kept)
    for i in range(len(kept)):
        rows = list(base_rows)
        rhs = [0, 0]
        for j in range(len(kept)):
            if j != i and alive[j]:
                rows.append(widen(vectors[j]))
                rhs.append(0)
        rows.extend(dominance)
        rhs.extend([0] * len(dominance))
        cand = widen(vectors[i])
        rows.append(cand)
        rhs.append(1)
        best = simplex.maximize(cand, rows, rhs, cell_cap=lp_cell_cap)
        if best is not None and best <= 0:
            alive[i] = False
    return [rec for rec, a in zip(kept, alive) if a]

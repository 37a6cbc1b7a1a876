"""Quivers, labeled families and subfamilies.

A labeled family assigns to each vertex a strictly increasing tuple of
positive integer labels.  Each label does double duty: it indexes a basis
vector of the vertex space and it is the step at which that vector enters
the vertex filtration (step t spans the vectors with label <= t).  Sub-
and quotient families keep the ambient labels, which is exactly what makes
inherited filtrations a matter of plain label comparison.

All types here are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import QuiverFileError, ValidationError


def _kahn_leftover(vertices, arrows):
    """Vertices that survive repeated sink-stripping; empty iff acyclic."""
    indeg = {v: 0 for v in vertices}
    for _, dst in arrows:
        indeg[dst] += 1
    queue = [v for v in vertices if indeg[v] == 0]
    alive = set(vertices)
    while queue:
        v = queue.pop()
        alive.discard(v)
        for src, dst in arrows:
            if src == v:
                indeg[dst] -= 1
                if indeg[dst] == 0:
                    queue.append(dst)
    return alive


@dataclass(frozen=True)
class Quiver:
    """Acyclic directed multigraph.  Parallel arrows are distinct list entries."""

    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple((s, d) for s, d in self.arrows))
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise ValidationError(f"duplicate vertex {v!r}")
            seen.add(v)
        for src, dst in self.arrows:
            if src not in seen:
                raise ValidationError(f"unknown vertex {src!r} in arrow")
            if dst not in seen:
                raise ValidationError(f"unknown vertex {dst!r} in arrow")
        if _kahn_leftover(self.vertices, self.arrows):
            raise ValidationError("quiver has a directed cycle")

    @cached_property
    def vertex_index(self):
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_indices(self):
        """Arrows as (source index, target index) pairs."""
        idx = self.vertex_index
        return tuple((idx[s], idx[d]) for s, d in self.arrows)

    def __repr__(self):
        return f"Quiver(vertices={self.vertices!r}, arrows={self.arrows!r})"


class LabeledFamily:
    """Per-vertex strictly increasing tuples of positive integer labels."""

    __slots__ = ("_labels",)

    def __init__(self, labels):
        items = labels.items() if hasattr(labels, "items") else labels
        out = {}
        for vertex, raw in items:
            if vertex in out:
                raise ValidationError(f"duplicate vertex {vertex!r} in family")
            seq = tuple(int(x) for x in raw)
            for a in seq:
                if a <= 0:
                    raise ValidationError(f"label {a} at vertex {vertex!r} is not positive")
            for a, b in zip(seq, seq[1:]):
                if b <= a:
                    raise ValidationError(
                        f"labels at vertex {vertex!r} must be strictly increasing"
                    )
            out[vertex] = seq
        self._labels = out

    def __getitem__(self, vertex):
        try:
            return self._labels[vertex]
        except KeyError:
            raise ValidationError(f"family has no vertex {vertex!r}") from None

    def __contains__(self, vertex):
        return vertex in self._labels

    @property
    def vertices(self):
        return tuple(self._labels)

    def dims(self):
        return {v: len(ls) for v, ls in self._labels.items()}

    def total(self):
        return sum(len(ls) for ls in self._labels.values())

    def as_dict(self):
        return dict(self._labels)

    def __eq__(self, other):
        return isinstance(other, LabeledFamily) and self._labels == other._labels

    def __hash__(self):
        return hash(frozenset(self._labels.items()))

    def __repr__(self):
        inner = ", ".join(f"{v}: {list(ls)}" for v, ls in self._labels.items())
        return f"LabeledFamily({{{inner}}})"


class Subfamily:
    """A per-vertex subset of an ambient family's labels; ambient labels kept."""

    __slots__ = ("_ambient", "_labels")

    def __init__(self, ambient, labels):
        if not isinstance(ambient, LabeledFamily):
            raise ValidationError("ambient must be a LabeledFamily")
        items = labels.items() if hasattr(labels, "items") else labels
        chosen = {}
        for vertex, raw in items:
            if vertex not in ambient:
                raise ValidationError(f"subfamily names unknown vertex {vertex!r}")
            if vertex in chosen:
                raise ValidationError(f"duplicate vertex {vertex!r} in subfamily")
            seq = tuple(sorted(int(x) for x in raw))
            have = set(ambient[vertex])
            for a in seq:
                if a not in have:
                    raise ValidationError(
                        f"label {a} at vertex {vertex!r} is not in the ambient family"
                    )
            for a, b in zip(seq, seq[1:]):
                if a == b:
                    raise ValidationError(f"duplicate label {a} at vertex {vertex!r}")
            chosen[vertex] = seq
        # full support in ambient vertex order; omitted vertices are empty
        self._ambient = ambient
        self._labels = {v: chosen.get(v, ()) for v in ambient.vertices}

    @property
    def ambient(self):
        return self._ambient

    def __getitem__(self, vertex):
        try:
            return self._labels[vertex]
        except KeyError:
            raise ValidationError(f"subfamily has no vertex {vertex!r}") from None

    @property
    def vertices(self):
        return tuple(self._labels)

    def dims(self):
        return {v: len(ls) for v, ls in self._labels.items()}

    def total(self):
        return sum(len(ls) for ls in self._labels.values())

    def is_full(self):
        return all(self._labels[v] == self._ambient[v] for v in self._labels)

    def is_empty(self):
        return all(not ls for ls in self._labels.values())

    def as_dict(self):
        return dict(self._labels)

    def __eq__(self, other):
        return (
            isinstance(other, Subfamily)
            and self._ambient == other._ambient
            and self._labels == other._labels
        )

    def __hash__(self):
        return hash((self._ambient, frozenset(self._labels.items())))

    def __repr__(self):
        return f"Subfamily({format_subfamily(self)!r})"


def parse_quiver(text):
    """Parse a quiver file into (Quiver, LabeledFamily).

    Line-oriented format: '#' starts a comment, blank lines are skipped,
    ``vertex <name> <label> ...`` declares a vertex with ascending positive
    labels, ``arrow <src> <dst>`` declares one arrow (repeat for parallels).
    Vertex and arrow order are preserved.
    """
    names = []
    labels = {}
    arrows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "vertex":
            if len(tok) < 2:
                raise QuiverFileError("vertex line needs a name", lineno)
            name = tok[1]
            if name in labels:
                raise QuiverFileError(f"duplicate vertex {name!r}", lineno)
            try:
                ls = [int(t) for t in tok[2:]]
            except ValueError:
                raise QuiverFileError("labels must be integers", lineno) from None
            for a in ls:
                if a <= 0:
                    raise QuiverFileError(f"label {a} is not positive", lineno)
            for a, b in zip(ls, ls[1:]):
                if b == a:
                    raise QuiverFileError(
                        f"duplicate label {a} at vertex {name!r}", lineno
                    )
                if b < a:
                    raise QuiverFileError("labels must be ascending", lineno)
            names.append(name)
            labels[name] = tuple(ls)
        elif tok[0] == "arrow":
            if len(tok) != 3:
                raise QuiverFileError("arrow line needs a source and a target", lineno)
            arrows.append((tok[1], tok[2], lineno))
        else:
            raise QuiverFileError(f"unknown directive {tok[0]!r}", lineno)
    for src, dst, ln in arrows:
        if src not in labels:
            raise QuiverFileError(f"unknown vertex {src!r} in arrow", ln)
        if dst not in labels:
            raise QuiverFileError(f"unknown vertex {dst!r} in arrow", ln)
    pairs = [(s, d) for s, d, _ in arrows]
    leftover = _kahn_leftover(names, pairs)
    if leftover:
        ln = min(ln for s, d, ln in arrows if s in leftover and d in leftover)
        raise QuiverFileError("cycle detected", ln)
    quiver = Quiver(tuple(names), tuple(pairs))
    family = LabeledFamily({v: labels[v] for v in names})
    return quiver, family


def subquotient(family, sub):
    """Split `family` along `sub` into (sub family, quotient family).

    Both keep the ambient labels, so the inherited filtrations are read off
    the labels directly.
    """
    if sub.ambient != family:
        raise ValidationError("subfamily does not belong to this family")
    sub_labels = {v: sub[v] for v in family.vertices}
    quot_labels = {
        v: tuple(l for l in family[v] if l not in set(sub[v])) for v in family.vertices
    }
    return LabeledFamily(sub_labels), LabeledFamily(quot_labels)


def canonicalize(family):
    """Relabel every vertex to 1..n preserving order.  Idempotent."""
    return LabeledFamily(
        {v: tuple(range(1, len(family[v]) + 1)) for v in family.vertices}
    )


def canonical_family(quiver, dims):
    """The family with labels 1..dims[x] at every vertex of `quiver`."""
    out = {}
    for v in quiver.vertices:
        n = int(dims[v])
        if n < 0:
            raise ValidationError(f"negative dimension at vertex {v!r}")
        out[v] = tuple(range(1, n + 1))
    return LabeledFamily(out)


def parse_subfamily(text, ambient):
    """Parse a subfamily literal like ``x:1,3;y:2;z:`` against `ambient`.

    Omitted vertices get the empty label set.
    """
    chosen = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise QuiverFileError(f"bad subfamily chunk {chunk!r}")
        name, _, rest = chunk.partition(":")
        name = name.strip()
        if name in chosen:
            raise QuiverFileError(f"duplicate vertex {name!r} in subfamily literal")
        vals = []
        for piece in rest.split(","):
            piece = piece.strip()
            if piece:
                try:
                    vals.append(int(piece))
                except ValueError:
                    raise QuiverFileError(
                        f"bad label {piece!r} at vertex {name!r}"
                    ) from None
        chosen[name] = vals
    return Subfamily(ambient, chosen)


def format_subfamily(sub):
    """Render a subfamily as ``x:{1,3};y:{}`` in ambient vertex order."""
    parts = []
    for v in sub.vertices:
        inner = ",".join(str(l) for l in sub[v])
        parts.append(f"{v}:{{{inner}}}")
    return ";".join(parts)


def subfamily_literal(sub):
    """Render a subfamily in the CLI literal form ``x:1,3;y:``."""
    parts = []
    for v in sub.vertices:
        inner = ",".join(str(l) for l in sub[v])
        parts.append(f"{v}:{inner}")
    return ";".join(parts)

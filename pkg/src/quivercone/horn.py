"""Recursive Horn-set computation with memoization on canonical dimension vectors.

A subfamily K of J belongs to the Horn set of J when K = J, or when
eul(K, J/K) >= 0 and for every essential member L of the Horn set of K
(essential: eul(L, K/L) = 0), the ambient value eul(L, J/L) is also >= 0.
The Horn set of K depends only on the per-vertex cardinalities of K, since
every count involved only sees relative label order.  That observation is
the whole performance story: results are memoized per canonical dimension
vector in a HornTable, and members are stored in position form (per-vertex
bitmasks, bit t standing for the t-th smallest label).

Enumeration order is fixed everywhere: subfamilies are ordered by the
combined bitmask read with the first vertex in the lowest bits, i.e. the
first vertex's subsets cycle fastest, each vertex's subsets in binary
counting order by ascending labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError, ValidationError
from .model import Subfamily

DEFAULT_CAP = 1 << 24

_MAX_VERTEX_BITS = 20  # per-vertex lookup tables above this are unreasonable
_CHUNK = 1 << 20

_pairs_tables = {}
_popcount_tables = {}
_nth_bit_tables = {}
_masks_by_popcount = {}


def _pairs_table(m):
    """t[mask] = #{(k, j): k set in mask, j clear, j < k} over bit positions."""
    if m not in _pairs_tables:
        size = 1 << m
        t = np.zeros(size, dtype=np.int32)
        for mask in range(size):
            below = 0  # clear bits seen so far
            cnt = 0
            for k in range(m):
                if mask >> k & 1:
                    cnt += below
                else:
                    below += 1
            t[mask] = cnt
        _pairs_tables[m] = t
    return _pairs_tables[m]


def _popcount_table(m):
    if m not in _popcount_tables:
        _popcount_tables[m] = np.array(
            [bin(i).count("1") for i in range(1 << m)], dtype=np.int32
        )
    return _popcount_tables[m]


def _nth_bit_table(m):
    """pos[mask, b] = position of the b-th lowest set bit of mask."""
    if m not in _nth_bit_tables:
        width = max(m, 1)
        pos = np.zeros((1 << m, width), dtype=np.int8)
        for mask in range(1 << m):
            b = 0
            for t in range(m):
                if mask >> t & 1:
                    pos[mask, b] = t
                    b += 1
        _nth_bit_tables[m] = pos
    return _nth_bit_tables[m]


def _masks_with_popcount(m, k):
    if (m, k) not in _masks_by_popcount:
        _masks_by_popcount[(m, k)] = np.array(
            [mask for mask in range(1 << m) if bin(mask).count("1") == k],
            dtype=np.int64,
        )
    return _masks_by_popcount[(m, k)]


def _deposit(kx, lx, nbits, nth_tab):
    """Scatter the low `nbits` bits of lx into the set bits of kx.

    kx: (G,) ambient masks, lx: (E,) canonical masks; returns (G, E).
    """
    out = np.zeros((kx.shape[0], lx.shape[0]), dtype=np.int64)
    pos = nth_tab[kx].astype(np.int64)
    for b in range(nbits):
        bit = (lx >> b) & 1
        out |= bit[None, :] << pos[:, b : b + 1]
    return out


def _check_cap(total_bits, cap):
    if (1 << total_bits) > cap:
        raise CapExceededError(
            f"subfamily enumeration needs 2**{total_bits} > cap {cap}; "
            "raise the cap explicitly if this is intended"
        )


@dataclass
class HornEntry:
    """Horn set of the canonical family for one dimension vector.

    Members are parallel arrays in enumeration order; `index` maps a
    per-vertex mask tuple to its eul value for O(1) membership tests.
    """

    dims: tuple
    member_masks: np.ndarray  # (n_members, n_vertices) int64
    member_eul: np.ndarray  # (n_members,) int64
    essential_masks: np.ndarray  # members with eul == 0
    index: dict


class HornTable:
    """Memo of Horn entries per canonical dimension vector of one quiver.

    Lookups are idempotent and the computation is deterministic, so
    concurrent duplicate computation is safe; single-threaded use is
    bit-identical.
    """

    def __init__(self, quiver, *, cap=DEFAULT_CAP):
        self.quiver = quiver
        self.cap = cap
        self._entries = {}

    def entry(self, dims):
        dims = tuple(int(d) for d in dims)
        if len(dims) != len(self.quiver.vertices):
            raise ValidationError("dimension vector length does not match quiver")
        if any(d < 0 for d in dims):
            raise ValidationError("negative dimension")
        if dims not in self._entries:
            _check_cap(sum(dims), self.cap)
            if max(dims, default=0) > _MAX_VERTEX_BITS:
                raise CapExceededError(
                    f"per-vertex label sets above {_MAX_VERTEX_BITS} are not supported"
                )
            order = sorted(
                itertools.product(*(range(d + 1) for d in dims)),
                key=lambda b: (sum(b), b),
            )
            for beta in order:
                if beta not in self._entries:
                    self._entries[beta] = self._compute(beta)
        return self._entries[dims]

    def _compute(self, alpha):
        nv = len(alpha)
        total = int(sum(alpha))
        shifts = [0] * nv
        for i in range(1, nv):
            shifts[i] = shifts[i - 1] + alpha[i - 1]
        arrows = self.quiver.arrow_indices
        n_all = 1 << total
        ptabs = [_pairs_table(a) for a in alpha]

        member = np.zeros(n_all, dtype=bool)
        eulvals = np.zeros(n_all, dtype=np.int64)
        for lo in range(0, n_all, _CHUNK):
            ids = np.arange(lo, min(lo + _CHUNK, n_all), dtype=np.int64)
            kx = [(ids >> shifts[i]) & ((1 << alpha[i]) - 1) for i in range(nv)]
            e = np.zeros(ids.shape[0], dtype=np.int64)
            for i in range(nv):
                e += ptabs[i][kx[i]]
            if arrows:
                pcs = [_popcount_table(alpha[i])[kx[i]].astype(np.int64) for i in range(nv)]
                for s, t in arrows:
                    e -= pcs[s] * (alpha[t] - pcs[t])
            member[lo : lo + ids.shape[0]] = e >= 0
            eulvals[lo : lo + ids.shape[0]] = e
        # the full subfamily is a member by definition; its eul is 0 already

        nth_tabs = [_nth_bit_table(a) for a in alpha]
        for beta in itertools.product(*(range(a + 1) for a in alpha)):
            if beta == alpha:
                continue  # only the full mask, already settled
            lists = [_masks_with_popcount(alpha[i], beta[i]) for i in range(nv)]
            ids = np.zeros(1, dtype=np.int64)
            for i in range(nv):
                ids = (ids[:, None] | (lists[i] << shifts[i])[None, :]).ravel()
            cand = ids[member[ids]]
            if cand.size == 0:
                continue
            sub_entry = self._entries[beta]
            ess = sub_entry.essential_masks
            if ess.shape[0] == 0:
                continue
            # arrow-hom part of eul(L, J/L): depends only on L's cardinalities
            ess_pc = [
                _popcount_table(beta[i])[ess[:, i]].astype(np.int64) for i in range(nv)
            ]
            hom_l = np.zeros(ess.shape[0], dtype=np.int64)
            for s, t in arrows:
                hom_l += ess_pc[s] * (alpha[t] - ess_pc[t])
            step = max(1, _CHUNK // max(1, ess.shape[0]))
            for lo in range(0, cand.size, step):
                chunk = cand[lo : lo + step]
                acc = np.zeros((chunk.shape[0], ess.shape[0]), dtype=np.int64)
                for i in range(nv):
                    if alpha[i] == 0:
                        continue
                    kx = (chunk >> shifts[i]) & ((1 << alpha[i]) - 1)
                    amb = _deposit(kx, ess[:, i], beta[i], nth_tabs[i])
                    acc += ptabs[i][amb]
                bad = chunk[(acc < hom_l[None, :]).any(axis=1)]
                member[bad] = False

        ids = np.nonzero(member)[0].astype(np.int64)
        masks = np.empty((ids.shape[0], nv), dtype=np.int64)
        for i in range(nv):
            masks[:, i] = (ids >> shifts[i]) & ((1 << alpha[i]) - 1)
        euls = eulvals[ids]
        essential = masks[euls == 0]
        index = {tuple(int(v) for v in row): int(e) for row, e in zip(masks, euls)}
        return HornEntry(
            dims=tuple(alpha),
            member_masks=masks,
            member_eul=euls,
            essential_masks=essential,
            index=index,
        )


def _family_dims(quiver, family):
    return tuple(len(family[v]) for v in quiver.vertices)


def _mask_to_labels(mask, labels):
    return tuple(l for t, l in enumerate(labels) if mask >> t & 1)


def _sub_to_masks(quiver, family, sub):
    masks = []
    for v in quiver.vertices:
        pos = {l: t for t, l in enumerate(family[v])}
        m = 0
        for l in sub[v]:
            m |= 1 << pos[l]
        masks.append(m)
    return tuple(masks)


def enumerate_subfamilies(family, *, filter_dims=None, cap=DEFAULT_CAP):
    """Yield every subfamily of `family` in enumeration order.

    With `filter_dims`, only subfamilies whose per-vertex cardinalities match
    it are yielded (same order).  Raises CapExceededError when the product of
    per-vertex subset counts exceeds `cap`.
    """
    vertices = family.vertices
    _check_cap(family.total(), cap)
    per_vertex = []
    for v in vertices:
        labels = family[v]
        subsets = [
            _mask_to_labels(mask, labels) for mask in range(1 << len(labels))
        ]
        if filter_dims is not None:
            try:
                want = int(filter_dims[v])
            except KeyError:
                raise ValidationError(
                    f"filter dimension vector misses vertex {v!r}"
                ) from None
            subsets = [s for s in subsets if len(s) == want]
        per_vertex.append(subsets)
    # first vertex cycles fastest
    for combo in itertools.product(*reversed(per_vertex)):
        chosen = dict(zip(reversed(vertices), combo))
        yield Subfamily(family, chosen)


def _naive_members(quiver, family, cap):
    """Reference recursion: ambient labels throughout, no memo table.

    Exponentially slower than the table engine; used to validate that the
    canonical-dimension memoization does not change results.
    """
    vertices = quiver.vertices
    nv = len(vertices)
    sizes = [len(family[v]) for v in vertices]
    _check_cap(sum(sizes), cap)
    arrows = quiver.arrow_indices

    pair2 = []  # pair2[i][A][B] = #{(k in A, j in B): j < k}
    for n in sizes:
        size = 1 << n
        tab = [[0] * size for _ in range(size)]
        for a in range(size):
            for b in range(size):
                cnt = 0
                for k in range(n):
                    if a >> k & 1:
                        cnt += bin(b & ((1 << k) - 1)).count("1")
                tab[a][b] = cnt
        pair2.append(tab)
    popcount = [bin(i).count("1") for i in range(1 << max(sizes, default=0))]

    def eul2(lmasks, kmasks):
        e = 0
        for i in range(nv):
            e += pair2[i][lmasks[i]][kmasks[i] & ~lmasks[i]]
        for s, t in arrows:
            e -= popcount[lmasks[s]] * popcount[kmasks[t] & ~lmasks[t]]
        return e

    def submasks(mask):
        out = []
        s = 0
        while True:
            out.append(s)
            if s == mask:
                return out
            s = (s - mask) & mask  # next submask in increasing order

    def members(kmasks):
        out = {}
        for combo in itertools.product(*[submasks(m) for m in reversed(kmasks)]):
            lmasks = tuple(reversed(combo))
            if lmasks == kmasks:
                out[lmasks] = 0
                continue
            e = eul2(lmasks, kmasks)
            if e < 0:
                continue
            inner = members(lmasks)
            if all(
                eul2(m, kmasks) >= 0 for m, em in inner.items() if em == 0
            ):
                out[lmasks] = e
        return out

    return members(tuple((1 << n) - 1 for n in sizes))


def _entry_for(quiver, family, table, cap):
    if table is None:
        table = HornTable(quiver, cap=cap)
    elif table.quiver != quiver:
        raise ValidationError("Horn table belongs to a different quiver")
    return table.entry(_family_dims(quiver, family))


def _check_support(quiver, family):
    if set(family.vertices) != set(quiver.vertices):
        raise ValidationError("family vertices do not match the quiver")


def horn_families(quiver, family, *, table=None, memo=True, cap=DEFAULT_CAP):
    """All Horn subfamilies of `family` with their eul values, in enumeration order.

    With memo=False the reference recursion recomputes everything in ambient
    labels; results are identical, only slower.
    """
    _check_support(quiver, family)
    if memo:
        entry = _entry_for(quiver, family, table, cap)
        mask_rows = entry.member_masks
        euls = entry.member_eul
        items = [
            (tuple(int(v) for v in mask_rows[i]), int(euls[i]))
            for i in range(mask_rows.shape[0])
        ]
    else:
        items = sorted(
            _naive_members(quiver, family, cap).items(),
            key=lambda kv: _combined(kv[0], quiver, family),
        )
    out = []
    for masks, e in items:
        labels = {
            v: _mask_to_labels(masks[i], family[v])
            for i, v in enumerate(quiver.vertices)
        }
        out.append((Subfamily(family, labels), e))
    return out


def _combined(masks, quiver, family):
    shift = 0
    total = 0
    for i, v in enumerate(quiver.vertices):
        total |= masks[i] << shift
        shift += len(family[v])
    return total


def essential_horn(quiver, family, *, table=None, memo=True, cap=DEFAULT_CAP):
    """Horn subfamilies with eul(K, J/K) = 0, in enumeration order."""
    return [
        sub
        for sub, e in horn_families(quiver, family, table=table, memo=memo, cap=cap)
        if e == 0
    ]


def is_q_intersecting(quiver, family, sub, *, table=None, memo=True, cap=DEFAULT_CAP):
    """Whether `sub` meets every representation: membership in the Horn set."""
    _check_support(quiver, family)
    if sub.ambient != family:
        raise ValidationError("subfamily does not belong to this family")
    if memo:
        entry = _entry_for(quiver, family, table, cap)
        return _sub_to_masks(quiver, family, sub) in entry.index
    members = _naive_members(quiver, family, cap)
    return _sub_to_masks(quiver, family, sub) in members

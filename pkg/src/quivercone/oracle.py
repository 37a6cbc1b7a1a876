"""Randomized prime-field rank oracle for the commutator map of filtered pairs.

For families V, W on the same quiver, the map sends a filtration-compatible
vertex tuple Phi to the arrow tuple Phi_y v_a - w_a Phi_x.  Its generic rank
over F_p (maximized over seeded random specializations of v and w) lower
bounds the generic rank over the complex numbers and equals it with
overwhelming probability: a random specialization misses the generic rank r
with probability at most r/p per trial, so the default five trials at
p = 2**31 - 1 leave less than (r/p)**5.  Everything is exact integer
arithmetic; no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ValidationError
from .euler import dim_compatible, dim_hom_space, eul
from .horn import DEFAULT_CAP, HornTable, enumerate_subfamilies, horn_families
from .model import (
    LabeledFamily,
    Subfamily,
    subfamily_literal,
    subquotient,
)

DEFAULT_PRIME = 2_147_483_647
DEFAULT_TRIALS = 5
_MAX_PRIME = 3_037_000_499  # (p-1)**2 must stay below 2**63

_prime_cache = {}


def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p):
    p = int(p)
    if p not in _prime_cache:
        if p > _MAX_PRIME:
            raise ValidationError(
                f"prime {p} too large; products must stay below 2**63"
            )
        _prime_cache[p] = _is_prime(p)
    if not _prime_cache[p]:
        raise ValidationError(f"{p} is not prime")
    return p


class PrimeFieldMatrix:
    """Dense matrix over F_p, row-major int64 storage, entries in [0, p)."""

    __slots__ = ("array", "p")

    def __init__(self, array, p):
        self.p = check_prime(p)
        a = np.asarray(array, dtype=np.int64)
        if a.ndim != 2:
            raise ValidationError("matrix must be 2-dimensional")
        if a.size and (a.min() < 0 or a.max() >= self.p):
            raise ValidationError("entries must lie in [0, p)")
        self.array = a

    @property
    def rows(self):
        return self.array.shape[0]

    @property
    def cols(self):
        return self.array.shape[1]

    def rank(self):
        return kernels.rank_mod_p(self.array, self.p)

    def det(self):
        if self.rows != self.cols:
            raise ValidationError("determinant needs a square matrix")
        return kernels.det_mod_p(self.array, self.p)

    def __repr__(self):
        return f"PrimeFieldMatrix({self.rows}x{self.cols} mod {self.p})"


@dataclass
class DeltaAssembly:
    """Assembled commutator matrix with its bases.

    Columns are elementary compatible maps (vertex, source label, target
    label with target <= source); rows are arrow-hom coordinates
    (arrow index, source label, target label).
    """

    col_basis: tuple
    row_basis: tuple
    matrix: PrimeFieldMatrix


class _DeltaPattern:
    """Index pattern of the commutator matrix for one (quiver, V, W) triple.

    The matrix is linear in (v, w), so one pattern serves every trial: the
    v-sourced entries are a gather from the flattened v blocks, the w-sourced
    entries a negated gather from the flattened w blocks.
    """

    def __init__(self, quiver, fam_v, fam_w):
        vertices = quiver.vertices
        lv = {x: fam_v[x] for x in vertices}
        lw = {x: fam_w[x] for x in vertices}
        pos_v = {x: {l: i for i, l in enumerate(lv[x])} for x in vertices}
        pos_w = {x: {l: i for i, l in enumerate(lw[x])} for x in vertices}

        col_basis = []
        col_of = {}
        for z in vertices:
            for k in lv[z]:
                for j in lw[z]:
                    if j <= k:
                        col_of[(z, k, j)] = len(col_basis)
                        col_basis.append((z, k, j))

        row_basis = []
        row_offset = []
        self.v_shapes = []
        self.w_shapes = []
        v_off = []
        w_off = []
        v_total = 0
        w_total = 0
        for a, (x, y) in enumerate(quiver.arrows):
            row_offset.append(len(row_basis))
            for i in lv[x]:
                for j in lw[y]:
                    row_basis.append((a, i, j))
            self.v_shapes.append((len(lv[y]), len(lv[x])))
            self.w_shapes.append((len(lw[y]), len(lw[x])))
            v_off.append(v_total)
            w_off.append(w_total)
            v_total += len(lv[y]) * len(lv[x])
            w_total += len(lw[y]) * len(lw[x])
        self.v_total = v_total
        self.w_total = w_total

        vr, vc, vf = [], [], []
        wr, wc, wf = [], [], []
        for a, (x, y) in enumerate(quiver.arrows):
            base = row_offset[a]
            nwy = len(lw[y])
            # columns at the target vertex pick up v entries
            for k in lv[y]:
                for j in lw[y]:
                    if j > k:
                        continue
                    col = col_of[(y, k, j)]
                    for ii, i in enumerate(lv[x]):
                        vr.append(base + ii * nwy + pos_w[y][j])
                        vc.append(col)
                        vf.append(v_off[a] + pos_v[y][k] * len(lv[x]) + ii)
            # columns at the source vertex pick up -w entries
            for k in lv[x]:
                for j in lw[x]:
                    if j > k:
                        continue
                    col = col_of[(x, k, j)]
                    for jj, jt in enumerate(lw[y]):
                        wr.append(base + pos_v[x][k] * nwy + jj)
                        wc.append(col)
                        wf.append(w_off[a] + jj * len(lw[x]) + pos_w[x][j])
        self.col_basis = tuple(col_basis)
        self.row_basis = tuple(row_basis)
        self.rows = len(row_basis)
        self.cols = len(col_basis)
        self.v_idx = (np.array(vr, dtype=np.intp), np.array(vc, dtype=np.intp))
        self.v_flat = np.array(vf, dtype=np.intp)
        self.w_idx = (np.array(wr, dtype=np.intp), np.array(wc, dtype=np.intp))
        self.w_flat = np.array(wf, dtype=np.intp)

    def assemble(self, v_flat, w_flat, p):
        m = np.zeros((self.rows, self.cols), dtype=np.int64)
        m[self.v_idx] = v_flat[self.v_flat]
        m[self.w_idx] = (p - w_flat[self.w_flat]) % p
        return m


def _flatten_blocks(blocks, shapes, p, what):
    flat = []
    if len(blocks) != len(shapes):
        raise ValidationError(f"{what} needs one matrix per arrow")
    for b, shape in zip(blocks, shapes):
        arr = np.asarray(b, dtype=np.int64)
        if arr.shape != shape:
            raise ValidationError(f"{what} block has shape {arr.shape}, wanted {shape}")
        flat.append(arr.reshape(-1) % p)
    if flat:
        return np.concatenate(flat)
    return np.zeros(0, dtype=np.int64)


def build_delta(quiver, fam_v, fam_w, v, w, *, p=DEFAULT_PRIME):
    """Assemble the commutator matrix for explicit per-arrow maps v, w.

    v[a] acts within the V family along arrow a (target-by-source over V
    labels), w[a] within the W family.  Entries are reduced mod p.
    """
    p = check_prime(p)
    pat = _DeltaPattern(quiver, fam_v, fam_w)
    v_flat = _flatten_blocks(v, pat.v_shapes, p, "v")
    w_flat = _flatten_blocks(w, pat.w_shapes, p, "w")
    matrix = PrimeFieldMatrix(pat.assemble(v_flat, w_flat, p), p)
    return DeltaAssembly(col_basis=pat.col_basis, row_basis=pat.row_basis, matrix=matrix)


def _seed_entropy(seed):
    seed = int(seed)
    return (seed << 1) if seed >= 0 else ((-seed << 1) | 1)


def _trial_rng(seed, trial, *extra):
    ss = np.random.SeedSequence(entropy=_seed_entropy(seed), spawn_key=(trial, *extra))
    return np.random.default_rng(ss)


def derive_seed(seed, *key):
    """A derived integer seed, stable across runs and platforms."""
    ss = np.random.SeedSequence(entropy=_seed_entropy(seed), spawn_key=tuple(key))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _random_flat(rng, total, p):
    return rng.integers(0, p, size=total, dtype=np.int64)


def generic_rank(quiver, fam_v, fam_w, trials, seed, *, p=DEFAULT_PRIME):
    """Max rank of the commutator matrix over `trials` random (v, w) pairs.

    Each trial draws its randomness from (seed, trial index), so parallel
    and serial execution agree exactly.
    """
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    p = check_prime(p)
    pat = _DeltaPattern(quiver, fam_v, fam_w)
    bound = min(pat.rows, pat.cols)
    best = 0
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        v_flat = _random_flat(rng, pat.v_total, p)
        w_flat = _random_flat(rng, pat.w_total, p)
        r = kernels.rank_mod_p(pat.assemble(v_flat, w_flat, p), p)
        if r > best:
            best = r
        if best == bound:
            break
    return best


@dataclass
class DeltaReport:
    rows: int
    cols: int
    eul: int
    rank: int
    hom_min: int
    ext_min: int
    det_nonzero: object  # bool when square, else None


def delta_report(quiver, fam_v, fam_w, trials, seed, *, p=DEFAULT_PRIME):
    """Ranks, minimal hom/ext dimensions and (when square) the det check."""
    p = check_prime(p)
    rank = generic_rank(quiver, fam_v, fam_w, trials, seed, p=p)
    rows = dim_hom_space(quiver, fam_v.dims(), fam_w.dims())
    cols = dim_compatible(quiver, fam_v, fam_w)
    det = None
    if rows == cols:
        det = det_P_nonzero(quiver, fam_v, fam_w, trials, seed, p=p)
    return DeltaReport(
        rows=rows,
        cols=cols,
        eul=cols - rows,
        rank=rank,
        hom_min=cols - rank,
        ext_min=rows - rank,
        det_nonzero=det,
    )


def ext_min(quiver, fam_v, fam_w, trials, seed, *, p=DEFAULT_PRIME):
    """Minimal (= generic) cokernel dimension of the commutator map."""
    rank = generic_rank(quiver, fam_v, fam_w, trials, seed, p=p)
    return dim_hom_space(quiver, fam_v.dims(), fam_w.dims()) - rank


def det_P_nonzero(quiver, fam_v, fam_w, trials, seed, *, p=DEFAULT_PRIME):
    """Whether the determinant of the square commutator matrix is generically nonzero."""
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    p = check_prime(p)
    if eul(quiver, fam_v, fam_w) != 0:
        raise ValidationError("determinant check needs eul = 0 (square matrix)")
    pat = _DeltaPattern(quiver, fam_v, fam_w)
    if pat.rows == 0:
        return True  # empty determinant is 1
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        v_flat = _random_flat(rng, pat.v_total, p)
        w_flat = _random_flat(rng, pat.w_total, p)
        if kernels.det_mod_p(pat.assemble(v_flat, w_flat, p), p) != 0:
            return True
    return False


@dataclass
class HarnessReport:
    mode: str
    lines: list
    agreements: int
    total: int

    @property
    def ok(self):
        return self.agreements == self.total

    def summary(self):
        return f"AGREEMENTS {self.agreements}/{self.total}"


def theorem_harness(
    quiver,
    family,
    mode,
    *,
    trials=DEFAULT_TRIALS,
    seed,
    p=DEFAULT_PRIME,
    samples=50,
    max_dim=3,
    axis=8,
    table=None,
    cap=DEFAULT_CAP,
):
    """Cross-check the recursion against the rank oracle.

    theo1: every subfamily K of `family`; membership in the Horn set must
    match ext = 0 for the (sub, quotient) pair.  theo2: seeded random
    filtered pairs (V, W) on a shared label axis; ext = 0 must imply
    eul(S, W) >= 0 over Horn members S of V, and conversely with S
    restricted to essential members.  theo3: subfamilies K whose essential
    proper Horn members all intersect ambient must intersect themselves.
    """
    if table is None:
        table = HornTable(quiver, cap=cap)
    lines = []
    agreements = 0
    total = 0

    if mode == "theo1":
        members = {
            sub: e for sub, e in horn_families(quiver, family, table=table, cap=cap)
        }
        for sub in enumerate_subfamilies(family, cap=cap):
            fv, fw = subquotient(family, sub)
            ext = ext_min(quiver, fv, fw, trials, seed, p=p)
            recursion = sub in members
            agree = recursion == (ext == 0)
            total += 1
            agreements += agree
            lines.append(
                f"INSTANCE {subfamily_literal(sub)} recursion={int(recursion)} "
                f"oracle_ext={ext} agree={int(agree)}"
            )
    elif mode == "theo2":
        vertices = quiver.vertices
        for idx in range(samples):
            rng = _trial_rng(seed, idx, 2)
            fv = _random_family(rng, vertices, max_dim, axis)
            fw = _random_family(rng, vertices, max_dim, axis)
            ext = ext_min(quiver, fv, fw, trials, derive_seed(seed, idx, 3), p=p)
            forward = True
            converse_hyp = True
            for s, e in horn_families(quiver, fv, table=table, cap=cap):
                s_fam = LabeledFamily({v: s[v] for v in vertices})
                value = eul(quiver, s_fam, fw)
                if value < 0:
                    forward = False
                    if e == 0:
                        converse_hyp = False
            fwd_ok = ext != 0 or forward
            conv_ok = not converse_hyp or ext == 0
            agree = fwd_ok and conv_ok
            total += 1
            agreements += agree
            lines.append(
                f"INSTANCE V={_family_literal(fv)} W={_family_literal(fw)} "
                f"ext={ext} forward={int(fwd_ok)} converse={int(conv_ok)} "
                f"agree={int(agree)}"
            )
    elif mode == "theo3":
        members = {
            sub: e for sub, e in horn_families(quiver, family, table=table, cap=cap)
        }
        for sub in enumerate_subfamilies(family, cap=cap):
            fv, fw = subquotient(family, sub)
            e = eul(quiver, fv, fw)
            hyp = e >= 0
            if hyp and not sub.is_full():
                k_fam = LabeledFamily({v: sub[v] for v in quiver.vertices})
                for inner, ie in horn_families(quiver, k_fam, table=table, cap=cap):
                    if ie != 0 or inner.is_full():
                        continue
                    lifted = Subfamily(
                        family, {v: inner[v] for v in quiver.vertices}
                    )
                    if lifted not in members:
                        hyp = False
                        break
            intersecting = sub in members
            agree = (not hyp) or intersecting
            total += 1
            agreements += agree
            lines.append(
                f"INSTANCE {subfamily_literal(sub)} eul={e} hyp={int(hyp)} "
                f"intersecting={int(intersecting)} agree={int(agree)}"
            )
    else:
        raise ValidationError(f"unknown harness mode {mode!r}")

    return HarnessReport(mode=mode, lines=lines, agreements=agreements, total=total)


def _random_family(rng, vertices, max_dim, axis):
    labels = {}
    for v in vertices:
        size = int(rng.integers(0, max_dim + 1))
        chosen = sorted(rng.choice(axis, size=size, replace=False) + 1)
        labels[v] = tuple(int(c) for c in chosen)
    return LabeledFamily(labels)


def _family_literal(family):
    return ";".join(
        f"{v}:" + ",".join(str(l) for l in family[v]) for v in family.vertices
    )

"""Deterministic generators of small quivers and families for sweep testing."""

from __future__ import annotations

import itertools

import numpy as np

from .model import Quiver, canonical_family


def iter_quivers(max_vertices, max_arrows):
    """Every acyclic quiver with up to the given vertex and arrow counts.

    Vertices are named v1, v2, ...; arrow multisets are enumerated in
    lexicographic order (parallel arrows allowed); cyclic candidates are
    skipped.  Deterministic.
    """
    for nv in range(1, max_vertices + 1):
        vertices = tuple(f"v{i}" for i in range(1, nv + 1))
        arcs = [
            (a, b) for a in vertices for b in vertices if a != b
        ]
        for na in range(0, max_arrows + 1):
            for combo in itertools.combinations_with_replacement(arcs, na):
                leftover = _cycle_free(vertices, combo)
                if leftover:
                    continue
                yield Quiver(vertices, combo)


def _cycle_free(vertices, arrows):
    from .model import _kahn_leftover

    return _kahn_leftover(vertices, arrows)


def iter_canonical_families(quiver, max_dim, *, min_dim=0):
    """Every canonical family with per-vertex dimensions in [min_dim, max_dim]."""
    for dims in itertools.product(
        range(min_dim, max_dim + 1), repeat=len(quiver.vertices)
    ):
        yield canonical_family(quiver, dict(zip(quiver.vertices, dims)))


def random_instances(count, max_vertices, max_arrows, max_dim, seed):
    """Seeded random (quiver, family) pairs from the same class as the sweeps."""
    quivers = list(iter_quivers(max_vertices, max_arrows))
    ss = np.random.SeedSequence(entropy=abs(int(seed)) * 2 + (seed < 0))
    rng = np.random.default_rng(ss)
    out = []
    for _ in range(count):
        quiver = quivers[int(rng.integers(0, len(quivers)))]
        dims = {
            v: int(rng.integers(0, max_dim + 1)) for v in quiver.vertices
        }
        out.append((quiver, canonical_family(quiver, dims)))
    return out

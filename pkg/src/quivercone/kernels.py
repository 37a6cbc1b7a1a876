"""Kernel selection for the mod-p elimination hot path.

The default implementation is numba-compiled loops; set the environment
variable QUIVERCONE_PURE_NUMPY=1 before import to force the vectorized
pure-numpy path (it is also used automatically when numba is missing).
Both paths compute identical integers; `benchmarks/bench_kernels.py`
compares their speed.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("QUIVERCONE_PURE_NUMPY", "").strip().lower()
_FORCE_NUMPY = _FLAG in ("1", "true", "yes", "on")


def load_implementation(name):
    """Return (rank_fn, det_fn) for 'numba' or 'numpy'; fns destroy their input."""
    if name == "numpy":
        from . import _kernels_numpy as impl
    elif name == "numba":
        from . import _kernels_numba as impl
    else:
        raise ValueError(f"unknown kernel implementation {name!r}")
    return impl.rank_mod_p, impl.det_mod_p


if _FORCE_NUMPY:
    IMPLEMENTATION = "numpy"
else:
    try:
        import numba  # noqa: F401

        IMPLEMENTATION = "numba"
    except ImportError:
        IMPLEMENTATION = "numpy"

_rank_inplace, _det_inplace = load_implementation(IMPLEMENTATION)


def _as_work_array(matrix):
    a = np.array(matrix, dtype=np.int64, copy=True, order="C")
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return a


def rank_mod_p(matrix, p):
    """Rank of `matrix` over F_p.  Non-destructive."""
    a = _as_work_array(matrix)
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    return int(_rank_inplace(a, np.int64(p)))


def det_mod_p(matrix, p):
    """Determinant of square `matrix` over F_p; the 0x0 determinant is 1."""
    a = _as_work_array(matrix)
    if a.shape[0] != a.shape[1]:
        raise ValueError("determinant needs a square matrix")
    if a.shape[0] == 0:
        return 1
    return int(_det_inplace(a, np.int64(p)))

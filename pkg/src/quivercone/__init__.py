"""Exact Horn-set and cone computations for acyclic quivers.

Given an acyclic quiver and a labeled family (a filtered dimension vector),
this package computes the recursive Horn set, emits the complete inequality
description of the associated weight cone and of its cardinality-projected
subcone, decides membership of dominant weights, classifies the diagonal
elements behind the inequalities, and cross-validates everything against a
randomized prime-field rank oracle and a Littlewood-Richardson oracle.
"""

from .cone import (
    Classification,
    DominantWeight,
    Inequality,
    SigmaEquality,
    SigmaInequality,
    TraceEquality,
    classify_element,
    cone_contains,
    cone_inequalities,
    cone_membership,
    parse_weight_file,
    prune_redundant,
    sigma_contains,
    sigma_inequalities,
)
from .errors import CapExceededError, QuiverConeError, QuiverFileError, ValidationError
from .euler import (
    Weight,
    dim_compatible,
    dim_hom_space,
    eul,
    eul_subquotient,
    euler_form,
    kappa,
)
from .horn import (
    DEFAULT_CAP,
    HornTable,
    enumerate_subfamilies,
    essential_horn,
    horn_families,
    is_q_intersecting,
)
from .lr import Partition, lr_coefficient, lr_expansion, multi_lr, star_cone_check, star_quiver
from .model import (
    LabeledFamily,
    Quiver,
    Subfamily,
    canonical_family,
    canonicalize,
    format_subfamily,
    parse_quiver,
    parse_subfamily,
    subfamily_literal,
    subquotient,
)
from .oracle import (
    DEFAULT_PRIME,
    DEFAULT_TRIALS,
    DeltaAssembly,
    PrimeFieldMatrix,
    build_delta,
    delta_report,
    det_P_nonzero,
    ext_min,
    generic_rank,
    theorem_harness,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

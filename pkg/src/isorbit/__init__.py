"""Exact orbit partitions of finite subsets of Z^n under subgroups of
lattice isometries generated by atomic (pure translation / negation /
permutation) generators.

Typical use::

    from isorbit import Isometry, SignedPermutation, validate_atomic, compute_orbits

    gens = validate_atomic(
        [Isometry.translation((1, 1)),
         Isometry.rotation(SignedPermutation.negation((-1, -1)))],
        n=2)
    labeling = compute_orbits(gens, [(0, 0), (0, 1), (1, 0), (1, 1)])
    labeling.classes
"""

from .errors import (
    BoxTooLargeError,
    ClosureCapExceededError,
    DimensionMismatchError,
    DimensionTooLargeError,
    InputError,
    InvalidDomainError,
    InvalidRotationError,
    IsorbitError,
    IterationCapExceededError,
    NotAtomicError,
    NotStabilizedError,
    StageCacheMismatchError,
)
from .gf2 import (
    Gf2Basis,
    enumerate_negations,
    negation_basis_from_generators,
    negation_basis_from_group,
    rref,
)
from .isometry import (
    GeneratingSet,
    Isometry,
    Point,
    SignedPermutation,
    conjugate,
    project_components,
    validate_atomic,
)
from .labeling import (
    OrbitLabeling,
    finalize_labels,
    merge_classes_generators,
    merge_classes_group,
    rotate_mod_lattice,
)
from .lattice import (
    LatticeBasis,
    hnf_reduce,
    translation_basis_from_generators,
    translation_basis_from_group,
)
from .oracle import bfs_orbits, stabilized_bfs_orbits
from .permgroup import PermGroup, generate_perm_group
from .pipeline import Stage1, compute_labeling, compute_orbits, run_stage1
from .quotient import (
    PseudoInverse,
    build_pseudoinverse,
    coefficient_numerators,
    floor_ratio,
    reduce_mod_lattice,
    reduce_points,
)
from .rotation import RotationGroup, assemble_rotation_group

__version__ = "0.1.0"

__all__ = [
    "BoxTooLargeError",
    "ClosureCapExceededError",
    "DimensionMismatchError",
    "DimensionTooLargeError",
    "GeneratingSet",
    "Gf2Basis",
    "InputError",
    "InvalidDomainError",
    "InvalidRotationError",
    "IsorbitError",
    "Isometry",
    "IterationCapExceededError",
    "LatticeBasis",
    "NotAtomicError",
    "NotStabilizedError",
    "OrbitLabeling",
    "PermGroup",
    "Point",
    "PseudoInverse",
    "RotationGroup",
    "SignedPermutation",
    "Stage1",
    "StageCacheMismatchError",
    "assemble_rotation_group",
    "bfs_orbits",
    "build_pseudoinverse",
    "coefficient_numerators",
    "compute_labeling",
    "compute_orbits",
    "conjugate",
    "enumerate_negations",
    "finalize_labels",
    "floor_ratio",
    "generate_perm_group",
    "hnf_reduce",
    "merge_classes_generators",
    "merge_classes_group",
    "negation_basis_from_generators",
    "negation_basis_from_group",
    "project_components",
    "reduce_mod_lattice",
    "reduce_points",
    "rotate_mod_lattice",
    "rref",
    "run_stage1",
    "stabilized_bfs_orbits",
    "translation_basis_from_generators",
    "translation_basis_from_group",
    "validate_atomic",
]

from random import Random

import pytest

from conftest import random_sweep_instance
from isorbit import (
    ClosureCapExceededError,
    SignedPermutation,
    bfs_orbits,
    build_pseudoinverse,
    finalize_labels,
    hnf_reduce,
    merge_classes_generators,
    merge_classes_group,
    reduce_points,
    rotate_mod_lattice,
    run_stage1,
    validate_atomic,
    Isometry,
)

POINT_REFLECTION = SignedPermutation.negation((-1, -1))
SWAP = SignedPermutation.permutation((1, 0))
UNIT_SQUARE = [(0, 0), (0, 1), (1, 0), (1, 1)]


def diagonal_cell():
    basis = hnf_reduce([(1, 1)], 2)
    return build_pseudoinverse(basis), basis


def test_rotate_mod_lattice_reflection():
    pinv, basis = diagonal_cell()
    assert rotate_mod_lattice(pinv, basis, POINT_REFLECTION, (1, 0)) == (0, 1)


def test_rotate_mod_lattice_identity():
    pinv, basis = diagonal_cell()
    for w in [(0, 0), (1, 0), (0, 1)]:
        assert rotate_mod_lattice(pinv, basis, SignedPermutation.identity(2), w) == w


def test_rotate_mod_lattice_trivial_lattice_is_plain_rotation():
    basis = hnf_reduce([], 2)
    pinv = build_pseudoinverse(basis)
    assert rotate_mod_lattice(pinv, basis, POINT_REFLECTION, (2, 3)) == (-2, -3)


def _witness_partition(witness):
    classes = {}
    for p, w in witness.items():
        classes.setdefault(w, set()).add(p)
    return {frozenset(c) for c in classes.values()}


def test_merge_group_reflection_classes():
    pinv, basis = diagonal_cell()
    reps = {(0, 0), (1, 0), (0, 1)}
    rotations = [SignedPermutation.identity(2), POINT_REFLECTION]
    witness = merge_classes_group(reps, rotations, pinv, basis)
    assert _witness_partition(witness) == {
        frozenset({(0, 0)}), frozenset({(1, 0), (0, 1)})}
    # lexicographically smallest representative wins the witness role
    assert witness[(1, 0)] == (0, 1)
    assert witness[(0, 0)] == (0, 0)


def test_merge_group_identity_only_keeps_everything_apart():
    pinv, basis = diagonal_cell()
    reps = {(0, 0), (1, 0), (0, 1)}
    witness = merge_classes_group(reps, [SignedPermutation.identity(2)], pinv, basis)
    assert witness == {p: p for p in reps}


def test_merge_group_single_representative():
    pinv, basis = diagonal_cell()
    witness = merge_classes_group({(1, 0)}, [SignedPermutation.identity(2)], pinv, basis)
    assert witness == {(1, 0): (1, 0)}


def test_merge_generators_matches_group_mode():
    pinv, basis = diagonal_cell()
    reps = {(0, 0), (1, 0), (0, 1)}
    group_witness = merge_classes_group(
        reps, [SignedPermutation.identity(2), POINT_REFLECTION], pinv, basis)
    gen_witness = merge_classes_generators(reps, [POINT_REFLECTION], pinv, basis)
    assert _witness_partition(group_witness) == _witness_partition(gen_witness)


def test_merge_generators_no_generators():
    pinv, basis = diagonal_cell()
    reps = {(0, 0), (1, 0)}
    assert merge_classes_generators(reps, [], pinv, basis) == {p: p for p in reps}


def test_merge_generators_even_grid_with_swap():
    basis = hnf_reduce([(2, 0), (0, 2)], 2)
    pinv = build_pseudoinverse(basis)
    reps, assignment = reduce_points(pinv, basis, UNIT_SQUARE)
    witness = merge_classes_generators(reps, [SWAP], pinv, basis)
    labeling = finalize_labels(assignment, witness)
    assert labeling.partition() == {
        frozenset({(0, 0)}),
        frozenset({(0, 1), (1, 0)}),
        frozenset({(1, 1)}),
    }


def test_merge_generators_closure_cap():
    pinv, basis = diagonal_cell()
    reps = {(0, 1), (1, 0)}
    with pytest.raises(ClosureCapExceededError):
        merge_classes_generators(reps, [POINT_REFLECTION], pinv, basis, closure_cap=1)


def test_finalize_diagonal_reflection_classes():
    pinv, basis = diagonal_cell()
    reps, assignment = reduce_points(pinv, basis, UNIT_SQUARE)
    witness = merge_classes_group(
        reps, [SignedPermutation.identity(2), POINT_REFLECTION], pinv, basis)
    labeling = finalize_labels(assignment, witness)
    assert labeling.partition() == {
        frozenset({(0, 0), (1, 1)}), frozenset({(0, 1), (1, 0)})}
    assert labeling.labels[(1, 1)] == (0, 0)
    assert labeling.classes[(0, 1)] == ((0, 1), (1, 0))


def test_finalize_translations_only_keeps_singletons():
    basis = hnf_reduce([(2, 0), (0, 2)], 2)
    pinv = build_pseudoinverse(basis)
    reps, assignment = reduce_points(pinv, basis, UNIT_SQUARE)
    witness = merge_classes_group(reps, [SignedPermutation.identity(2)], pinv, basis)
    labeling = finalize_labels(assignment, witness)
    assert len(labeling.classes) == 4
    assert labeling.labels[(0, 0)] != labeling.labels[(1, 1)]


def test_finalize_empty():
    labeling = finalize_labels({}, {})
    assert labeling.labels == {} and labeling.classes == {}


def test_finalize_inconsistent_inputs_is_an_error():
    with pytest.raises(KeyError):
        finalize_labels({(0, 0): (0, 0)}, {})


def test_labels_canonical_to_class_minimum():
    # witnesses deliberately not the minima; finalize must rewrite them
    assignment = {(5, 0): (5, 0), (1, 0): (1, 0), (3, 0): (3, 0)}
    witness = {(5, 0): (5, 0), (1, 0): (5, 0), (3, 0): (5, 0)}
    labeling = finalize_labels(assignment, witness)
    assert set(labeling.labels.values()) == {(1, 0)}
    assert labeling.classes == {(1, 0): ((1, 0), (3, 0), (5, 0))}


def test_generator_invariance_of_labels():
    rng = Random(701)
    for _ in range(25):
        gens, points = random_sweep_instance(rng)
        stage1 = run_stage1(gens)
        reps, assignment = reduce_points(stage1.pinv, stage1.basis, points)
        witness = merge_classes_group(
            reps, stage1.rotation_group().elements, stage1.pinv, stage1.basis)
        labeling = finalize_labels(assignment, witness)
        pts = set(labeling.labels)
        for g in gens.members():
            for x in pts:
                y = g.apply(x)
                if y in pts:
                    assert labeling.labels[x] == labeling.labels[y]


def test_pick_order_does_not_change_the_partition():
    # random-pick reimplementation of the group-mode sweep
    def merge_random_pick(reps, rotations, pinv, basis, rng):
        remaining = set(reps)
        witness = {}
        while remaining:
            w = rng.choice(sorted(remaining))
            images = {rotate_mod_lattice(pinv, basis, r, w) for r in rotations}
            cls = (images & remaining) | {w}
            for p in cls:
                witness[p] = w
            remaining -= cls
        return witness

    rng = Random(702)
    for _ in range(15):
        gens, points = random_sweep_instance(rng)
        stage1 = run_stage1(gens)
        reps, assignment = reduce_points(stage1.pinv, stage1.basis, points)
        rotations = stage1.rotation_group().elements
        lex = merge_classes_group(reps, rotations, stage1.pinv, stage1.basis)
        rnd = merge_random_pick(reps, rotations, stage1.pinv, stage1.basis, rng)
        assert finalize_labels(assignment, lex) == finalize_labels(assignment, rnd)


def test_classes_merge_even_when_paths_leave_the_window():
    # the connecting path (1,0) -> (-1,0) -> (0,1) exits the unit square,
    # yet the pipeline must still identify (1,0) with (0,1)
    gens = validate_atomic(
        [Isometry.translation((1, 1)), Isometry.rotation(POINT_REFLECTION)], 2)
    stage1 = run_stage1(gens)
    reps, assignment = reduce_points(stage1.pinv, stage1.basis, UNIT_SQUARE)
    witness = merge_classes_group(
        reps, stage1.rotation_group().elements, stage1.pinv, stage1.basis)
    labeling = finalize_labels(assignment, witness)
    assert labeling.labels[(1, 0)] == labeling.labels[(0, 1)]
    # a window-bound walk cannot see it
    assert bfs_orbits(gens, UNIT_SQUARE, padding=0) != labeling.partition()

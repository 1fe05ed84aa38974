"""The rotation subgroup assembled from its negation and permutation parts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .isometry import SignedPermutation
from .permgroup import PermGroup


@dataclass(frozen=True)
class RotationGroup:
    """Explicit element list of a rotation subgroup, canonically sorted."""

    n: int
    elements: tuple[SignedPermutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def assemble_rotation_group(
    negations: Sequence[SignedPermutation],
    perms: PermGroup,
) -> RotationGroup:
    """Pair every negation with every permutation (negation applied last).

    The split of a rotation into a diagonal sign matrix following a
    permutation matrix is unique, so the product set has exactly
    len(negations) * perms.order distinct elements; the assert below guards
    that in debug runs.
    """
    elements = [
        SignedPermutation(neg.signs, perm)
        for neg in negations
        for perm in perms.elements
    ]
    elements.sort()
    assert len(set(elements)) == len(elements), "collision in negation/permutation products"
    return RotationGroup(perms.n, tuple(elements))

"""Closure of coordinate permutations into the full generated subgroup."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionTooLargeError, InvalidRotationError

Perm = tuple[int, ...]

# The closure holds up to n! elements; past this dimension, refuse instead
# of silently eating memory. Raise via the max_dimension argument if needed.
DEFAULT_MAX_DIMENSION = 10


def compose_perms(a: Perm, b: Perm) -> Perm:
    """Permutation acting as a after b, matching SignedPermutation.compose."""
    return tuple(b[i] for i in a)


@dataclass(frozen=True)
class PermGroup:
    """All elements of a permutation subgroup, sorted in one-line notation."""

    n: int
    elements: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def generate_perm_group(
    gens: Iterable[Sequence[int]],
    n: int,
    max_dimension: int = DEFAULT_MAX_DIMENSION,
) -> PermGroup:
    """Breadth-first closure of the generators into the whole subgroup.

    Every element of a finite group is a product of generators (inverses are
    positive powers), so the frontier walk below reaches everything.
    """
    if n > max_dimension:
        raise DimensionTooLargeError(
            f"dimension {n} exceeds the closure cap {max_dimension} "
            f"(the subgroup can hold up to {math.factorial(n)} elements)")
    gen_list = sorted({tuple(int(i) for i in g) for g in gens})
    for g in gen_list:
        if sorted(g) != list(range(n)):
            raise InvalidRotationError(f"not a permutation of 0..{n - 1}: {g}")
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gen_list:
                b = compose_perms(a, g)
                if b not in seen:
                    seen.add(b)
                    fresh.append(b)
        frontier = fresh
    return PermGroup(n, tuple(sorted(seen)))

"""Exact isometries of the integer lattice Z^n.

An isometry is stored in factored form: a translation vector ``v`` plus a
signed permutation ``r`` (the only orthogonal integer matrices), acting as

    h(x) = R*x + v

i.e. rotate first, translate second. This convention is fixed once here and
used everywhere else. The (v, R) pair of a given map is unique, so equality
of pairs is equality of maps. All coordinates are Python ints and therefore
arbitrary precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, InvalidRotationError, NotAtomicError

Point = tuple[int, ...]


def as_point(coords: Sequence[int]) -> Point:
    return tuple(int(c) for c in coords)


def _require_same_dim(a: int, b: int, what: str) -> None:
    if a != b:
        raise DimensionMismatchError(f"{what}: dimension {a} does not match {b}")


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """Rotation of Z^n stored compactly as a sign vector and a permutation.

    Applying it to x yields y with y[i] = signs[i] * x[perm[i]]; the dense
    matrix (see :meth:`matrix`) is never built outside of tests.
    """

    signs: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        if len(self.signs) != len(self.perm):
            raise InvalidRotationError(
                f"signs ({len(self.signs)}) and perm ({len(self.perm)}) lengths differ")
        if any(s not in (1, -1) for s in self.signs):
            raise InvalidRotationError(f"signs must be +1 or -1: {self.signs}")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise InvalidRotationError(f"perm is not a bijection of 0..n-1: {self.perm}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls((1,) * n, tuple(range(n)))

    @classmethod
    def negation(cls, signs: Sequence[int]) -> "SignedPermutation":
        return cls(tuple(signs), tuple(range(len(signs))))

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "SignedPermutation":
        return cls((1,) * len(perm), tuple(perm))

    def apply(self, x: Sequence[int]) -> Point:
        _require_same_dim(len(x), self.n, "rotation applied to point")
        return tuple(s * x[p] for s, p in zip(self.signs, self.perm))

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """Rotation acting as self after other: (self.compose(other))(x) = self(other(x))."""
        _require_same_dim(self.n, other.n, "rotation composition")
        return SignedPermutation(
            tuple(s * other.signs[p] for s, p in zip(self.signs, self.perm)),
            tuple(other.perm[p] for p in self.perm),
        )

    def inverse(self) -> "SignedPermutation":
        inv_perm = [0] * self.n
        for i, p in enumerate(self.perm):
            inv_perm[p] = i
        return SignedPermutation(tuple(self.signs[i] for i in inv_perm), tuple(inv_perm))

    def is_identity(self) -> bool:
        return self.is_negation() and all(s == 1 for s in self.signs)

    def is_negation(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm))

    def is_permutation(self) -> bool:
        return all(s == 1 for s in self.signs)

    def negation_part(self) -> "SignedPermutation":
        """The diagonal factor of the unique negation-then-permutation split."""
        return SignedPermutation.negation(self.signs)

    def permutation_part(self) -> "SignedPermutation":
        return SignedPermutation.permutation(self.perm)

    def matrix(self) -> list[list[int]]:
        """Dense n x n matrix; for tests and debugging only."""
        out = [[0] * self.n for _ in range(self.n)]
        for i, (s, p) in enumerate(zip(self.signs, self.perm)):
            out[i][p] = s
        return out


@dataclass(frozen=True, order=True)
class Isometry:
    """Isometry of Z^n in its unique translation/rotation factorization."""

    v: Point
    r: SignedPermutation

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(int(c) for c in self.v))
        _require_same_dim(len(self.v), self.r.n, "isometry translation vs rotation")

    @property
    def n(self) -> int:
        return self.r.n

    @classmethod
    def identity(cls, n: int) -> "Isometry":
        return cls((0,) * n, SignedPermutation.identity(n))

    @classmethod
    def translation(cls, v: Sequence[int]) -> "Isometry":
        return cls(tuple(v), SignedPermutation.identity(len(v)))

    @classmethod
    def rotation(cls, r: SignedPermutation) -> "Isometry":
        return cls((0,) * r.n, r)

    def apply(self, x: Sequence[int]) -> Point:
        _require_same_dim(len(x), self.n, "isometry applied to point")
        return tuple(s * x[p] + c for s, p, c in zip(self.r.signs, self.r.perm, self.v))

    def compose(self, other: "Isometry") -> "Isometry":
        """Isometry acting as self after other: factorization (v1 + R1*v2, R1*R2)."""
        _require_same_dim(self.n, other.n, "isometry composition")
        return Isometry(
            tuple(a + b for a, b in zip(self.v, self.r.apply(other.v))),
            self.r.compose(other.r),
        )

    def invert(self) -> "Isometry":
        rinv = self.r.inverse()
        return Isometry(tuple(-c for c in rinv.apply(self.v)), rinv)

    def is_identity(self) -> bool:
        return self.is_translation() and not any(self.v)

    def is_translation(self) -> bool:
        return self.r.is_identity()

    def is_rotation(self) -> bool:
        return not any(self.v)

    def is_negation(self) -> bool:
        return self.is_rotation() and self.r.is_negation()

    def is_permutation(self) -> bool:
        return self.is_rotation() and self.r.is_permutation()


def project_components(h: Isometry) -> tuple[Isometry, Isometry, Isometry, Isometry]:
    """Split h into its pure translation, rotation, negation and permutation.

    Composing translation o negation o permutation (in that order) gives
    back h; each returned isometry is pure.
    """
    return (
        Isometry.translation(h.v),
        Isometry.rotation(h.r),
        Isometry.rotation(h.r.negation_part()),
        Isometry.rotation(h.r.permutation_part()),
    )


def conjugate(a: Isometry, b: Isometry) -> Isometry:
    """Conjugate of a by b, i.e. b o a o b^-1."""
    return b.compose(a).compose(b.invert())


@dataclass(frozen=True)
class GeneratingSet:
    """An atomic generating set, partitioned into its three pure kinds."""

    n: int
    translations: tuple[Isometry, ...]
    negations: tuple[Isometry, ...]
    permutations: tuple[Isometry, ...]

    def members(self) -> tuple[Isometry, ...]:
        return self.translations + self.negations + self.permutations

    def translation_vectors(self) -> list[Point]:
        return [g.v for g in self.translations]

    def negation_rotations(self) -> list[SignedPermutation]:
        return [g.r for g in self.negations]

    def permutation_rotations(self) -> list[SignedPermutation]:
        return [g.r for g in self.permutations]

    def rotation_generators(self) -> list[SignedPermutation]:
        """All rotation generators (negations first, then permutations)."""
        return [g.r for g in self.negations + self.permutations]


def validate_atomic(generators: Iterable[Isometry], n: int) -> GeneratingSet:
    """Partition generators into pure translations, negations and permutations.

    A generator mixing a nonzero translation with a nontrivial rotation is
    rejected rather than split: splitting would change the generated
    subgroup. The identity counts as a (trivial) translation.
    """
    translations: list[Isometry] = []
    negations: list[Isometry] = []
    permutations: list[Isometry] = []
    for idx, g in enumerate(generators):
        if g.n != n:
            raise DimensionMismatchError(
                f"generator {idx} has dimension {g.n}, expected {n}")
        if g.is_translation():
            translations.append(g)
        elif g.is_negation():
            negations.append(g)
        elif g.is_permutation():
            permutations.append(g)
        else:
            raise NotAtomicError(
                f"generator {idx} is not a pure translation, negation or "
                f"permutation: v={g.v}, signs={g.r.signs}, perm={g.r.perm}")
    return GeneratingSet(
        n,
        tuple(sorted(set(translations))),
        tuple(sorted(set(negations))),
        tuple(sorted(set(permutations))),
    )

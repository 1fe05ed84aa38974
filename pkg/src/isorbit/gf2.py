"""Boolean linear algebra for the negation side of a rotation subgroup.

Negations (coordinate sign flips) of Z^n form a vector space over GF(2):
composing two negations XORs their flipped-coordinate sets. A flip set is
bit-packed into a single int, bit i standing for coordinate i, so row
operations are single XORs on machine words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatchError
from .isometry import SignedPermutation


def mask_of(neg: SignedPermutation) -> int:
    """Bit mask of the coordinates a negation flips."""
    mask = 0
    for i, s in enumerate(neg.signs):
        if s < 0:
            mask |= 1 << i
    return mask


def negation_of(mask: int, n: int) -> SignedPermutation:
    return SignedPermutation.negation(
        tuple(-1 if mask >> i & 1 else 1 for i in range(n)))


def permute_mask(mask: int, perm: Sequence[int]) -> int:
    """Transport a flip mask along a coordinate permutation (conjugation).

    Conjugating the negation of the coordinate set A by the permutation p
    flips the set {i : p[i] in A} instead.
    """
    out = 0
    for i, p in enumerate(perm):
        if mask >> p & 1:
            out |= 1 << i
    return out


@dataclass(frozen=True)
class Gf2Basis:
    """Basis of a subspace of GF(2)^n in reduced row echelon form.

    Rows are bit-packed and sorted by pivot (lowest set bit); each pivot bit
    is zero in every other row, which makes the form unique per subspace.
    """

    n: int
    rows: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def span_size(self) -> int:
        return 1 << len(self.rows)


def rref(masks: Iterable[int], n: int) -> Gf2Basis:
    """Canonical reduced row echelon form of the span of the given masks.

    Independent of input order and duplicates; empty input gives the empty
    basis.
    """
    rows: list[int] = []
    for mask in masks:
        if mask >> n:
            raise DimensionMismatchError(f"mask {mask:#b} has bits beyond coordinate {n - 1}")
        for row in rows:
            if mask & (row & -row):
                mask ^= row
        if mask == 0:
            continue
        pivot = mask & -mask
        rows = [row ^ mask if row & pivot else row for row in rows]
        rows.append(mask)
        rows.sort(key=lambda row: row & -row)
    return Gf2Basis(n, tuple(rows))


def negation_basis_from_group(
    negations: Sequence[SignedPermutation],
    perms: Iterable[Sequence[int]],
    n: int,
) -> Gf2Basis:
    """Basis of the subgroup generated by the negations together with their
    conjugates under every permutation of the given (full) permutation group."""
    perm_list = [tuple(p) for p in perms]
    masks = [permute_mask(mask_of(g), p) for g in negations for p in perm_list]
    return rref(masks, n)


def negation_basis_from_generators(
    negations: Sequence[SignedPermutation],
    perm_gens: Iterable[Sequence[int]],
    n: int,
) -> Gf2Basis:
    """Same subspace as :func:`negation_basis_from_group`, touching only the
    permutation generators.

    Conjugates the current basis rows by each generator, re-reduces, and
    repeats until the basis stops changing. Every update strictly raises the
    dimension, so at most n updates can happen.
    """
    perm_list = [tuple(p) for p in perm_gens]
    basis = rref([mask_of(g) for g in negations], n)
    for _ in range(n + 1):
        masks = list(basis.rows)
        masks.extend(permute_mask(row, p) for row in basis.rows for p in perm_list)
        updated = rref(masks, n)
        if updated == basis:
            return basis
        basis = updated
    raise AssertionError("negation basis failed to stabilize")  # unreachable


def enumerate_negations(basis: Gf2Basis) -> list[SignedPermutation]:
    """All 2^dim negations spanned by the basis.

    Ordered lexicographically by the coefficient tuple over the basis rows
    (the identity, coefficient zero, always comes first).
    """
    d = basis.dim
    out = []
    for bits in range(1 << d):
        mask = 0
        for j in range(d):
            if bits >> (d - 1 - j) & 1:
                mask ^= basis.rows[j]
        out.append(negation_of(mask, basis.n))
    return out

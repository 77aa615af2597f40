"""Circular two-region inversion distance by lifting to the affine group.

For each of the 2n frames of reference the window is lifted to the
extended affine symmetric group by sending every position to the nearest
representative of its image; the Shi length of that lift is the distance in
this frame, and the circular distance is the minimum over frames.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ._backend import kernels
from .affine import ExtendedAffinePermutation
from .perm import (
    CircularArrangement,
    DihedralElement,
    InvalidArrangement,
    SortingWord,
    apply_generator,
    compose,
    dihedral_position_map,
    invert,
)

__all__ = [
    "LiftResult",
    "minimize_path",
    "minimal_lift",
    "circular_length",
    "circular_length_witness",
    "pair_distance",
    "relative_arrangement",
    "sort_by_uncrossings",
    "enumerate_geodesics",
]


@dataclass(frozen=True)
class LiftResult:
    frame: DihedralElement
    lifted: ExtendedAffinePermutation
    length: int


def minimize_path(n: int, i: int, image: int) -> int:
    """Move ``image`` by one period towards ``i`` if that is strictly closer."""
    return kernels.minimize_path(n, i, image)


def minimal_lift(a: CircularArrangement) -> ExtendedAffinePermutation:
    return ExtendedAffinePermutation(a.n, tuple(kernels.nearest_lift(a.window)))


def circular_length_witness(a: CircularArrangement) -> LiftResult:
    """Distance plus the first frame (in scan order) attaining it."""
    length, rotation, flipped, lifted = kernels.frame_scan(a.window)
    return LiftResult(
        DihedralElement(rotation, flipped),
        ExtendedAffinePermutation(a.n, lifted),
        length,
    )


def circular_length(a: CircularArrangement) -> int:
    return kernels.frame_scan(a.window)[0]


def relative_arrangement(a: CircularArrangement, b: CircularArrangement) -> CircularArrangement:
    """The element ``a^-1 b`` carrying genome ``a`` to genome ``b``."""
    if a.n != b.n:
        raise InvalidArrangement(f"size mismatch: {a.n} vs {b.n}")
    return compose(invert(a), b)


def pair_distance(a: CircularArrangement, b: CircularArrangement) -> int:
    return circular_length(relative_arrangement(a, b))


def _frame_letter(d: DihedralElement, n: int, i: int) -> int:
    # swapping frame positions i, i+1 swaps positions f(i), f(i+1) of the original
    f = dihedral_position_map(d, n)
    p, q = f(i), f(i % n + 1)
    return p if q == p % n + 1 else q


def sort_by_uncrossings(a: CircularArrangement) -> SortingWord:
    """A geodesic word sorting ``a`` into the dihedral class of the identity.

    Works in the first minimizing frame: repeatedly swaps the lowest-index
    circularly adjacent pair whose displacements are out of order,
    re-minimizing the two moved paths, restarting the scan after each swap.
    Letters are translated back to positions of ``a`` itself.
    """
    witness = circular_length_witness(a)
    frame_word = kernels.uncross(witness.lifted.images)
    if len(frame_word) != witness.length:
        raise RuntimeError(
            f"uncrossing produced {len(frame_word)} letters, expected {witness.length}"
        )
    n = a.n
    return tuple(_frame_letter(witness.frame, n, i) for i in frame_word)


def enumerate_geodesics(a: CircularArrangement, limit: int) -> list[SortingWord]:
    """Up to ``limit`` minimal sorting words, in lexicographic order.

    Backtracking over letters 1..n, only following swaps that lower the
    circular distance by one.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    n = a.n
    length = lru_cache(maxsize=None)(circular_length)
    found: list[SortingWord] = []
    prefix: list[int] = []

    def walk(current: CircularArrangement, remaining: int) -> None:
        if remaining == 0:
            found.append(tuple(prefix))
            return
        for i in range(1, n + 1):
            nxt = apply_generator(current, i)
            if length(nxt) == remaining - 1:
                prefix.append(i)
                walk(nxt, remaining - 1)
                prefix.pop()
                if len(found) >= limit:
                    return

    walk(a, length(a))
    return found

"""Extended affine permutations: periodic bijections of the integers.

An :class:`ExtendedAffinePermutation` with period ``n`` is stored by its
window ``images = (s(1), ..., s(n))`` and extended to all integers by
``s(i + k*n) = s(i) + k*n``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator

from ._backend import kernels

__all__ = [
    "InvalidAffinePermutation",
    "ExtendedAffinePermutation",
    "from_window",
    "identity",
    "shift",
    "generator",
    "is_balanced",
    "winding_number",
    "ascending_pairs",
    "crossing_number",
    "crossing_set",
    "crossing_sets",
    "shi_length",
    "shi_length_by_levels",
    "nett_crossing",
    "shift_images",
    "kill_extremal_step",
    "shortest_lift",
    "reduce_extremal_crossings",
    "compose",
    "invert",
    "right_multiply_generator",
]

AscendingPair = tuple[int, int]


class InvalidAffinePermutation(ValueError):
    pass


@dataclass(frozen=True)
class ExtendedAffinePermutation:
    n: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        n = self.n
        if n < 3:
            raise InvalidAffinePermutation(f"period must be at least 3, got {n}")
        if len(images) != n:
            raise InvalidAffinePermutation(
                f"window has {len(images)} entries, expected {n}"
            )
        residues = {x % n for x in images}
        if len(residues) != n:
            raise InvalidAffinePermutation(
                f"images {images} collide mod {n}; not a bijection of Z"
            )

    def __call__(self, i: int) -> int:
        k, r = divmod(i - 1, self.n)
        return self.images[r] + k * self.n

    def __str__(self) -> str:
        return ",".join(map(str, self.images))


def from_window(n: int, images: Iterable[int]) -> ExtendedAffinePermutation:
    return ExtendedAffinePermutation(n, tuple(images))


def identity(n: int) -> ExtendedAffinePermutation:
    return ExtendedAffinePermutation(n, tuple(range(1, n + 1)))


def shift(n: int, c: int = 1) -> ExtendedAffinePermutation:
    """The power ``tau**c`` of the unit shift ``i -> i + 1``."""
    return ExtendedAffinePermutation(n, tuple(range(1 + c, n + 1 + c)))


def generator(n: int, i: int) -> ExtendedAffinePermutation:
    """The affine transposition swapping ``i + k*n`` and ``i + 1 + k*n``."""
    return right_multiply_generator(identity(n), i)


def is_balanced(sigma: ExtendedAffinePermutation) -> bool:
    n = sigma.n
    return sum(sigma.images) == n * (n + 1) // 2


def winding_number(sigma: ExtendedAffinePermutation) -> int:
    n = sigma.n
    excess = sum(sigma.images) - n * (n + 1) // 2
    # residues form a complete system, so the excess is a multiple of n
    assert excess % n == 0
    return excess // n


def ascending_pairs(n: int) -> Iterator[AscendingPair]:
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            yield i, j


def crossing_number(sigma: ExtendedAffinePermutation, i: int, j: int) -> int:
    if not 1 <= i < j <= sigma.n:
        raise ValueError(f"({i}, {j}) is not an ascending pair in 1..{sigma.n}")
    m = sigma.images
    return (m[j - 1] - m[i - 1]) // sigma.n


def crossing_sets(sigma: ExtendedAffinePermutation) -> dict[int, set[AscendingPair]]:
    """Map each crossing number to its (non-empty) set of ascending pairs."""
    n, m = sigma.n, sigma.images
    out: dict[int, set[AscendingPair]] = defaultdict(set)
    for i, j in ascending_pairs(n):
        out[(m[j - 1] - m[i - 1]) // n].add((i, j))
    return dict(out)


def crossing_set(sigma: ExtendedAffinePermutation, k: int) -> set[AscendingPair]:
    n, m = sigma.n, sigma.images
    return {
        (i, j)
        for i, j in ascending_pairs(n)
        if k * n <= m[j - 1] - m[i - 1] < (k + 1) * n
    }


def shi_length(sigma: ExtendedAffinePermutation) -> int:
    """Minimal number of affine transpositions representing ``sigma``."""
    return kernels.shi_length(sigma.images)


def shi_length_by_levels(sigma: ExtendedAffinePermutation) -> int:
    """Shi length regrouped by crossing level: sum of k * (|I_k| + |I_-k|)."""
    sets = crossing_sets(sigma)
    top = max((abs(k) for k in sets), default=0)
    return sum(
        k * (len(sets.get(k, ())) + len(sets.get(-k, ()))) for k in range(1, top + 1)
    )


def nett_crossing(sigma: ExtendedAffinePermutation, i: int) -> int:
    """Signed count of strands crossing the strand of position ``i``.

    Pairs are always read in ascending order, so a partner ``j < i``
    contributes ``-crossing_number(j, i)``.
    """
    n, m = sigma.n, sigma.images
    if not 1 <= i <= n:
        raise ValueError(f"position {i} out of range 1..{n}")
    x = m[i - 1]
    after = sum((m[j] - x) // n for j in range(i, n))
    before = sum((x - m[j]) // n for j in range(i - 1))
    return after - before


def shift_images(
    sigma: ExtendedAffinePermutation, subset: Iterable[int]
) -> ExtendedAffinePermutation:
    """Add ``n`` to the image of every position in ``subset``."""
    n = sigma.n
    chosen = set(subset)
    if any(not 1 <= i <= n for i in chosen):
        raise ValueError(f"shift subset {sorted(chosen)} not within 1..{n}")
    return ExtendedAffinePermutation(
        n, tuple(x + n if p in chosen else x for p, x in enumerate(sigma.images, 1))
    )


def kill_extremal_step(
    sigma: ExtendedAffinePermutation,
) -> tuple[ExtendedAffinePermutation, set[int]] | None:
    """One shift removing the pairs of largest absolute crossing number.

    With ``a > 1`` the largest ``|crossing|`` present: if some pair crosses
    ``+a`` times, shift the left members of those pairs; otherwise shift the
    right members of the pairs crossing ``-a`` times. Returns ``None`` when
    every crossing number is already in {-1, 0, 1}.
    """
    sets = crossing_sets(sigma)
    alpha = max(abs(k) for k in sets)
    if alpha <= 1:
        return None
    if alpha in sets:
        subset = {i for i, _ in sets[alpha]}
    else:
        subset = {j for _, j in sets[-alpha]}
    return shift_images(sigma, subset), subset


def shortest_lift(sigma: ExtendedAffinePermutation) -> ExtendedAffinePermutation:
    """A minimum-length lift of the circular permutation ``sigma`` projects to.

    Scans the n relabelings ``x -> x - c``: each nearest lift, shifted back up
    by ``c``, is a lift of the original residues with the same Shi length.
    """
    n = sigma.n
    residues = [(x - 1) % n + 1 for x in sigma.images]
    best = None
    for c in range(n):
        relabeled = [(x - 1 - c) % n + 1 for x in residues]
        lifted = [y + c for y in kernels.nearest_lift(relabeled)]
        length = kernels.shi_length(lifted)
        if best is None or length < best[0]:
            best = (length, lifted)
    return ExtendedAffinePermutation(n, tuple(best[1]))


def reduce_extremal_crossings(
    sigma: ExtendedAffinePermutation, max_steps: int | None = None
) -> ExtendedAffinePermutation:
    """Shift images until every crossing number lies in {-1, 0, 1}.

    Applies :func:`kill_extremal_step` until it reports nothing left to do.
    The individual shifts never grow a nonzero crossing number but may turn
    zeros into +-1, so the total length can rise; if the result ends up
    longer than ``sigma`` it is replaced by :func:`shortest_lift`, which
    satisfies the same crossing bound. The output always represents the
    same circular permutation and is never longer than ``sigma``.
    """
    n = sigma.n
    if max_steps is None:
        # each step lowers max |crossing| or empties one side of it
        top = max(abs(k) for k in crossing_sets(sigma))
        max_steps = 2 * top + 2
    current = sigma
    for _ in range(max_steps):
        step = kill_extremal_step(current)
        if step is None:
            break
        current = step[0]
    else:
        raise RuntimeError(f"crossing reduction did not terminate in {max_steps} steps")
    if shi_length(current) > shi_length(sigma):
        current = shortest_lift(sigma)
    return current


def compose(
    sigma: ExtendedAffinePermutation, rho: ExtendedAffinePermutation
) -> ExtendedAffinePermutation:
    """The map ``i -> sigma(rho(i))``."""
    if sigma.n != rho.n:
        raise InvalidAffinePermutation(f"period mismatch: {sigma.n} vs {rho.n}")
    return ExtendedAffinePermutation(sigma.n, tuple(sigma(x) for x in rho.images))


def invert(sigma: ExtendedAffinePermutation) -> ExtendedAffinePermutation:
    n = sigma.n
    inv = [0] * n
    for i, x in enumerate(sigma.images, start=1):
        k, r = divmod(x - 1, n)
        inv[r] = i - k * n
    return ExtendedAffinePermutation(n, tuple(inv))


def right_multiply_generator(
    sigma: ExtendedAffinePermutation, i: int
) -> ExtendedAffinePermutation:
    """``sigma`` composed with the i-th affine transposition (images of i, i+1 swap)."""
    n = sigma.n
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    m = list(sigma.images)
    if i == n:
        m[n - 1], m[0] = m[0] + n, m[n - 1] - n
    else:
        m[i - 1], m[i] = m[i], m[i - 1]
    return ExtendedAffinePermutation(n, tuple(m))

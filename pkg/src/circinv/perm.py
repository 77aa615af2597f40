"""Circular arrangements in window notation and the dihedral frames acting on them.

Positions and labels are 1-based at every public interface. A window
``(w1, ..., wn)`` places label ``wp`` at circular position ``p``; position
``n`` is adjacent to position ``1``.

The generator ``i`` swaps the contents of circular positions ``i`` and
``i + 1`` (generator ``n`` swaps positions ``n`` and ``1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "InvalidArrangement",
    "CircularArrangement",
    "DihedralElement",
    "SortingWord",
    "parse_window",
    "identity",
    "apply_generator",
    "apply_word",
    "dihedral_elements",
    "compose_dihedral",
    "dihedral_position_map",
    "apply_dihedral",
    "dihedral_class",
    "is_sorted_circular",
    "inversion_count",
    "cut_linear_length",
    "compose",
    "invert",
]

MIN_REGIONS = 3

# letters are generator indices in 1..n
SortingWord = tuple[int, ...]


class InvalidArrangement(ValueError):
    """Raised for windows that are not permutations of 1..n, or n < 3."""


@dataclass(frozen=True)
class CircularArrangement:
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        window = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        if n < MIN_REGIONS:
            raise InvalidArrangement(
                f"need at least {MIN_REGIONS} regions, got {n}"
            )
        seen = set()
        for label in window:
            if not 1 <= label <= n:
                raise InvalidArrangement(f"label {label} out of range 1..{n}")
            if label in seen:
                raise InvalidArrangement(f"duplicate label {label}")
            seen.add(label)

    @property
    def n(self) -> int:
        return len(self.window)

    def __len__(self) -> int:
        return len(self.window)

    def __iter__(self) -> Iterator[int]:
        return iter(self.window)

    def __getitem__(self, position: int) -> int:
        """Label at 1-based circular position (taken mod n)."""
        return self.window[(position - 1) % len(self.window)]

    def __str__(self) -> str:
        return ",".join(map(str, self.window))


@dataclass(frozen=True)
class DihedralElement:
    """A frame of reference: flip (if set) then rotate by ``rotation``.

    Rotation ``k`` moves the label at position 1 to position ``1 + k``.
    The flip reverses the reading direction and keeps position 1 fixed.
    """

    rotation: int = 0
    flipped: bool = False


def parse_window(text: str, expected_n: int | None = None) -> CircularArrangement:
    """Parse ``"1,6,3,8,5,2,7,4"`` into a validated arrangement."""
    parts = [p.strip() for p in text.strip().split(",")]
    if not parts or any(p == "" for p in parts):
        raise InvalidArrangement(f"malformed window {text!r}")
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        raise InvalidArrangement(f"non-integer entry in window {text!r}") from None
    if expected_n is not None and len(values) != expected_n:
        raise InvalidArrangement(
            f"expected {expected_n} regions, got {len(values)}"
        )
    return CircularArrangement(values)


def identity(n: int) -> CircularArrangement:
    return CircularArrangement(tuple(range(1, n + 1)))


def _check_letter(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise InvalidArrangement(f"generator index {i} out of range 1..{n}")


def apply_generator(a: CircularArrangement, i: int) -> CircularArrangement:
    n = a.n
    _check_letter(n, i)
    w = list(a.window)
    j = i % n  # 0-based index of position i + 1
    w[i - 1], w[j] = w[j], w[i - 1]
    return CircularArrangement(tuple(w))


def apply_word(a: CircularArrangement, word: Iterable[int]) -> CircularArrangement:
    """Apply generators left to right."""
    n = a.n
    w = list(a.window)
    for i in word:
        _check_letter(n, i)
        j = i % n
        w[i - 1], w[j] = w[j], w[i - 1]
    return CircularArrangement(tuple(w))


def dihedral_elements(n: int) -> Iterator[DihedralElement]:
    """All 2n frames: rotations 0..n-1 unflipped, then flipped."""
    for flipped in (False, True):
        for k in range(n):
            yield DihedralElement(k, flipped)


def dihedral_position_map(d: DihedralElement, n: int):
    """Return ``f`` with ``apply_dihedral(a, d)[p] == a[f(p)]`` (1-based)."""
    k = d.rotation % n
    if d.flipped:
        return lambda p: (k + 1 - p) % n + 1
    return lambda p: (p - k - 1) % n + 1


def compose_dihedral(first: DihedralElement, second: DihedralElement, n: int) -> DihedralElement:
    """The element equal to applying ``first`` and then ``second``."""
    k1, k2 = first.rotation % n, second.rotation % n
    rotation = (k2 - k1) % n if second.flipped else (k2 + k1) % n
    return DihedralElement(rotation, first.flipped != second.flipped)


def apply_dihedral(a: CircularArrangement, d: DihedralElement) -> CircularArrangement:
    n = a.n
    w = a.window
    k = d.rotation % n
    if d.flipped:
        return CircularArrangement(tuple(w[(k - q) % n] for q in range(n)))
    return CircularArrangement(tuple(w[(q - k) % n] for q in range(n)))


def dihedral_class(a: CircularArrangement) -> frozenset[CircularArrangement]:
    return frozenset(apply_dihedral(a, d) for d in dihedral_elements(a.n))


def _is_sorted_window(w: Sequence[int]) -> bool:
    n = len(w)
    step = (w[1] - w[0]) % n
    if step not in (1, n - 1):
        return False
    return all((w[(q + 1) % n] - w[q]) % n == step for q in range(n))


def is_sorted_circular(a: CircularArrangement) -> bool:
    """True iff ``a`` is a rotation or reflection of the identity."""
    return _is_sorted_window(a.window)


def inversion_count(seq: Sequence[int]) -> int:
    """Number of pairs out of ascending order (linear adjacent-swap distance)."""
    return sum(
        1
        for p in range(len(seq))
        for q in range(p + 1, len(seq))
        if seq[p] > seq[q]
    )


def cut_linear_length(a: CircularArrangement) -> int:
    """Best adjacent-swap count when the circle is cut and sorted as a line.

    Minimum of :func:`inversion_count` over all 2n frames of ``a``.
    """
    return min(
        inversion_count(apply_dihedral(a, d).window) for d in dihedral_elements(a.n)
    )


def compose(a: CircularArrangement, b: CircularArrangement) -> CircularArrangement:
    """Window of the map ``p -> a(b(p))``."""
    if a.n != b.n:
        raise InvalidArrangement(f"size mismatch: {a.n} vs {b.n}")
    return CircularArrangement(tuple(a.window[x - 1] for x in b.window))


def invert(a: CircularArrangement) -> CircularArrangement:
    inv = [0] * a.n
    for p, label in enumerate(a.window, start=1):
        inv[label - 1] = p
    return CircularArrangement(tuple(inv))

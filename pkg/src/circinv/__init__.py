"""Exact two-region inversion distances between circular genome arrangements.

Circular permutations are lifted to the extended affine symmetric group,
where Shi's formula gives word length; the distance is the minimum over the
2n dihedral frames of reference.
"""

from ._backend import BACKEND
from .affine import ExtendedAffinePermutation, shi_length
from .lift import (
    LiftResult,
    circular_length,
    circular_length_witness,
    enumerate_geodesics,
    minimal_lift,
    pair_distance,
    sort_by_uncrossings,
)
from .perm import (
    CircularArrangement,
    DihedralElement,
    InvalidArrangement,
    apply_dihedral,
    apply_generator,
    apply_word,
    cut_linear_length,
    dihedral_class,
    is_sorted_circular,
    parse_window,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CircularArrangement",
    "DihedralElement",
    "ExtendedAffinePermutation",
    "InvalidArrangement",
    "LiftResult",
    "apply_dihedral",
    "apply_generator",
    "apply_word",
    "circular_length",
    "circular_length_witness",
    "cut_linear_length",
    "dihedral_class",
    "enumerate_geodesics",
    "is_sorted_circular",
    "minimal_lift",
    "pair_distance",
    "parse_window",
    "shi_length",
    "sort_by_uncrossings",
]

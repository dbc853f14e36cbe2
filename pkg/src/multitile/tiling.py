"""Z^n-tiling test by folding a region onto the unit torus."""

from __future__ import annotations

import itertools
import math

from .region import Region, bounding_box, intersect, union_all


def unit_cube(dim: int) -> Region:
    if dim == 1:
        return Region.interval(0, 1)
    return Region.polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def _shift_range(lo, hi):
    # shifts l with (lo + l, hi + l) meeting (0, 1) in an open set
    return range(math.floor(-hi) + 1, math.ceil(1 - lo))


def fold_to_torus(K: Region) -> list:
    """Pieces (l, (K + l) & [0,1)^n) with positive measure, sorted by l."""
    lo, hi = bounding_box(K)
    cube = unit_cube(K.dim)
    ranges = [_shift_range(a, b) for a, b in zip(lo, hi)]
    out = []
    for shift in itertools.product(*ranges):
        piece = intersect(K.translate(shift), cube)
        if piece.measure > 0:
            out.append((shift, piece))
    return out


def multiplicity_table(K: Region) -> list:
    return [(shift, piece.measure) for shift, piece in fold_to_torus(K)]


def is_lattice_tiling(K: Region) -> bool:
    if K.is_empty() or K.measure != 1:
        return False
    pieces = [p for _, p in fold_to_torus(K)]
    # total measure 1 and a union of measure 1 forces null pairwise overlaps
    return union_all(pieces, K.dim).measure == 1

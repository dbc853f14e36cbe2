"""Decide whether a Z^n-tiling set is an integral self-affine multi-tile and find its
minimal prototile decomposition, in exact rational arithmetic (n = 1, 2)."""

from .decompose import (
    ClassPartition,
    CoverFailure,
    DecompositionResult,
    DigitColumnSets,
    DigitMatrix,
    Partition,
    Status,
    decompose,
    digit_column_sets,
    digit_power,
    equivalence_classes,
    extract_digits,
    intersecting_translates,
    is_simplest_form,
    merge_by_classes,
    refine,
    verify_self_affine_collection,
)
from .lattice import IntMatrix, InvalidMatrix, det, is_complete_coset_set, is_expansive, same_coset
from .region import Region, affine_image, bounding_box, essentially_equal, intersect, measure, subtract
from .tiling import fold_to_torus, is_lattice_tiling

__all__ = [
    "ClassPartition", "CoverFailure", "DecompositionResult", "DigitColumnSets", "DigitMatrix",
    "IntMatrix", "InvalidMatrix", "Partition", "Region", "Status",
    "affine_image", "bounding_box", "decompose", "det", "digit_column_sets", "digit_power",
    "equivalence_classes", "essentially_equal", "extract_digits", "fold_to_torus", "intersect",
    "intersecting_translates", "is_complete_coset_set", "is_expansive", "is_lattice_tiling",
    "is_simplest_form", "measure", "merge_by_classes", "refine", "same_coset", "subtract",
    "verify_self_affine_collection",
]

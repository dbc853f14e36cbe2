"""Exact finite-depth approximations of self-affine attractors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .decompose import DigitMatrix, digit_column_sets
from .lattice import IntMatrix, det, is_complete_coset_set, require_expansive
from .region import Region, subtract, union_all
from .tiling import unit_cube


@dataclass(frozen=True)
class DigitSystem:
    B: IntMatrix
    digits: DigitMatrix

    def __post_init__(self):
        object.__setattr__(self, "B", require_expansive(self.B))
        if any(len(s) != self.B.n for row in self.digits.entries for cell in row for s in cell):
            raise ValueError("digit dimension does not match the matrix")

    @property
    def standard(self) -> bool:
        return all(is_complete_coset_set(D, self.B) for D in digit_column_sets(self.digits))


def inverse_rows(B: IntMatrix) -> tuple:
    d = det(B)
    return tuple(tuple(Fraction(v, d) for v in row) for row in B.adjugate())


def attractor_step(system: DigitSystem, current: list) -> list:
    """K_i <- B^-1 U_j (K_j + digits[i][j])."""
    dim = system.B.n
    inv = inverse_rows(system.B)
    out = []
    for i in range(system.digits.M):
        pieces = [current[j].translate(s)
                  for j in range(system.digits.M) for s in sorted(system.digits[i, j])]
        out.append(union_all(pieces, dim).linear_image(inv))
    return out


def attractor_approx(system: DigitSystem, seed: Region | None = None, depth: int = 0) -> list:
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if seed is None:
        seed = unit_cube(system.B.n)
    if seed.measure <= 0:
        raise ValueError("seed must have positive measure")
    current = [seed] * system.digits.M
    for _ in range(depth):
        current = attractor_step(system, current)
    return current


def attractor_sequence(system: DigitSystem, seed: Region | None = None, depth: int = 0) -> list:
    """Approximations at depths 0..depth, each the union over all indices."""
    if seed is None:
        seed = unit_cube(system.B.n)
    current = [seed] * system.digits.M
    dim = system.B.n
    seq = [union_all(current, dim)]
    for _ in range(depth):
        current = attractor_step(system, current)
        seq.append(union_all(current, dim))
    return seq


def excess_measures(approximations: list, reference: Region | None = None) -> list:
    """|A_d minus reference| for d >= 1; the reference defaults to A_(d-1).

    For sets of equal measure this is half the symmetric difference.
    """
    out = []
    for d in range(1, len(approximations)):
        ref = approximations[d - 1] if reference is None else reference
        out.append(subtract(approximations[d], ref).measure)
    return out


def symmetric_difference_measure(A: Region, B: Region) -> Fraction:
    return subtract(A, B).measure + subtract(B, A).measure

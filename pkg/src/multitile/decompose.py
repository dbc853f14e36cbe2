"""Minimal self-affine decomposition of a Z^n-tiling set.

The refinement builds, level by level, the atoms of the algebra generated by
K and the integer translates of B^k K (k = 1, 2, ...). As soon as the atoms
form a self-affine collection whose digit columns cannot be told apart by
any power, they are the unique minimal prototiles.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import InitVar, dataclass, field
from typing import Iterable

from .lattice import IntMatrix, is_complete_coset_set, require_expansive
from .region import (
    Region,
    affine_image,
    bounding_box,
    essentially_equal,
    intersect,
    subtract,
    union_all,
)
from .tiling import is_lattice_tiling

DEFAULT_MAX_DEPTH = 32


class CoverFailure(ValueError):
    """B * atom_i is not an essentially disjoint union of translated atoms."""

    def __init__(self, i: int, j: int | None = None, shift=None, reason: str = ""):
        self.i, self.j, self.shift = i, j, shift
        msg = f"atom {i}: {reason}" if reason else f"atom {i}"
        if j is not None:
            msg += f" (atom {j} shifted by {shift})"
        super().__init__(msg)


@dataclass(frozen=True)
class Partition:
    """Atoms of a partition of ``parent``, kept in canonical order."""

    atoms: tuple
    parent: Region
    sort: InitVar[bool] = True

    def __post_init__(self, sort):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", tuple(sorted(atoms)) if sort else atoms)

    @classmethod
    def trivial(cls, K: Region) -> "Partition":
        return cls((K,), K)

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __getitem__(self, i):
        return self.atoms[i]

    def is_valid(self) -> bool:
        if any(a.measure == 0 for a in self.atoms):
            return False
        total = sum((a.measure for a in self.atoms), 0)
        if total != self.parent.measure:
            return False
        return essentially_equal(union_all(self.atoms, self.parent.dim), self.parent)


@dataclass(frozen=True)
class DigitMatrix:
    """entries[i][j] is the set of shifts l with atom_j + l inside B^power atom_i."""

    entries: tuple
    power: int = 1

    def __post_init__(self):
        rows = tuple(tuple(frozenset(_pt(x) for x in cell) for cell in row) for row in self.entries)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("digit matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def M(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> frozenset:
        return frozenset().union(*(row[j] for row in self.entries))

    def tolist(self) -> list:
        return [[sorted(cell) for cell in row] for row in self.entries]


@dataclass(frozen=True)
class DigitColumnSets:
    columns: tuple
    power: int = 1

    def __getitem__(self, j):
        return self.columns[j]

    def __len__(self):
        return len(self.columns)


@dataclass(frozen=True)
class ClassPartition:
    """Equivalence classes of atom indices (0-based); depth None means stabilised."""

    classes: tuple
    depth: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "classes",
                           tuple(sorted(tuple(sorted(c)) for c in self.classes)))

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.classes)

    def as_sets(self) -> list:
        return [set(c) for c in self.classes]


class Status(enum.Enum):
    SELF_AFFINE = "SelfAffine"
    INCONCLUSIVE = "InconclusiveAtDepth"
    NOT_LATTICE_TILING = "NotLatticeTiling"


@dataclass(frozen=True)
class TraceLevel:
    level: int
    translates: tuple
    cutting: tuple
    atoms: int


@dataclass
class DecompositionResult:
    status: Status
    partition: Partition | None = None
    digits: DigitMatrix | None = None
    m0: int | None = None
    depth: int | None = None
    trace: list = field(default_factory=list)
    message: str = ""

    @property
    def prototiles(self) -> int | None:
        return None if self.partition is None else len(self.partition)


def _pt(x) -> tuple:
    return (int(x),) if isinstance(x, int) else tuple(int(v) for v in x)


def overlapping_shifts(moving: Region, fixed: Region) -> list:
    """All l in Z^n with measure((moving + l) & fixed) > 0, sorted."""
    if moving.is_empty() or fixed.is_empty():
        return []
    mlo, mhi = bounding_box(moving)
    flo, fhi = bounding_box(fixed)
    # open-box overlap: flo - mhi < l < fhi - mlo
    ranges = [range(math.floor(a - d) + 1, math.ceil(b - c))
              for a, b, c, d in zip(flo, fhi, mlo, mhi)]
    out = []
    for shift in itertools.product(*ranges):
        if intersect(moving.translate(shift), fixed).measure > 0:
            out.append(shift)
    return out


def intersecting_translates(K: Region, B, k: int) -> list:
    """Integer l with (B^k K + l) & K of positive measure."""
    return overlapping_shifts(affine_image(K, B, k), K)


def refine(P: Partition, K: Region, B, k: int, *, info: dict | None = None) -> Partition:
    """Split every atom by every level-k translate of K that cuts it."""
    Bk_K = affine_image(K, B, k)
    translates = overlapping_shifts(Bk_K, K)
    atoms = list(P.atoms)
    cutting = []
    for shift in translates:
        T = Bk_K.translate(shift)
        if intersect(K, T).measure == K.measure:
            continue
        nxt = []
        hit = False
        for A in atoms:
            inside = intersect(A, T)
            if inside.measure == 0 or inside.measure == A.measure:
                nxt.append(A)
                continue
            nxt += [inside, subtract(A, T)]
            hit = True
        if hit:
            cutting.append(shift)
        atoms = nxt
    if info is not None:
        info["translates"] = tuple(translates)
        info["cutting"] = tuple(cutting)
    return Partition(tuple(atoms), P.parent)


def extract_digits(P: Partition, B) -> DigitMatrix:
    """Read off the digit matrix of a candidate collection, or raise CoverFailure."""
    B = IntMatrix.of(B)
    M = len(P)
    rows = []
    for i, A in enumerate(P.atoms):
        BA = affine_image(A, B, 1)
        row = []
        total = 0
        for j, Aj in enumerate(P.atoms):
            cell = set()
            for shift in overlapping_shifts(Aj, BA):
                piece = intersect(Aj.translate(shift), BA)
                if piece.measure != Aj.measure:
                    raise CoverFailure(i, j, shift, "translated atom sticks out of the dilation")
                cell.add(shift)
                total += Aj.measure
            row.append(cell)
        if total != BA.measure:
            raise CoverFailure(i, reason=f"translated atoms have measure {total}, dilation {BA.measure}")
        rows.append(row)
    assert len(rows) == M
    return DigitMatrix(tuple(tuple(r) for r in rows), 1)


def verify_self_affine_collection(P: Partition, B, gamma: DigitMatrix) -> bool:
    """Check B P_i = U_j (P_j + gamma[i][j]) with null overlaps, for every i."""
    B = IntMatrix.of(B)
    if gamma.M != len(P):
        return False
    dim = P.parent.dim
    for i, A in enumerate(P.atoms):
        pieces = [P.atoms[j].translate(s) for j in range(gamma.M) for s in sorted(gamma[i, j])]
        if any(len(s) != dim for j in range(gamma.M) for s in gamma[i, j]):
            return False
        cover = union_all(pieces, dim)
        if cover.measure != sum((p.measure for p in pieces), 0):
            return False
        if not essentially_equal(cover, affine_image(A, B, 1)):
            return False
    return True


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def next_power(prev: DigitMatrix, base: DigitMatrix, B) -> DigitMatrix:
    """gamma^m[i][j] = U_l (gamma[l][j] + B gamma^(m-1)[i][l])."""
    B = IntMatrix.of(B)
    M = base.M
    rows = []
    for i in range(M):
        row = []
        for j in range(M):
            out = set()
            for l in range(M):
                if not base[l, j] or not prev[i, l]:
                    continue
                scaled = [B.apply(x) for x in prev[i, l]]
                out.update(_add(g, s) for g in base[l, j] for s in scaled)
            row.append(out)
        rows.append(row)
    return DigitMatrix(tuple(tuple(r) for r in rows), prev.power + 1)


def digit_power(gamma: DigitMatrix, B, m: int) -> DigitMatrix:
    if m < 1:
        raise ValueError("power must be >= 1")
    out = gamma
    while out.power < m:
        out = next_power(out, gamma, B)
    return out


def digit_column_sets(gamma: DigitMatrix) -> DigitColumnSets:
    return DigitColumnSets(tuple(gamma.column(j) for j in range(gamma.M)), gamma.power)


def _split_classes(classes: Iterable, columns: DigitColumnSets) -> list:
    out = []
    for cls in classes:
        groups: dict = {}
        for i in cls:
            groups.setdefault(columns[i], []).append(i)
        out.extend(groups.values())
    return out


def equivalence_classes(gamma: DigitMatrix, B, depth: int) -> ClassPartition:
    """Indices whose column sets D^k agree for every k <= depth."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    classes = [list(range(gamma.M))]
    power = gamma
    for k in range(1, depth + 1):
        if k > 1:
            power = next_power(power, gamma, B)
        classes = _split_classes(classes, digit_column_sets(power))
    return ClassPartition(classes, depth)


def stable_classes(gamma: DigitMatrix, B, depth_cap: int = DEFAULT_MAX_DEPTH) -> ClassPartition:
    """Classes at the depth where refinement stops (unchanged twice in a row)."""
    classes = ClassPartition([range(gamma.M)], 0)
    power = None
    unchanged = 0
    for k in range(1, depth_cap + 1):
        power = gamma if power is None else next_power(power, gamma, B)
        split = ClassPartition(_split_classes(classes.classes, digit_column_sets(power)), k)
        unchanged = unchanged + 1 if split.classes == classes.classes else 0
        classes = split
        if classes.is_discrete() or unchanged >= 2:
            break
    return classes


def merge_by_classes(P: Partition, C: ClassPartition) -> Partition:
    covered = sorted(i for c in C.classes for i in c)
    if covered != list(range(len(P))):
        raise ValueError("classes do not partition the atom indices")
    merged = [union_all((P.atoms[i] for i in c), P.parent.dim) for c in C.classes]
    return Partition(tuple(merged), P.parent)


def merged_digits(P: Partition, gamma: DigitMatrix, C: ClassPartition) -> DigitMatrix:
    """Digits of merge_by_classes(P, C): rows union over a class, any column of a class."""
    merged = merge_by_classes(P, C)
    by_region = {union_all((P.atoms[i] for i in c), P.parent.dim): c for c in C.classes}
    order = [by_region[a] for a in merged.atoms]
    rows = []
    for s in order:
        row = []
        for t in order:
            row.append(frozenset().union(*(gamma[i, t[0]] for i in s)))
        rows.append(tuple(row))
    return DigitMatrix(tuple(rows), 1)


def is_simplest_form(P: Partition, B, depth_cap: int = DEFAULT_MAX_DEPTH) -> bool:
    gamma = extract_digits(P, B)
    return stable_classes(gamma, B, depth_cap).is_discrete()


def decompose(K: Region, B, max_depth: int = DEFAULT_MAX_DEPTH) -> DecompositionResult:
    B = require_expansive(B)
    if B.n != K.dim:
        raise ValueError("matrix and region dimensions differ")
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    if not is_lattice_tiling(K):
        return DecompositionResult(Status.NOT_LATTICE_TILING, message="region does not tile by Z^n")

    P = Partition.trivial(K)
    trace = []
    unchanged = 0
    for m in range(1, max_depth + 1):
        info: dict = {}
        nxt = refine(P, K, B, m, info=info)
        trace.append(TraceLevel(m, info["translates"], info["cutting"], len(nxt)))
        unchanged = unchanged + 1 if nxt == P else 0
        P = nxt
        try:
            gamma = extract_digits(P, B)
        except CoverFailure as exc:
            failure = str(exc)
            gamma = None
        else:
            failure = "digit check failed"
            if not verify_self_affine_collection(P, B, gamma):
                gamma = None
        if gamma is not None:
            cols = digit_column_sets(gamma)
            if not all(is_complete_coset_set(D, B) for D in cols):
                return DecompositionResult(Status.INCONCLUSIVE, depth=m, trace=trace,
                                           message="self-affine collection with a non-standard digit column")
            if stable_classes(gamma, B, max(max_depth, len(P) + 2)).is_discrete():
                return DecompositionResult(Status.SELF_AFFINE, P, gamma, m0=m, depth=m, trace=trace)
        if unchanged >= 2 and gamma is None:
            return DecompositionResult(Status.INCONCLUSIVE, depth=m, trace=trace,
                                       message=f"partition stabilised without a self-affine cover: {failure}")
    return DecompositionResult(Status.INCONCLUSIVE, depth=max_depth, trace=trace,
                               message=f"no self-affine collection up to depth {max_depth}")

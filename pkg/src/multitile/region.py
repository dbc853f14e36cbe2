"""Exact boolean algebra of bounded regions in R^1 and R^2.

A region is a finite union of convex cells with pairwise null overlaps.
All predicates hold modulo Lebesgue-null sets: boundaries are never
distinguished, and pieces of zero measure are dropped as soon as they
appear.

Cells are plain tuples so that canonical regions compare and hash by value:

* n = 1: ``(a, b)`` with ``a < b``
* n = 2: a tuple of ``(x, y)`` vertices, counterclockwise, strictly convex,
  starting at the lexicographically smallest vertex

Canonical form for n = 2 is a vertical-slab trapezoid decomposition: slab
boundaries sit exactly at the x-coordinates where the region's boundary
changes, and each slab holds its maximal trapezoids. It depends only on the
point set, so two presentations of the same region compare equal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .lattice import IntMatrix, det

Rat = Fraction


def rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}")
    return Fraction(x)


# ---------------------------------------------------------------------------
# polygon primitives


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polygon_area2(pts) -> Fraction:
    """Twice the signed shoelace area."""
    s = Fraction(0)
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s


def _simplify(pts) -> list:
    """Drop repeated and collinear vertices of a convex ring."""
    out = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    changed = True
    while changed and len(out) >= 3:
        changed = False
        for i in range(len(out)):
            a, b, c = out[i - 1], out[i], out[(i + 1) % len(out)]
            if _cross(a, b, c) == 0:
                del out[i]
                changed = True
                break
    return out


def _rotate_min(pts) -> tuple:
    k = min(range(len(pts)), key=lambda i: pts[i])
    return tuple(pts[k:] + pts[:k])


def convex_cell(points: Iterable) -> tuple | None:
    """Normalise a convex vertex list; None for degenerate input.

    Raises ValueError if the points do not form a convex polygon.
    """
    pts = [(rat(x), rat(y)) for x, y in points]
    pts = _simplify(pts)
    if len(pts) < 3:
        return None
    a2 = polygon_area2(pts)
    if a2 == 0:
        return None
    if a2 < 0:
        pts.reverse()
    n = len(pts)
    for i in range(n):
        if _cross(pts[i - 1], pts[i], pts[(i + 1) % n]) <= 0:
            raise ValueError("cell is not strictly convex")
    # all left turns still admits star polygons; a convex ring has one lexicographic minimum
    minima = sum(1 for i in range(n) if pts[i - 1] > pts[i] < pts[(i + 1) % n])
    if minima != 1:
        raise ValueError("cell is not convex (self-intersecting ring)")
    return _rotate_min(pts)


def convex_hull(points: Iterable) -> tuple | None:
    """Exact convex hull (monotone chain) as a normalised cell."""
    pts = sorted({(rat(x), rat(y)) for x, y in points})
    if len(pts) < 3:
        return None

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = chain(pts), chain(reversed(pts))
    return convex_cell(lower[:-1] + upper[:-1])


def _clip(poly: list, a, b, keep_left: bool) -> list:
    """Clip a convex ring by the closed half-plane left (or right) of a->b."""
    out = []
    n = len(poly)
    if n == 0:
        return out
    sides = [_cross(a, b, p) for p in poly]
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        sp, sq = sides[i], sides[(i + 1) % n]
        if not keep_left:
            sp, sq = -sp, -sq
        if sp >= 0:
            out.append(p)
        if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
            t = sp / (sp - sq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _finish(pts: list) -> tuple | None:
    pts = _simplify(pts)
    if len(pts) < 3 or polygon_area2(pts) == 0:
        return None
    return tuple(pts)


def _cell_bbox2(cell):
    xs = [p[0] for p in cell]
    ys = [p[1] for p in cell]
    return min(xs), min(ys), max(xs), max(ys)


def _boxes_overlap(b1, b2) -> bool:
    return b1[0] < b2[2] and b2[0] < b1[2] and b1[1] < b2[3] and b2[1] < b1[3]


def _poly_intersect(p: tuple, q: tuple) -> tuple | None:
    ring = list(p)
    n = len(q)
    for i in range(n):
        ring = _clip(ring, q[i], q[(i + 1) % n], True)
        if len(ring) < 3:
            return None
    return _finish(ring)


def _poly_subtract(p: tuple, q: tuple) -> list:
    """Convex pieces of p minus convex q."""
    pieces = []
    rest = list(p)
    n = len(q)
    for i in range(n):
        a, b = q[i], q[(i + 1) % n]
        outside = _finish(_clip(rest, a, b, False))
        if outside is not None:
            pieces.append(outside)
        rest = _clip(rest, a, b, True)
        if len(rest) < 3 or _finish(rest) is None:
            break
    return pieces


# ---------------------------------------------------------------------------
# slab canonicalisation (n = 2)


def _chord(cell, x):
    """(min y, max y) of the vertical line at x through a convex cell."""
    ys = []
    n = len(cell)
    for i in range(n):
        (x0, y0), (x1, y1) = cell[i], cell[(i + 1) % n]
        if x0 == x1:
            if x0 == x:
                ys += [y0, y1]
        elif min(x0, x1) <= x <= max(x0, x1):
            ys.append(y0 + (x - x0) * (y1 - y0) / (x1 - x0))
    return min(ys), max(ys)


def _line(xl, yl, xr, yr):
    slope = (yr - yl) / (xr - xl)
    return slope, yl - slope * xl


def _canon2(cells: Sequence[tuple]) -> tuple:
    cells = [c for c in cells if c is not None]
    if not cells:
        return ()
    xs = sorted({p[0] for c in cells for p in c})
    ranges = [(min(p[0] for p in c), max(p[0] for p in c)) for c in cells]
    slabs = []  # (xl, xr, tuple of (lo_line, hi_line))
    for xl, xr in zip(xs, xs[1:]):
        xm = (xl + xr) / 2
        pieces = []
        for c, (cx0, cx1) in zip(cells, ranges):
            if cx0 <= xl and xr <= cx1:
                lo_l, hi_l = _chord(c, xl)
                lo_r, hi_r = _chord(c, xr)
                if hi_l - lo_l + hi_r - lo_r > 0:
                    lo = _line(xl, lo_l, xr, lo_r)
                    hi = _line(xl, hi_l, xr, hi_r)
                    pieces.append((lo[0] * xm + lo[1], lo, hi))
        pieces.sort(key=lambda t: t[0])
        merged = []
        for _, lo, hi in pieces:
            if merged and merged[-1][1] == lo:
                merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        key = tuple(merged)
        if slabs and slabs[-1][2] == key:
            slabs[-1] = (slabs[-1][0], xr, key)
        else:
            slabs.append((xl, xr, key))
    out = []
    for xl, xr, key in slabs:
        for lo, hi in key:
            ring = [(xl, lo[0] * xl + lo[1]), (xr, lo[0] * xr + lo[1]),
                    (xr, hi[0] * xr + hi[1]), (xl, hi[0] * xl + hi[1])]
            cell = _finish(ring)
            if cell is not None:
                out.append(_rotate_min(list(cell)))
    out.sort()
    return tuple(out)


def _canon1(cells: Iterable[tuple]) -> tuple:
    ivs = sorted((a, b) for a, b in cells if b > a)
    out = []
    for a, b in ivs:
        if out and a <= out[-1][1]:
            if b > out[-1][1]:
                out[-1] = (out[-1][0], b)
        else:
            out.append((a, b))
    return tuple(out)


# ---------------------------------------------------------------------------


class Region:
    """Canonical finite union of convex cells, compared modulo null sets.

    Construct with :meth:`from_cells` for untrusted input, which validates
    convexity and pairwise essential disjointness.
    """

    def __init__(self, dim: int, cells: Iterable = (), *, _canonical: bool = False):
        if dim not in (1, 2):
            raise ValueError("only dimensions 1 and 2 are supported")
        self.dim = dim
        cells = tuple(cells)
        if not _canonical:
            cells = _canon1(cells) if dim == 1 else _canon2(cells)
        self.cells = cells

    @classmethod
    def empty(cls, dim: int) -> "Region":
        return cls(dim, (), _canonical=True)

    @classmethod
    def interval(cls, a, b) -> "Region":
        a, b = rat(a), rat(b)
        if not a < b:
            raise ValueError(f"interval [{a}, {b}] has no positive length")
        return cls(1, [(a, b)], _canonical=True)

    @classmethod
    def polygon(cls, points) -> "Region":
        cell = convex_cell(points)
        if cell is None:
            raise ValueError("polygon has zero area")
        return cls(2, [cell])

    @classmethod
    def from_cells(cls, dim: int, cells: Iterable) -> "Region":
        """Build a region from raw cells, rejecting overlaps and degeneracy."""
        out = cls.empty(dim)
        for raw in cells:
            piece = cls.interval(*raw) if dim == 1 else cls.polygon(raw)
            if intersect(out, piece).measure != 0:
                raise ValueError("cells overlap in positive measure")
            out = Region(dim, out.cells + piece.cells)
        return out

    @cached_property
    def measure(self) -> Fraction:
        if self.dim == 1:
            return sum((b - a for a, b in self.cells), Fraction(0))
        return sum((polygon_area2(c) for c in self.cells), Fraction(0)) / 2

    @cached_property
    def _boxes(self) -> list:
        if self.dim == 1:
            return list(self.cells)
        return [_cell_bbox2(c) for c in self.cells]

    def is_empty(self) -> bool:
        return not self.cells

    def __eq__(self, other):
        return isinstance(other, Region) and self.dim == other.dim and self.cells == other.cells

    def __hash__(self):
        return hash((self.dim, self.cells))

    def __lt__(self, other: "Region"):
        return self.cells < other.cells

    def __repr__(self):
        def fmt(v):
            return str(v)
        if self.dim == 1:
            body = ", ".join(f"[{fmt(a)}, {fmt(b)}]" for a, b in self.cells)
        else:
            body = ", ".join(
                "conv{" + ", ".join(f"({fmt(x)}, {fmt(y)})" for x, y in c) + "}" for c in self.cells)
        return f"Region({body or 'empty'})"

    def translate(self, shift) -> "Region":
        shift = (shift,) if isinstance(shift, int) else tuple(shift)
        if not any(shift):
            return self
        if self.dim == 1:
            (s,) = shift
            return Region(1, ((a + s, b + s) for a, b in self.cells), _canonical=True)
        sx, sy = shift
        return Region(2, (tuple((x + sx, y + sy) for x, y in c) for c in self.cells), _canonical=True)

    def linear_image(self, rows) -> "Region":
        """Image under an invertible matrix with rational entries."""
        rows = tuple(tuple(rat(v) for v in r) for r in rows)
        if self.dim == 1:
            (s,), = rows
            if s == 0:
                raise ValueError("singular map")
            return Region(1, (tuple(sorted((a * s, b * s))) for a, b in self.cells))
        (a, b), (c, d) = rows
        if a * d - b * c == 0:
            raise ValueError("singular map")
        out = []
        for cell in self.cells:
            pts = [(a * x + b * y, c * x + d * y) for x, y in cell]
            if a * d - b * c < 0:
                pts.reverse()
            out.append(_rotate_min(pts))
        return Region(2, out)

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __sub__(self, other):
        return subtract(self, other)


def measure(R: Region) -> Fraction:
    return R.measure


def affine_image(R: Region, B, k: int = 1, shift=None) -> Region:
    """B^k R + shift."""
    B = IntMatrix.of(B)
    if B.n != R.dim:
        raise ValueError("dimension mismatch")
    if det(B) == 0:
        raise ValueError("singular matrix")
    out = R
    if k:
        out = R.linear_image(B.power(k).rows)
    if shift is not None:
        out = out.translate(shift)
    return out


def _check_dims(A: Region, B: Region):
    if A.dim != B.dim:
        raise ValueError("dimension mismatch")


def intersect(A: Region, B: Region) -> Region:
    _check_dims(A, B)
    if A.is_empty() or B.is_empty():
        return Region.empty(A.dim)
    if A.dim == 1:
        out = []
        i = j = 0
        ca, cb = A.cells, B.cells
        while i < len(ca) and j < len(cb):
            lo = max(ca[i][0], cb[j][0])
            hi = min(ca[i][1], cb[j][1])
            if lo < hi:
                out.append((lo, hi))
            if ca[i][1] < cb[j][1]:
                i += 1
            else:
                j += 1
        return Region(1, _canon1(out), _canonical=True)
    out = []
    for p, bp in zip(A.cells, A._boxes):
        for q, bq in zip(B.cells, B._boxes):
            if _boxes_overlap(bp, bq):
                c = _poly_intersect(p, q)
                if c is not None:
                    out.append(c)
    return Region(2, out)


def subtract(A: Region, B: Region) -> Region:
    _check_dims(A, B)
    if A.is_empty() or B.is_empty():
        return A
    if A.dim == 1:
        out = []
        for a, b in A.cells:
            cur = a
            for c, d in B.cells:
                if d <= cur or c >= b:
                    continue
                if c > cur:
                    out.append((cur, c))
                cur = max(cur, d)
                if cur >= b:
                    break
            if cur < b:
                out.append((cur, b))
        return Region(1, _canon1(out), _canonical=True)
    out = []
    for p, bp in zip(A.cells, A._boxes):
        frags = [p]
        for q, bq in zip(B.cells, B._boxes):
            if not _boxes_overlap(bp, bq):
                continue
            nxt = []
            for f in frags:
                if _boxes_overlap(_cell_bbox2(f), bq):
                    nxt.extend(_poly_subtract(f, q))
                else:
                    nxt.append(f)
            frags = nxt
            if not frags:
                break
        out.extend(frags)
    return Region(2, out)


def union(A: Region, B: Region) -> Region:
    _check_dims(A, B)
    if A.dim == 1:
        return Region(1, A.cells + B.cells)
    return Region(2, A.cells + subtract(B, A).cells)


def union_all(regions: Iterable[Region], dim: int) -> Region:
    out = Region.empty(dim)
    for r in regions:
        out = union(out, r)
    return out


def essentially_equal(A: Region, B: Region) -> bool:
    _check_dims(A, B)
    return subtract(A, B).measure == 0 and subtract(B, A).measure == 0


def contains(outer: Region, inner: Region) -> bool:
    """inner is a subset of outer up to a null set."""
    return subtract(inner, outer).measure == 0


def bounding_box(R: Region):
    if R.is_empty():
        raise ValueError("empty region has no bounding box")
    if R.dim == 1:
        return (R.cells[0][0],), (R.cells[-1][1],)
    xs = [p[0] for c in R.cells for p in c]
    ys = [p[1] for c in R.cells for p in c]
    return (min(xs), min(ys)), (max(xs), max(ys))


def split_at_chord(R: Region, point, normal) -> list:
    """Cells of R cut by the line through ``point`` orthogonal to ``normal``.

    Returns raw (non-canonical) cells; used to re-present a region.
    """
    if R.dim == 1:
        (c,) = point
        out = []
        for a, b in R.cells:
            if a < c < b:
                out += [(a, c), (c, b)]
            else:
                out.append((a, b))
        return out
    px, py = point
    nx, ny = normal
    a = (px, py)
    b = (px - ny, py + nx)
    out = []
    for cell in R.cells:
        for side in (True, False):
            piece = _finish(_clip(list(cell), a, b, side))
            if piece is not None:
                out.append(piece)
    return out

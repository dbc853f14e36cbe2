"""Exact integer-matrix algebra for dilations of Z^n (n = 1 or 2)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction
LatticePoint = tuple  # tuple of n ints


class InvalidMatrix(ValueError):
    """Raised when a matrix cannot serve as an expansive dilation."""


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        n = len(rows)
        if n not in (1, 2) or any(len(r) != n for r in rows):
            raise InvalidMatrix(f"expected a 1x1 or 2x2 integer matrix, got {self.rows!r}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, data) -> "IntMatrix":
        if isinstance(data, IntMatrix):
            return data
        if isinstance(data, int):
            return cls(((data,),))
        return cls(tuple(tuple(r) for r in data))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        n = self.n
        return IntMatrix(tuple(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(n)) for j in range(n))
            for i in range(n)))

    def power(self, k: int) -> "IntMatrix":
        out = IntMatrix(tuple(tuple(int(i == j) for j in range(self.n)) for i in range(self.n)))
        for _ in range(k):
            out = out @ self
        return out

    def apply(self, v: Sequence):
        """Matrix-vector product; works for int and Fraction entries."""
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.rows)

    def adjugate(self) -> tuple:
        if self.n == 1:
            return ((1,),)
        (a, b), (c, d) = self.rows
        return ((d, -b), (-c, a))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def tolist(self) -> list:
        return [list(r) for r in self.rows]


def det(B: IntMatrix) -> int:
    B = IntMatrix.of(B)
    if B.n == 1:
        return B.rows[0][0]
    (a, b), (c, d) = B.rows
    return a * d - b * c


def charpoly(B: IntMatrix) -> list:
    """Coefficients of det(lambda*I - B), lowest degree first."""
    B = IntMatrix.of(B)
    if B.n == 1:
        return [-B.rows[0][0], 1]
    return [det(B), -B.trace(), 1]


def schur_stable(coeffs: Sequence[int]) -> bool:
    """Schur-Cohn test: do all roots lie strictly inside the unit circle?

    ``coeffs`` is lowest degree first, with a non-zero leading coefficient.
    Each reduction step replaces p by (c_n p - c_0 p*) / z, where p* is the
    reversed polynomial. Integer input stays integer, so the test is exact.
    """
    c = [Fraction(x) for x in coeffs]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    while len(c) > 1:
        n = len(c) - 1
        if abs(c[n]) <= abs(c[0]):
            return False
        c = [c[n] * c[k + 1] - c[0] * c[n - k - 1] for k in range(n)]
    return True


def is_expansive(B: IntMatrix) -> bool:
    B = IntMatrix.of(B)
    if det(B) == 0:
        return False
    p = charpoly(B)
    # lambda^n p(1/lambda) has the reciprocal roots of p
    return schur_stable(list(reversed(p)))


def require_expansive(B) -> IntMatrix:
    B = IntMatrix.of(B)
    if not is_expansive(B):
        raise InvalidMatrix(f"matrix {B.tolist()} is not expansive")
    return B


def _as_point(x) -> tuple:
    if isinstance(x, int):
        return (x,)
    return tuple(int(v) for v in x)


def same_coset(x, y, B: IntMatrix) -> bool:
    """True iff x - y lies in B Z^n (checked via adj(B)(x - y) / det B)."""
    B = IntMatrix.of(B)
    x, y = _as_point(x), _as_point(y)
    d = det(B)
    if d == 0:
        raise InvalidMatrix("singular matrix has no finite coset space")
    diff = tuple(a - b for a, b in zip(x, y))
    adj = B.adjugate()
    return all(sum(a * v for a, v in zip(row, diff)) % d == 0 for row in adj)


def is_complete_coset_set(D: Iterable, B: IntMatrix) -> bool:
    B = IntMatrix.of(B)
    pts = list({_as_point(x) for x in D})
    if len(pts) != abs(det(B)):
        return False
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if same_coset(pts[i], pts[j], B):
                return False
    return True

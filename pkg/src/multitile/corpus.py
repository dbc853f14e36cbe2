"""Worked examples with their known self-affine representations."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction as F

from .decompose import DigitMatrix, Partition
from .lattice import IntMatrix
from .region import Region, convex_hull, union_all

FIXTURE_IDS = (
    "ex31_4piece",
    "ex31_3piece",
    "ex32_tile",
    "ex32_2piece",
    "ex33_6piece",
    "ex33_4piece",
    "ex34(p,q)",
)

B_EX33 = IntMatrix(((-1, 1), (-3, 1)))


@dataclass(frozen=True)
class ExampleFixture:
    id: str
    B: IntMatrix
    atoms: tuple  # Regions in the order the representation is written down
    digits: DigitMatrix
    expected_m0: int
    description: str = ""

    @property
    def K(self) -> Region:
        return union_all(self.atoms, self.B.n)

    @property
    def partition(self) -> Partition:
        """Atoms in the order the digit matrix refers to them."""
        return Partition(self.atoms, self.K, sort=False)


def _iv(a, b) -> Region:
    return Region.interval(a, b)


def _digits(M: int, entries: dict) -> DigitMatrix:
    """Build from a sparse {(i, j): shifts} map with 1-based indices."""
    rows = [[set() for _ in range(M)] for _ in range(M)]
    for (i, j), shifts in entries.items():
        rows[i - 1][j - 1] = {(s,) if isinstance(s, int) else tuple(s) for s in shifts}
    return DigitMatrix(tuple(tuple(r) for r in rows))


# pieces of the planar example
H = ((F(1, 3), F(1)), (F(2, 3), F(1)), (F(1, 2), F(1, 2)), (F(1, 6), F(1, 2)))
E = ((F(1, 3), F(0)), (F(0), F(0)), (F(1, 2), F(1, 2)), (F(1, 6), F(1, 2)))
FF = ((F(-1, 6), F(1, 2)), (F(1, 6), F(1, 2)), (F(-1, 3), F(0)), (F(0), F(0)))
K_PRIME = ((F(-1, 6), F(1, 2)), (F(1, 2), F(1, 2)), (F(1, 6), F(-1, 2)), (F(-1, 2), F(-1, 2)))


def _neg(points):
    return tuple((-x, -y) for x, y in points)


def _poly(points) -> Region:
    return Region(2, [convex_hull(points)])


def ex33_region() -> Region:
    """H, -H and K' as three convex cells."""
    return Region.from_cells(2, [convex_hull(c) for c in (H, _neg(H), K_PRIME)])


def _ex31_4piece():
    atoms = (_iv(F(-3, 4), F(-1, 2)), _iv(F(-1, 2), F(-1, 4)), _iv(F(-1, 4), 0), _iv(0, F(1, 4)))
    digits = _digits(4, {
        (1, 2): [-1], (1, 3): [-1],
        (2, 1): [0], (2, 4): [-1],
        (3, 2): [0], (3, 3): [0],
        (4, 1): [1], (4, 4): [0],
    })
    return ExampleFixture("ex31_4piece", IntMatrix(((2,),)), atoms, digits, 2,
                          "K = [-3/4, 1/4], B = 2, four quarter-length pieces")


def _ex31_3piece():
    atoms = (_iv(F(-3, 4), F(-1, 2)), _iv(F(-1, 2), 0), _iv(0, F(1, 4)))
    digits = _digits(3, {
        (1, 2): [-1],
        (2, 1): [0], (2, 2): [0], (2, 3): [-1],
        (3, 1): [1], (3, 3): [0],
    })
    return ExampleFixture("ex31_3piece", IntMatrix(((2,),)), atoms, digits, 2,
                          "K = [-3/4, 1/4], B = 2, minimal three-piece form")


def _ex32_tile():
    atoms = (_iv(F(-3, 4), F(1, 4)),)
    return ExampleFixture("ex32_tile", IntMatrix(((-3,),)), atoms, _digits(1, {(1, 1): [0, 1, 2]}), 1,
                          "K = [-3/4, 1/4], B = -3, a single tile")


def _ex32_2piece():
    atoms = (_iv(F(-3, 4), F(-1, 4)), _iv(F(-1, 4), F(1, 4)))
    digits = _digits(2, {(1, 1): [2], (1, 2): [1, 2], (2, 1): [0, 1], (2, 2): [0]})
    return ExampleFixture("ex32_2piece", IntMatrix(((-3,),)), atoms, digits, 1,
                          "K = [-3/4, 1/4], B = -3, two pieces with equal digit columns")


def _ex33_6piece():
    atoms = tuple(_poly(p) for p in (H, E, FF, _neg(E), _neg(FF), _neg(H)))
    up, down, zero = (0, 1), (0, -1), (0, 0)
    digits = _digits(6, {
        (1, 1): [down], (1, 2): [down],
        (2, 3): [down], (2, 5): [zero],
        (3, 1): [zero], (3, 2): [zero],
        (4, 3): [zero], (4, 5): [up],
        (5, 4): [zero], (5, 6): [zero],
        (6, 4): [up], (6, 6): [up],
    })
    return ExampleFixture("ex33_6piece", B_EX33, atoms, digits, 2,
                          "K = H u (-H) u K', six convex pieces H, E, F, -E, -F, -H")


def _ex33_4piece():
    atoms = (
        union_all([_poly(H), _poly(E)], 2),
        _poly(FF),
        union_all([_poly(_neg(E)), _poly(_neg(H))], 2),
        _poly(_neg(FF)),
    )
    up, down, zero = (0, 1), (0, -1), (0, 0)
    digits = _digits(4, {
        (1, 1): [down], (1, 2): [down], (1, 4): [zero],
        (2, 1): [zero],
        (3, 2): [zero], (3, 3): [up], (3, 4): [up],
        (4, 3): [zero],
    })
    return ExampleFixture("ex33_4piece", B_EX33, atoms, digits, 2,
                          "K = H u (-H) u K', minimal four-piece form")


def ex34_m0(p: int, q: int) -> int:
    """First depth at which the cut points of [-p/q, 1 - p/q] close under doubling mod 1."""
    cuts = {F(-p, q) % 1}
    m = 0
    while True:
        m += 1
        cuts.add(F(-p * 2 ** m, q) % 1)
        if all((2 * c) % 1 in cuts for c in cuts):
            return m


def _ex34(p: int, q: int):
    if not (1 <= p < q and math.gcd(p, q) == 1):
        raise KeyError(f"ex34 needs coprime 1 <= p < q, got ({p}, {q})")
    atoms = tuple(_iv(F(-(p - i + 1), q), F(-(p - i), q)) for i in range(1, q + 1))
    # B K_i = [2x, 2x + 1/q] u [2x + 1/q, 2x + 2/q] with x = (i - 1 - p)/q; each half is
    # the piece whose left end is congruent mod 1
    entries: dict = {}
    for i in range(1, q + 1):
        for t in (2 * (i - 1 - p), 2 * (i - 1 - p) + 1):
            r = (t + p) % q - p  # representative of t/q in the left-end set, times q
            j = r + p + 1
            entries.setdefault((i, j), []).append((t - r) // q)
    return ExampleFixture(f"ex34({p},{q})", IntMatrix(((2,),)), atoms, _digits(q, entries),
                          ex34_m0(p, q), f"K = [-{p}/{q}, 1 - {p}/{q}], B = 2, q cells of length 1/{q}")


_BUILDERS = {
    "ex31_4piece": _ex31_4piece,
    "ex31_3piece": _ex31_3piece,
    "ex32_tile": _ex32_tile,
    "ex32_2piece": _ex32_2piece,
    "ex33_6piece": _ex33_6piece,
    "ex33_4piece": _ex33_4piece,
}

_EX34 = re.compile(r"ex34[(_](\d+)[,_](\d+)\)?$")


def paper_example(fixture_id: str) -> ExampleFixture:
    if fixture_id in _BUILDERS:
        return _BUILDERS[fixture_id]()
    match = _EX34.match(fixture_id)
    if match:
        return _ex34(int(match.group(1)), int(match.group(2)))
    raise KeyError(f"unknown example id {fixture_id!r}; known: {', '.join(FIXTURE_IDS)}")


def all_fixtures(q_max: int = 5) -> list:
    out = [paper_example(i) for i in _BUILDERS]
    out += [_ex34(p, q) for q in range(2, q_max + 1) for p in range(1, q) if math.gcd(p, q) == 1]
    return out

"""Fox n-colorings through the pre-coloring matrix.

One row per crossing, one column per strand; a crossing with over-strand
``y`` and under-strands ``x``, ``z`` contributes ``x + z - 2y``.  When a
strand occurs twice at the same crossing the coefficients simply add.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from . import exactla
from .diagram import PlanarDiagram, Strand, edge_strand_map, strands
from .errors import NotAColoring, SearchSpaceTooLarge, ZeroCrossingDiagram
from .exactla import IntMatrix, ModVector

BRUTE_FORCE_LIMIT = 10**7


@dataclass(frozen=True)
class Coloring:
    """Residues mod ``modulus`` indexed by strand id."""

    modulus: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) % self.modulus for c in self.colors))

    def __getitem__(self, strand_id: int) -> int:
        return self.colors[strand_id]

    def __len__(self) -> int:
        return len(self.colors)

    def __add__(self, other: "Coloring") -> "Coloring":
        if other.modulus != self.modulus or len(other) != len(self):
            raise ValueError("incompatible colorings")
        return Coloring(self.modulus, tuple(a + b for a, b in zip(self.colors, other.colors)))

    def __mul__(self, k: int) -> "Coloring":
        return Coloring(self.modulus, tuple(k * a for a in self.colors))

    __rmul__ = __mul__

    @property
    def is_trivial(self) -> bool:
        return len(set(self.colors)) <= 1

    def as_vector(self) -> ModVector:
        return ModVector(self.modulus, self.colors)


@dataclass(frozen=True)
class ColoringSystem:
    pre_matrix: IntMatrix
    deleted_row: int
    deleted_col: int
    matrix: IntMatrix
    strand_order: tuple[int, ...]
    strands: tuple[Strand, ...]


def crossing_strands(d: PlanarDiagram) -> list[tuple[int, int, int]]:
    """``(under, over, under)`` strand ids at every crossing."""
    owner = edge_strand_map(d)
    return [(owner[c.slots[0]], owner[c.slots[1]], owner[c.slots[2]]) for c in d.crossings]


def precoloring_matrix(d: PlanarDiagram) -> IntMatrix:
    c = d.crossing_count
    rows = []
    for a, y, b in crossing_strands(d):
        row = [0] * c
        row[a] += 1
        row[b] += 1
        row[y] -= 2
        rows.append(row)
    return IntMatrix.from_rows(rows, cols=c)


def build_precoloring(d: PlanarDiagram, deleted_row: int | None = None,
                      deleted_col: int | None = None) -> ColoringSystem:
    if not d.crossings:
        raise ZeroCrossingDiagram("the 0-crossing unknot has no crossing equations")
    pre = precoloring_matrix(d)
    r = pre.rows - 1 if deleted_row is None else deleted_row
    k = pre.cols - 1 if deleted_col is None else deleted_col
    sts = tuple(strands(d))
    return ColoringSystem(pre, r, k, pre.delete(r, k), tuple(s.id for s in sts), sts)


def coloring_matrix(d: PlanarDiagram) -> IntMatrix:
    """The coloring matrix, empty for the 0-crossing unknot."""
    if not d.crossings:
        return IntMatrix.zeros(0, 0)
    return build_precoloring(d).matrix


def is_coloring(d: PlanarDiagram, col: Coloring) -> bool:
    n = col.modulus
    if len(col) != max(d.crossing_count, 1):
        return False
    return all((col[a] + col[b] - 2 * col[y]) % n == 0 for a, y, b in crossing_strands(d))


def check_coloring(d: PlanarDiagram, col: Coloring):
    if not is_coloring(d, col):
        raise NotAColoring(f"{col.colors} is not a valid {col.modulus}-coloring")


def determinant(d: PlanarDiagram) -> int:
    """Knot determinant ``|det C|``; 1 for the 0-crossing unknot."""
    return abs(exactla.det(coloring_matrix(d)))


def nullity(d: PlanarDiagram, p: int) -> int:
    return exactla.nullspace_mod_p(coloring_matrix(d), p)[0]


def count_colorings(d: PlanarDiagram, n: int) -> int:
    """Number of n-colorings (trivial ones included), without enumerating."""
    if not d.crossings:
        return n
    return exactla.count_solutions_mod_n(precoloring_matrix(d), n)


def colorings(d: PlanarDiagram, n: int, cap: int | None = None) -> list[Coloring]:
    """All n-colorings, sorted, each checked against every crossing."""
    if not d.crossings:
        return [Coloring(n, (s,)) for s in range(n)]
    out = [Coloring(n, v.entries) for v in exactla.solve_mod_n(precoloring_matrix(d), n, cap)]
    for col in out:
        check_coloring(d, col)
    return out


def brute_force_colorings(d: PlanarDiagram, n: int,
                          limit: int = BRUTE_FORCE_LIMIT) -> list[Coloring]:
    """Exhaustive search over every strand assignment; the ground-truth oracle."""
    k = max(d.crossing_count, 1)
    if n**k > limit:
        raise SearchSpaceTooLarge(f"{n}^{k} assignments exceed the limit {limit}")
    eqs = crossing_strands(d)
    found = []
    for colors in itertools.product(range(n), repeat=k):
        if all((colors[a] + colors[b] - 2 * colors[y]) % n == 0 for a, y, b in eqs):
            found.append(Coloring(n, colors))
    return found


def elementary_divisors(d: PlanarDiagram) -> list[int]:
    return exactla.smith_normal_form(coloring_matrix(d))[0]


def is_n_colorable(d: PlanarDiagram, n: int) -> bool:
    """Whether a nontrivial n-coloring exists.

    Read off the Smith divisors of the coloring matrix: the solution group
    mod n is a product of cyclic groups of order ``gcd(n, d_i)``.
    """
    if n < 2:
        raise ValueError("n-colorability needs n >= 2")
    return any(math.gcd(n, dv) > 1 for dv in elementary_divisors(d))


def trivial_coloring(d: PlanarDiagram, n: int, color: int) -> Coloring:
    return Coloring(n, (color,) * max(d.crossing_count, 1))


def coloring_from_edges(d: PlanarDiagram, n: int, edge_colors: dict[int, int]) -> Coloring:
    """Collapse per-edge colors onto strands; edges of one strand must agree."""
    colors: list[int | None] = [None] * max(d.crossing_count, 1)
    for s in strands(d):
        vals = {edge_colors[e] % n for e in s.edges}
        if len(vals) != 1:
            raise NotAColoring(f"strand {s.id} gets colors {sorted(vals)}")
        colors[s.id] = vals.pop()
    return Coloring(n, colors)


def canonical_form(m: IntMatrix) -> IntMatrix:
    """Lexicographically least matrix under row permutations and
    simultaneous relabelings of columns; used to compare matrices that
    differ only by how crossings and strands were numbered."""
    best = None
    for perm in itertools.permutations(range(m.cols)):
        rows = sorted(tuple(m[i, j] for j in perm) for i in range(m.rows))
        if best is None or rows < best:
            best = rows
    return IntMatrix.from_rows(best or [], cols=m.cols)


def relabel_equivalent(a: IntMatrix, b: IntMatrix) -> bool:
    return a.shape == b.shape and canonical_form(a) == canonical_form(b)


def strand_permutation(a: IntMatrix, b: IntMatrix) -> Sequence[int] | None:
    """A column order ``perm`` with ``a`` permuted by ``perm`` equal to ``b``
    up to row order, or None."""
    target = sorted(b.to_rows())
    for perm in itertools.permutations(range(a.cols)):
        if sorted([[a[i, j] for j in perm] for i in range(a.rows)]) == target:
            return perm
    return None

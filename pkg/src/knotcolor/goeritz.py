"""Goeritz matrices, region differences, and the coloring <-> Goeritz bijection.

Differences are carried by a potential ``F`` on regions: crossing an edge
of color ``x`` from its unshaded side to its shaded side raises ``F`` by
``x``.  The alternating sum along an arc (first crossing counted
positively) is then ``F(end) - F(start)`` when the arc starts in an
unshaded region and ``F(start) - F(end)`` when it starts in a shaded one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import exactla
from .coloring import Coloring, check_coloring, coloring_from_edges
from .diagram import PlanarDiagram, RegionComplex, edge_strand_map
from .errors import (
    AuxiliaryMismatch,
    InconsistentDifferences,
    NoShadedRegion,
    NotInNullspace,
)
from .exactla import IntMatrix, ModVector


@dataclass(frozen=True)
class GoeritzSystem:
    pre_matrix: IntMatrix
    deleted: int
    matrix: IntMatrix
    region_order: tuple[int, ...]


def pre_goeritz(rc: RegionComplex) -> tuple[IntMatrix, tuple[int, ...]]:
    order = tuple(rc.shaded_ids)
    if not order:
        raise NoShadedRegion("no shaded region to build a Goeritz matrix on")
    index = {r: k for k, r in enumerate(order)}
    s = len(order)
    g = [[0] * s for _ in range(s)]
    for x, eta in enumerate(rc.eta):
        a, b = rc.shaded_pair(x)
        if a == b:
            continue
        g[index[a]][index[b]] += eta
        g[index[b]][index[a]] += eta
    for i in range(s):
        g[i][i] = -sum(g[i][j] for j in range(s) if j != i)
    return IntMatrix.from_rows(g, cols=s), order


def build_goeritz(rc: RegionComplex, deleted: int | None = None) -> GoeritzSystem:
    pre, order = pre_goeritz(rc)
    k = pre.rows - 1 if deleted is None else deleted
    return GoeritzSystem(pre, k, pre.delete(k, k), order)


def goeritz_determinant(rc: RegionComplex) -> int:
    return abs(exactla.det(build_goeritz(rc).matrix))


def goeritz_nullity(rc: RegionComplex, p: int) -> int:
    return exactla.nullspace_mod_p(build_goeritz(rc).matrix, p)[0]


# -- differences --------------------------------------------------------------

def base_region(rc: RegionComplex) -> int:
    """The shaded region containing the smallest edge label."""
    if not rc.sides:
        return rc.shaded_ids[0]
    return rc.shaded_side(min(rc.sides))[0]


def base_strand(d: PlanarDiagram, rc: RegionComplex) -> int:
    if not d.crossings:
        return 0
    owner = edge_strand_map(d)
    return min(owner[e] for e in rc.regions[base_region(rc)].edges)


def _edge_colors(d: PlanarDiagram, col: Coloring) -> dict[int, int]:
    owner = edge_strand_map(d)
    return {e: col[s] for e, s in owner.items()}


def _potential(d: PlanarDiagram, rc: RegionComplex, col: Coloring, root: int):
    """Spread ``F`` over a BFS tree of the dual graph; return ``F`` and the
    defect of every non-tree dual edge (zero iff its cycle sums to zero)."""
    n = col.modulus
    if not d.crossings:
        s = rc.shaded_ids[0]
        f = {root: 0}
        other = 1 - root
        f[other] = col[0] if other == s else -col[0]
        return {r: v % n for r, v in f.items()}, {}
    colors = _edge_colors(d, col)
    steps: dict[int, list[tuple[int, int, int]]] = {r.id: [] for r in rc.regions}
    for e in rc.sides:
        s, u = rc.shaded_side(e)
        steps[u].append((e, s, colors[e]))
        steps[s].append((e, u, -colors[e]))
    f = {root: 0}
    tree_edges = set()
    queue = deque([root])
    while queue:
        r = queue.popleft()
        for e, t, inc in steps[r]:
            if t not in f:
                f[t] = (f[r] + inc) % n
                tree_edges.add(e)
                queue.append(t)
    defects = {}
    for e in rc.sides:
        if e in tree_edges:
            continue
        s, u = rc.shaded_side(e)
        defects[e] = (f[s] - f[u] - colors[e]) % n
    return f, defects


def cycle_sums(d: PlanarDiagram, rc: RegionComplex, col: Coloring) -> dict[int, int]:
    """Alternating color sum around the fundamental cycle closed by each
    non-tree dual edge.  All zero for a genuine coloring."""
    return _potential(d, rc, col, base_region(rc))[1]


@dataclass(frozen=True)
class DifferenceTable:
    modulus: int
    base_region: int
    potential: tuple[int, ...]
    shaded: tuple[bool, ...]

    def __call__(self, i: int, j: int) -> int:
        sign = -1 if self.shaded[i] else 1
        return sign * (self.potential[j] - self.potential[i]) % self.modulus

    @property
    def d(self) -> dict[tuple[int, int], int]:
        r = range(len(self.potential))
        return {(i, j): self(i, j) for i in r for j in r}

    def from_base(self) -> dict[int, int]:
        return {j: self(self.base_region, j) for j in range(len(self.potential)) if j != self.base_region}


def differences(d: PlanarDiagram, rc: RegionComplex, col: Coloring) -> DifferenceTable:
    check_coloring(d, col)
    root = base_region(rc)
    f, defects = _potential(d, rc, col, root)
    bad = {e: v for e, v in defects.items() if v}
    if bad:
        raise InconsistentDifferences(f"alternating sums around dual cycles are nonzero: {bad}")
    return DifferenceTable(
        col.modulus, root, tuple(f[r.id] for r in rc.regions), rc.shaded
    )


# -- the bijection ------------------------------------------------------------

def coloring_to_goeritz(d: PlanarDiagram, rc: RegionComplex, col: Coloring) -> ModVector:
    """``v_i = d(R_1, R_i)`` over the shaded regions, ``R_1`` the base region."""
    table = differences(d, rc, col)
    order = rc.shaded_ids
    return ModVector(col.modulus, [table(table.base_region, r) for r in order])


def _over_edge(d: PlanarDiagram, crossing: int, quadrant: int) -> int:
    """The over-edge bounding ``quadrant`` (slots q and q + 1, one of them odd)."""
    slot = quadrant if quadrant % 2 else (quadrant + 1) % 4
    return d.crossings[crossing].slots[slot]


def goeritz_to_coloring(d: PlanarDiagram, rc: RegionComplex, v: ModVector,
                        base_color: int, tree: str = "min") -> Coloring:
    """Rebuild the coloring whose shaded differences are ``v_j - v_i``.

    Colors are first assigned to edges (the segments of the auxiliary
    diagram).  Walking a shaded region's boundary with the region on the
    left, passing crossing ``c`` adds ``eta(c) * d(R, R')`` where ``R'`` is
    the other shaded region at ``c``.  Regions are seeded along a spanning
    tree of crossings (smallest crossing label first, or largest with
    ``tree="max"``) by copying the over-edge color across the crossing.
    """
    n = v.modulus
    pre, order = pre_goeritz(rc)
    if len(v) != len(order):
        raise ValueError(f"vector of length {len(v)} for {len(order)} shaded regions")
    if any(pre.apply(v.entries, n)):
        raise NotInNullspace(f"{v.entries} is not a solution of the pre-Goeritz matrix mod {n}")
    if not d.crossings:
        return Coloring(n, (base_color,))

    index = {r: k for k, r in enumerate(order)}

    def diff(a, b):
        return v[index[b]] - v[index[a]]

    edge_color: dict[int, int] = {}

    def walk(region: int, start_edge: int, color: int):
        boundary = rc.regions[region].boundary
        k0 = next(k for k, c in enumerate(boundary) if c.edge == start_edge)
        for step in range(len(boundary)):
            corner = boundary[(k0 + step) % len(boundary)]
            edge_color[corner.edge] = color % n
            other = rc.quadrant_region[corner.crossing, (corner.quadrant + 2) % 4]
            color += rc.eta[corner.crossing] * diff(region, other)
        if color % n != edge_color[start_edge]:
            raise AuxiliaryMismatch(f"walk around region {region} does not close up")

    root = base_region(rc)
    alpha = base_strand(d, rc)
    owner = edge_strand_map(d)
    seed = next(c.edge for c in rc.regions[root].boundary if owner[c.edge] == alpha)
    walk(root, seed, base_color)

    def key(x):
        k = min(d.crossings[x].slots)
        return (k, x) if tree == "min" else (-k, -x)

    done = {root}
    while len(done) < len(order):
        candidates = []
        for x in range(d.crossing_count):
            a, b = rc.shaded_pair(x)
            if (a in done) != (b in done):
                candidates.append(x)
        x = min(candidates, key=key)
        q = 0 if rc.eta[x] == 1 else 1
        qa, qb = (q, q + 2) if rc.quadrant_region[x, q] in done else (q + 2, q)
        new = rc.quadrant_region[x, qb]
        walk(new, _over_edge(d, x, qb), edge_color[_over_edge(d, x, qa)])
        done.add(new)

    for x, c in enumerate(d.crossings):
        w, y = edge_color[c.slots[1]], edge_color[c.slots[3]]
        a, b = edge_color[c.slots[0]], edge_color[c.slots[2]]
        if (w + y - a - b) % n:
            raise AuxiliaryMismatch(f"auxiliary equation fails at crossing {x}")
        if w != y:
            raise AuxiliaryMismatch(f"over-strand colors {w} != {y} at crossing {x}")
    col = coloring_from_edges(d, n, edge_color)
    check_coloring(d, col)
    return col


def shaded_solutions(rc: RegionComplex, n: int, cap: int | None = None) -> list[ModVector]:
    """Solutions of the pre-Goeritz matrix mod n with first entry 0."""
    pre, _ = pre_goeritz(rc)
    return [v for v in exactla.solve_mod_n(pre, n, cap) if v[0] == 0]

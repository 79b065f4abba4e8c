"""Pretzel knots P(q_1, ..., q_m) through the twist-difference matrix A.

``d_i`` is the difference (left color minus right color) across the top of
twist region ``i``.  Each half-twist shifts both colors of a region by
``d_i`` (by ``-d_i`` for negative twists), so the region adds ``q_i d_i``
top to bottom.  Gluing neighbours gives ``q_1 d_1 = q_i d_i``, and closing
the diagram around gives ``d_1 + ... + d_m = 0``.

Diagram convention: region ``i`` is a vertical column of ``|q_i|``
crossings; for ``q_i > 0`` the strand running NW to SE is the over strand.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Sequence

from . import exactla
from .coloring import Coloring, check_coloring, coloring_from_edges, coloring_matrix
from .diagram import PlanarDiagram, edge_strand_map
from .errors import InvalidPretzelSpec, NotAKnot, NotInNullspace, NotPrime
from .exactla import IntMatrix, ModVector

_SPEC = re.compile(r"\s*P\s*\((.*)\)\s*")

NE, NW, SW, SE = range(4)  # counterclockwise from the north-east port
_OPPOSITE = {NE: SW, SW: NE, NW: SE, SE: NW}


@dataclass(frozen=True)
class PretzelSpec:
    q: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(int(x) for x in self.q))
        if not self.q:
            raise InvalidPretzelSpec("a pretzel spec needs at least one twist region")
        if any(x == 0 for x in self.q):
            raise InvalidPretzelSpec(f"zero twist region in {self}")

    @classmethod
    def parse(cls, text: str) -> "PretzelSpec":
        m = _SPEC.fullmatch(text)
        if not m:
            raise InvalidPretzelSpec(f"not a pretzel spec: {text!r}")
        try:
            q = [int(part) for part in m.group(1).split(",")]
        except ValueError:
            raise InvalidPretzelSpec(f"not a pretzel spec: {text!r}") from None
        return cls(tuple(q))

    @property
    def m(self) -> int:
        return len(self.q)

    def rotated(self, k: int = 1) -> "PretzelSpec":
        k %= self.m
        return PretzelSpec(self.q[k:] + self.q[:k])

    def __str__(self) -> str:
        return "P({})".format(",".join(str(x) for x in self.q))


def is_pretzel_spec(text: str) -> bool:
    return bool(_SPEC.fullmatch(text))


@dataclass(frozen=True)
class PretzelSystem:
    A: IntMatrix
    spec: PretzelSpec


def build_A(spec: PretzelSpec) -> PretzelSystem:
    q = spec.q
    m = spec.m
    rows = [[1] * m]
    for i in range(1, m):
        row = [0] * m
        row[0] = -q[0]
        row[i] += q[i]
        rows.append(row)
    return PretzelSystem(IntMatrix.from_rows(rows, cols=m), spec)


def pretzel_determinant(spec: PretzelSpec) -> int:
    """``|q_1...q_m (1/q_1 + ... + 1/q_m)|`` as the integer ``|sum_i prod_{j!=i} q_j|``."""
    q = spec.q
    return abs(sum(math.prod(q[:i] + q[i + 1:]) for i in range(len(q))))


def pretzel_nullity(spec: PretzelSpec, p: int) -> int:
    """Mod-p nullity of A from the closed forms (p prime)."""
    if not exactla.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    k = sum(1 for x in spec.q if x % p == 0)
    if k:
        return k - 1
    return 1 if pretzel_determinant(spec) % p == 0 else 0


# -- diagrams -----------------------------------------------------------------

@dataclass(frozen=True)
class PretzelDiagram:
    """A generated diagram plus, for each twist region, the (left, right)
    edge labels at every level from the top (level 0) to the bottom."""

    spec: PretzelSpec
    diagram: PlanarDiagram
    levels: tuple[tuple[tuple[int, int], ...], ...]


def _ports(spec: PretzelSpec):
    """Crossing port lists in slot order plus the port-to-port wiring."""
    slot_ports = {}
    wires = []
    for i, q in enumerate(spec.q):
        for k in range(abs(q)):
            slot_ports[i, k] = (SW, SE, NE, NW) if q > 0 else (NW, SW, SE, NE)
            if k + 1 < abs(q):
                wires.append(((i, k, SW), (i, k + 1, NW)))
                wires.append(((i, k, SE), (i, k + 1, NE)))
    m = spec.m
    last = [abs(q) - 1 for q in spec.q]
    for i in range(m - 1):
        wires.append(((i, 0, NE), (i + 1, 0, NW)))
        wires.append(((i, last[i], SE), (i + 1, last[i + 1], SW)))
    wires.append(((0, 0, NW), (m - 1, 0, NE)))
    wires.append(((0, last[0], SW), (m - 1, last[m - 1], SE)))
    return slot_ports, wires


def _components(slot_ports, wires) -> int:
    partner = {}
    for a, b in wires:
        partner[a] = b
        partner[b] = a
    seen = set()
    count = 0
    for start in partner:
        if start in seen:
            continue
        count += 1
        port = start
        while port not in seen:
            seen.add(port)
            x = port[:2]
            out = (*x, _OPPOSITE[port[2]])
            seen.add(out)
            port = partner[out]
    return count


def pretzel_layout(spec: PretzelSpec) -> PretzelDiagram:
    slot_ports, wires = _ports(spec)
    n_comp = _components(slot_ports, wires)
    if n_comp != 1:
        raise NotAKnot(f"{spec} closes to a {n_comp}-component link")
    partner = {}
    for a, b in wires:
        partner[a] = b
        partner[b] = a

    # walk the knot from the top-left of region 0, numbering edges as met
    label = {}
    incoming = {}
    port = (0, 0, NW)
    for step in range(1, len(wires) + 1):
        label[frozenset((port, partner[port]))] = step
        x = port[:2]
        if slot_ports[x].index(port[2]) % 2 == 0:
            incoming[x] = port[2]
        port = partner[(*x, _OPPOSITE[port[2]])]

    def edge(p):
        return label[frozenset((p, partner[p]))]

    order = sorted(slot_ports)
    crossings = []
    for x in order:
        ports = list(slot_ports[x])
        r = ports.index(incoming[x])
        ports = ports[r:] + ports[:r]
        crossings.append(tuple(edge((*x, p)) for p in ports))
    d = PlanarDiagram.from_crossings(crossings)

    levels = []
    for i, q in enumerate(spec.q):
        col = [(edge((i, 0, NW)), edge((i, 0, NE)))]
        for k in range(abs(q)):
            col.append((edge((i, k, SW)), edge((i, k, SE))))
        levels.append(tuple(col))
    return PretzelDiagram(spec, d, tuple(levels))


def pretzel_diagram(spec: PretzelSpec) -> PlanarDiagram:
    return pretzel_layout(spec).diagram


def closes_to_knot(spec: PretzelSpec) -> bool:
    return _components(*_ports(spec)) == 1


def pretzel_coloring_correspondence(spec: PretzelSpec, n: int, dvec: Sequence[int] | ModVector,
                                    base: int, layout: PretzelDiagram | None = None) -> Coloring:
    """Color the generated diagram from twist differences ``dvec`` and the
    color ``base`` of the top-left strand."""
    layout = layout or pretzel_layout(spec)
    dv = [x % n for x in dvec]
    A = build_A(spec).A
    if len(dv) != spec.m or any(A.apply(dv, n)):
        raise NotInNullspace(f"{tuple(dv)} does not solve A d = 0 mod {n}")
    edge_colors: dict[int, int] = {}

    def put(e, c):
        c %= n
        if edge_colors.setdefault(e, c) != c:
            raise NotInNullspace(f"edge {e} gets two colors")

    top = base
    for q, di, col in zip(spec.q, dv, layout.levels):
        left, right = top, top - di
        put(col[0][0], left)
        put(col[0][1], right)
        for le, re_ in col[1:]:
            left, right = (2 * left - right, left) if q > 0 else (right, 2 * right - left)
            put(le, left)
            put(re_, right)
        top -= di
    out = coloring_from_edges(layout.diagram, n, edge_colors)
    check_coloring(layout.diagram, out)
    return out


def twist_differences(layout: PretzelDiagram, col: Coloring) -> ModVector:
    """Inverse of the correspondence: read ``d_i`` off the top of each region."""
    owner = edge_strand_map(layout.diagram)
    return ModVector(col.modulus, [col[owner[l]] - col[owner[r]] for (l, r), *_ in layout.levels])


def top_left_strand(layout: PretzelDiagram) -> int:
    return edge_strand_map(layout.diagram)[layout.levels[0][0][0]]


# -- sweeps -------------------------------------------------------------------

def twist_values(max_q: int) -> list[int]:
    return [v for k in range(1, max_q + 1) for v in (k, -k)]


def all_specs(max_m: int, max_q: int):
    vals = twist_values(max_q)
    for m in range(1, max_m + 1):
        for q in itertools.product(vals, repeat=m):
            yield PretzelSpec(q)


def determinant_sweep(max_m: int, max_q: int) -> tuple[int, list[tuple[int, ...]]]:
    """Compare ``|det A|`` (Bareiss) with the closed form for every spec.

    Returns ``(cases, mismatches)``.  Rows are laid out as in
    :func:`build_A` without going through ``IntMatrix``, since this loop
    runs millions of times.
    """
    vals = twist_values(max_q)
    cases = 0
    bad = []
    for m in range(1, max_m + 1):
        for q in itertools.product(vals, repeat=m):
            rows = [[1] * m]
            for i in range(1, m):
                r = [0] * m
                r[0] = -q[0]
                r[i] += q[i]
                rows.append(r)
            d = exactla.det_rows(rows)
            # sum over i of the product of all q_j with j != i, via prefix/suffix products
            prefix = [1]
            for x in q[:-1]:
                prefix.append(prefix[-1] * x)
            formula, suffix = 0, 1
            for i in range(m - 1, -1, -1):
                formula += prefix[i] * suffix
                suffix *= q[i]
            if abs(d) != abs(formula):
                bad.append(q)
            cases += 1
    return cases, bad


@dataclass(frozen=True)
class SweepRow:
    spec: PretzelSpec
    formula_det: int
    matrix_det: int
    diagram_det: int
    # p -> (closed form, elimination on A, coloring matrix of the diagram)
    nullities: dict[int, tuple[int, int, int]]

    @property
    def ok(self) -> bool:
        return (self.formula_det == self.matrix_det == self.diagram_det
                and all(a == b == c for a, b, c in self.nullities.values()))


def sweep_row(spec: PretzelSpec, primes: Sequence[int] = (2, 3, 5, 7)) -> SweepRow:
    A = build_A(spec).A
    C = coloring_matrix(pretzel_diagram(spec))
    nulls = {
        p: (pretzel_nullity(spec, p), exactla.nullspace_mod_p(A, p)[0],
            exactla.nullspace_mod_p(C, p)[0])
        for p in primes
    }
    return SweepRow(spec, pretzel_determinant(spec), abs(exactla.det(A)),
                    abs(exactla.det(C)), nulls)


def pipeline_sweep(max_m: int, max_q: int, primes: Sequence[int] = (2, 3, 5, 7)) -> list[SweepRow]:
    """Three-way comparison for every spec that closes to a knot."""
    return [sweep_row(s, primes) for s in all_specs(max_m, max_q) if closes_to_knot(s)]

"""Planar diagram codes and the combinatorics derived from them.

A crossing lists its four incident edges counterclockwise, starting with
the incoming under-edge, so slots 0/2 are the under pair and 1/3 the over
pair.  Orientation is never used beyond that: labels only need to pair up.

Faces are traced on darts.  A dart ``(x, i)`` leaves crossing ``x`` through
slot ``i``; it arrives at the other end ``(y, j)`` of the same edge, and the
face on its left continues out of ``y`` through slot ``j - 1``.  The corner
turned at ``y`` is quadrant ``(j - 1) % 4``, where quadrant ``q`` is the
sector swept counterclockwise from slot ``q`` to slot ``q + 1``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DisconnectedDiagram,
    LabelUsedOtherThanTwice,
    MalformedToken,
    MultiComponent,
    NonPlanarDiagram,
    ShadingInconsistent,
)

Dart = tuple[int, int]

_TOKEN = re.compile(r"X\[([^\[\]]*)\]")


@dataclass(frozen=True)
class Crossing:
    slots: tuple[int, int, int, int]

    @property
    def under(self) -> tuple[int, int]:
        return self.slots[0], self.slots[2]

    @property
    def over(self) -> tuple[int, int]:
        return self.slots[1], self.slots[3]

    def __str__(self) -> str:
        return "X[{},{},{},{}]".format(*self.slots)


@dataclass(frozen=True)
class Strand:
    id: int
    edges: tuple[int, ...]


@dataclass(frozen=True)
class PlanarDiagram:
    """A validated single-component knot diagram.

    Build through :func:`parse_pd` or :meth:`from_crossings`; the raw
    constructor skips validation.
    """

    crossings: tuple[Crossing, ...]

    @classmethod
    def from_crossings(cls, crossings: Iterable[Sequence[int]]) -> "PlanarDiagram":
        raw = [tuple(int(x) for x in c) for c in crossings]
        for c in raw:
            if len(c) != 4:
                raise MalformedToken(f"crossing {c} does not have 4 slots")
        d = cls(tuple(Crossing(c) for c in _normalize_labels(raw)))
        d.validate()
        return d

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @cached_property
    def edge_ends(self) -> dict[int, tuple[Dart, Dart]]:
        ends: dict[int, list[Dart]] = {}
        for x, c in enumerate(self.crossings):
            for i, label in enumerate(c.slots):
                ends.setdefault(label, []).append((x, i))
        return {label: (e[0], e[1]) for label, e in ends.items()}

    def label(self, dart: Dart) -> int:
        x, i = dart
        return self.crossings[x].slots[i]

    def partner(self, dart: Dart) -> Dart:
        """The other end of the edge leaving through ``dart``."""
        a, b = self.edge_ends[self.label(dart)]
        return b if a == dart else a

    def validate(self):
        counts: dict[int, int] = {}
        for c in self.crossings:
            for label in c.slots:
                counts[label] = counts.get(label, 0) + 1
        bad = sorted(label for label, k in counts.items() if k != 2)
        if bad:
            raise LabelUsedOtherThanTwice(f"edge labels not used exactly twice: {bad}")
        if not self.crossings:
            return
        if _count_classes(len(self.crossings), [
            (x, y) for (x, _), (y, _) in self.edge_ends.values()
        ]) != 1:
            raise DisconnectedDiagram("crossing graph is disconnected")
        if len(self.components()) != 1:
            raise MultiComponent(f"diagram has {len(self.components())} components")
        faces = len(_trace_faces(self))
        if faces != self.crossing_count + 2:
            raise NonPlanarDiagram(
                f"{faces} faces traced, expected {self.crossing_count + 2} for a planar diagram"
            )

    def components(self) -> list[tuple[int, ...]]:
        """Edge sets of the link components (straight through every crossing)."""
        pairs = []
        for c in self.crossings:
            pairs.append((c.slots[0], c.slots[2]))
            pairs.append((c.slots[1], c.slots[3]))
        return _classes(sorted(self.edge_ends), pairs)

    def to_pd(self) -> str:
        return " ".join(str(c) for c in self.crossings)

    def __str__(self) -> str:
        return self.to_pd() or "<0-crossing unknot>"


UNKNOT = PlanarDiagram(())


def _normalize_labels(raw: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    relabel = {label: k for k, label in enumerate(sorted({x for c in raw for x in c}), start=1)}
    return [tuple(relabel[x] for x in c) for c in raw]


def _classes(items: Sequence, pairs: Iterable[tuple]) -> list[tuple]:
    parent = {x: x for x in items}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for x in items:
        groups.setdefault(find(x), []).append(x)
    return [tuple(g) for g in groups.values()]


def _count_classes(n: int, pairs) -> int:
    return len(_classes(range(n), pairs))


def parse_pd(text: str) -> PlanarDiagram:
    """Parse ``X[a,b,c,d]`` tokens into a validated diagram.

    Tokens are separated by whitespace (commas between tokens and a
    surrounding ``PD[...]`` are tolerated); ``#`` starts a comment.
    Empty input is the 0-crossing unknot.
    """
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    wrapped = re.fullmatch(r"\s*PD\[(.*)\]\s*", body, flags=re.S)
    if wrapped:
        body = wrapped.group(1)
    leftover = _TOKEN.sub(" ", body).replace(",", " ").strip()
    if leftover:
        raise MalformedToken(f"unexpected text in PD code: {leftover[:40]!r}")
    crossings = []
    for m in _TOKEN.finditer(body):
        parts = [p.strip() for p in m.group(1).split(",")]
        if len(parts) != 4 or not all(re.fullmatch(r"[+-]?\d+", p) for p in parts):
            raise MalformedToken(f"bad crossing token {m.group(0)!r}")
        crossings.append(tuple(int(p) for p in parts))
    if not crossings:
        return UNKNOT
    return PlanarDiagram.from_crossings(crossings)


def read_pd(path) -> PlanarDiagram:
    with open(path) as fh:
        return parse_pd(fh.read())


# -- strands ------------------------------------------------------------------

def strands(d: PlanarDiagram) -> list[Strand]:
    """Overpass arcs, numbered by the smallest edge label they contain."""
    if not d.crossings:
        return [Strand(0, ())]
    runs = []
    seen: set[int] = set()
    starts = sorted(
        (d.label(dart), dart) for x in range(d.crossing_count) for dart in ((x, 0), (x, 2))
    )
    for label, dart in starts:
        if label in seen:
            continue
        run = []
        cur = dart
        while True:
            run.append(d.label(cur))
            y, j = d.partner(cur)
            if j % 2 == 0:
                break
            cur = (y, (j + 2) % 4)
        seen.update(run)
        runs.append(tuple(run))
    runs.sort(key=min)
    return [Strand(k, r) for k, r in enumerate(runs)]


def edge_strand_map(d: PlanarDiagram) -> dict[int, int]:
    return {e: s.id for s in strands(d) for e in s.edges}


# -- faces --------------------------------------------------------------------

@dataclass(frozen=True)
class Corner:
    """One step of a face boundary: run along ``edge``, then turn through
    quadrant ``quadrant`` of crossing ``crossing``."""

    edge: int
    crossing: int
    quadrant: int


@dataclass(frozen=True)
class Region:
    id: int
    boundary: tuple[Corner, ...]

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(c.edge for c in self.boundary)


def _trace_faces(d: PlanarDiagram) -> list[list[tuple[Dart, Corner]]]:
    faces = []
    used: set[Dart] = set()
    for x in range(d.crossing_count):
        for i in range(4):
            if (x, i) in used:
                continue
            face = []
            dart = (x, i)
            while dart not in used:
                used.add(dart)
                y, j = d.partner(dart)
                face.append((dart, Corner(d.label(dart), y, (j - 1) % 4)))
                dart = (y, (j - 1) % 4)
            faces.append(face)
    return faces


@dataclass(frozen=True)
class RegionComplex:
    """Faces of a diagram with a checkerboard shading and crossing signs.

    ``eta[x]`` is +1 when quadrants 0 and 2 of crossing ``x`` (the pair
    swept counterclockwise from an under slot to the next over slot) are
    shaded, -1 when quadrants 1 and 3 are.
    """

    regions: tuple[Region, ...]
    shaded: tuple[bool, ...]
    eta: tuple[int, ...]
    unbounded: int
    # edge label -> (region on the left of dart at first end, region on the other side)
    sides: dict[int, tuple[int, int]] = field(compare=False)
    quadrant_region: dict[tuple[int, int], int] = field(compare=False)

    @property
    def shaded_ids(self) -> list[int]:
        return [r.id for r in self.regions if self.shaded[r.id]]

    @property
    def unshaded_ids(self) -> list[int]:
        return [r.id for r in self.regions if not self.shaded[r.id]]

    def shaded_side(self, edge: int) -> tuple[int, int]:
        """``(shaded region, unshaded region)`` on the two sides of ``edge``."""
        a, b = self.sides[edge]
        return (a, b) if self.shaded[a] else (b, a)

    def shaded_pair(self, crossing: int) -> tuple[int, int]:
        """The shaded regions meeting at ``crossing`` (quadrants q, q + 2)."""
        q = 0 if self.eta[crossing] == 1 else 1
        return self.quadrant_region[crossing, q], self.quadrant_region[crossing, q + 2]

    def flipped(self) -> "RegionComplex":
        return RegionComplex(
            self.regions,
            tuple(not s for s in self.shaded),
            tuple(-e for e in self.eta),
            self.unbounded,
            self.sides,
            self.quadrant_region,
        )

    def dual_edges(self) -> list[tuple[int, int, int]]:
        """``(edge, region, region)`` for every edge of the diagram."""
        return [(e, a, b) for e, (a, b) in sorted(self.sides.items())]


def faces(d: PlanarDiagram, *, unbounded: int | None = None,
          shade_unbounded: bool = False) -> RegionComplex:
    """Trace faces and checkerboard-shade them.

    Regions are numbered by their sorted boundary labels.  Unless given,
    the unbounded region is taken to be the region with the most boundary
    edges (first in numbering on ties); it is left unshaded unless
    ``shade_unbounded`` is set.
    """
    if not d.crossings:
        ub = 0 if unbounded is None else unbounded
        shaded = [False, False]
        shaded[1 - ub] = True
        if shade_unbounded:
            shaded = [not s for s in shaded]
        return RegionComplex(
            (Region(0, ()), Region(1, ())), tuple(shaded), (), ub, {}, {}
        )

    traced = _trace_faces(d)
    traced.sort(key=lambda f: (sorted(c.edge for _, c in f), [dart for dart, _ in f]))
    regions = []
    dart_region: dict[Dart, int] = {}
    quadrant_region: dict[tuple[int, int], int] = {}
    for rid, face in enumerate(traced):
        # rotate so the boundary starts at its smallest edge label
        start = min(range(len(face)), key=lambda k: (face[k][1].edge, face[k][0]))
        face = face[start:] + face[:start]
        regions.append(Region(rid, tuple(c for _, c in face)))
        for dart, corner in face:
            dart_region[dart] = rid
            quadrant_region[corner.crossing, corner.quadrant] = rid

    sides = {}
    for label, (a, b) in d.edge_ends.items():
        sides[label] = (dart_region[a], dart_region[b])

    if unbounded is None:
        unbounded = max(regions, key=lambda r: (len(r.boundary), -r.id)).id

    adjacency: dict[int, list[int]] = {r.id: [] for r in regions}
    for a, b in sides.values():
        adjacency[a].append(b)
        adjacency[b].append(a)
    shade: dict[int, bool] = {unbounded: shade_unbounded}
    queue = deque([unbounded])
    while queue:
        r = queue.popleft()
        for s in adjacency[r]:
            if s not in shade:
                shade[s] = not shade[r]
                queue.append(s)
    for label, (a, b) in sides.items():
        if shade[a] == shade[b]:
            raise ShadingInconsistent(f"edge {label} has the same shading on both sides")

    eta = []
    for x in range(d.crossing_count):
        q = [shade[quadrant_region[x, k]] for k in range(4)]
        if not (q[0] == q[2] != q[1] == q[3]):
            raise ShadingInconsistent(f"crossing {x} is not checkerboard shaded")
        eta.append(1 if q[0] else -1)

    return RegionComplex(
        tuple(regions),
        tuple(shade[r.id] for r in regions),
        tuple(eta),
        unbounded,
        sides,
        quadrant_region,
    )

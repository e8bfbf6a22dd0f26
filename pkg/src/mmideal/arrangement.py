"""Exact planar line arrangements clipped to an axis-aligned box.

Everything here is two-dimensional and exact: lines are a*x + b*y = c with
rational coefficients, vertices are pairwise intersections, faces are the
open convex cells of the arrangement inside the box.  Faces are recovered
with the usual half-edge rotation trick: outgoing directions at a vertex are
sorted by exact angle (quadrant index plus cross-product comparisons — no
trigonometry), and each face is an orbit of the next-pointer.  The single
clockwise orbit along the box boundary is the outside and is dropped.

The module knows nothing about ideals; `walls` feeds it wall lines and
interprets the cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from .errors import InternalConsistencyError

__all__ = [
    "Line",
    "Edge",
    "Face",
    "Arrangement",
    "make_line",
    "merge_lines",
    "build_arrangement",
]

Point2 = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Line:
    """a*x + b*y = c, scaled so the first nonzero coefficient is +/-1 stable:
    divide through by the absolute value of the first nonzero of (a, b)."""

    a: Fraction
    b: Fraction
    c: Fraction
    sources: tuple[tuple[int, int], ...] = ()
    is_box: bool = False

    @property
    def key(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def value(self, point: Point2) -> Fraction:
        return self.a * point[0] + self.b * point[1]

    def contains(self, point: Point2) -> bool:
        return self.value(point) == self.c


def make_line(a, b, c, sources: Iterable[tuple[int, int]] = (), is_box: bool = False) -> Line:
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0 and b == 0:
        raise ValueError("degenerate line with zero normal")
    scale = abs(a) if a != 0 else abs(b)
    return Line(a / scale, b / scale, c / scale, tuple(sources), is_box)


def merge_lines(lines: Iterable[Line]) -> list[Line]:
    """Collapse geometrically coincident lines, concatenating their sources."""
    merged: dict[tuple[Fraction, Fraction, Fraction], Line] = {}
    for line in lines:
        seen = merged.get(line.key)
        if seen is None:
            merged[line.key] = line
        else:
            merged[line.key] = Line(
                seen.a,
                seen.b,
                seen.c,
                seen.sources + line.sources,
                seen.is_box or line.is_box,
            )
    return [merged[key] for key in sorted(merged)]


def _intersect(first: Line, second: Line) -> Point2 | None:
    det = first.a * second.b - first.b * second.a
    if det == 0:
        return None
    x = (first.c * second.b - first.b * second.c) / det
    y = (first.a * second.c - first.c * second.a) / det
    return (x, y)


def _direction_compare(left: Point2, right: Point2) -> int:
    """Exact comparison of direction vectors by angle in [0, 2*pi)."""

    def half(d: Point2) -> int:
        if d[1] > 0 or (d[1] == 0 and d[0] > 0):
            return 0
        return 1

    lh, rh = half(left), half(right)
    if lh != rh:
        return -1 if lh < rh else 1
    cross = left[0] * right[1] - left[1] * right[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


@dataclass(frozen=True)
class Edge:
    """Open segment between two arrangement vertices on one carrier line."""

    tail: int
    head: int
    line_index: int

    def midpoint(self, vertices: Sequence[Point2]) -> Point2:
        p, q = vertices[self.tail], vertices[self.head]
        return ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)


@dataclass(frozen=True)
class Face:
    """Convex open cell; `loop` lists vertex indices counterclockwise."""

    loop: tuple[int, ...]
    barycenter: Point2
    area: Fraction


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[Line, ...]
    vertices: tuple[Point2, ...]
    edges: tuple[Edge, ...]
    faces: tuple[Face, ...]
    # edge index -> (face on the low side of the carrier, face on the high
    # side); None marks the outside of the box
    edge_faces: tuple[tuple[int | None, int | None], ...]
    # per line, edge indices in order along the line
    line_edges: tuple[tuple[int, ...], ...]

    def vertex_lines(self, vertex: int) -> list[int]:
        point = self.vertices[vertex]
        return [
            i for i, line in enumerate(self.lines) if line.contains(point)
        ]


def build_arrangement(wall_lines: Sequence[Line], box: tuple[Fraction, Fraction]) -> Arrangement:
    bx, by = Fraction(box[0]), Fraction(box[1])
    if bx <= 0 or by <= 0:
        raise ValueError("box sides must be positive")
    lines = merge_lines(
        list(wall_lines)
        + [
            make_line(1, 0, 0, is_box=True),
            make_line(1, 0, bx, is_box=True),
            make_line(0, 1, 0, is_box=True),
            make_line(0, 1, by, is_box=True),
        ]
    )

    def inside(point: Point2) -> bool:
        return 0 <= point[0] <= bx and 0 <= point[1] <= by

    # vertices: all pairwise intersections within the closed box, with the
    # full set of incident lines accumulated as pairs are discovered
    incident: dict[Point2, set[int]] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            point = _intersect(lines[i], lines[j])
            if point is not None and inside(point):
                incident.setdefault(point, set()).update((i, j))
    if not incident:
        raise InternalConsistencyError("box corners missing from arrangement")

    vertices = tuple(sorted(incident))
    vertex_index = {point: n for n, point in enumerate(vertices)}

    # edges: consecutive vertices along each line
    edges: list[Edge] = []
    line_edges: list[tuple[int, ...]] = []
    for li, line in enumerate(lines):
        direction = (line.b, -line.a)
        on_line = [
            vertex_index[point]
            for point, incidents in incident.items()
            if li in incidents
        ]
        on_line.sort(
            key=lambda n: vertices[n][0] * direction[0]
            + vertices[n][1] * direction[1]
        )
        indices = []
        for tail, head in zip(on_line, on_line[1:]):
            indices.append(len(edges))
            edges.append(Edge(tail=tail, head=head, line_index=li))
        line_edges.append(tuple(indices))

    # half-edges: 2*e encodes tail->head of edge e, 2*e+1 the reverse
    def endpoints(half: int) -> tuple[int, int]:
        edge = edges[half // 2]
        return (edge.tail, edge.head) if half % 2 == 0 else (edge.head, edge.tail)

    outgoing: dict[int, list[int]] = {n: [] for n in range(len(vertices))}
    for e in range(len(edges)):
        outgoing[edges[e].tail].append(2 * e)
        outgoing[edges[e].head].append(2 * e + 1)

    def half_direction(half: int) -> Point2:
        tail, head = endpoints(half)
        return (
            vertices[head][0] - vertices[tail][0],
            vertices[head][1] - vertices[tail][1],
        )

    order_at: dict[int, dict[int, int]] = {}
    for vertex, halves in outgoing.items():
        halves.sort(key=cmp_to_key(
            lambda g, h: _direction_compare(half_direction(g), half_direction(h))
        ))
        order_at[vertex] = {half: pos for pos, half in enumerate(halves)}

    def next_half(half: int) -> int:
        # at the head vertex, rotate clockwise one step from the reversal
        twin = half ^ 1
        vertex = endpoints(twin)[0]
        ring = outgoing[vertex]
        position = order_at[vertex][twin]
        return ring[(position - 1) % len(ring)]

    # face orbits
    face_of_half: dict[int, int] = {}
    loops: list[tuple[int, ...]] = []
    for start in range(2 * len(edges)):
        if start in face_of_half:
            continue
        orbit = []
        half = start
        while True:
            orbit.append(half)
            face_of_half[half] = len(loops)
            half = next_half(half)
            if half == start:
                break
        loops.append(tuple(orbit))

    faces: list[Face] = []
    face_renumber: dict[int, int | None] = {}
    dropped = 0
    for li, orbit in enumerate(loops):
        loop = tuple(endpoints(half)[0] for half in orbit)
        doubled = Fraction(0)
        for a, b in zip(loop, loop[1:] + loop[:1]):
            pa, pb = vertices[a], vertices[b]
            doubled += pa[0] * pb[1] - pb[0] * pa[1]
        if doubled <= 0:
            face_renumber[li] = None
            dropped += 1
            continue
        barycenter = (
            sum((vertices[n][0] for n in loop), Fraction(0)) / len(loop),
            sum((vertices[n][1] for n in loop), Fraction(0)) / len(loop),
        )
        face_renumber[li] = len(faces)
        faces.append(Face(loop=loop, barycenter=barycenter, area=doubled / 2))
    if dropped != 1:
        raise InternalConsistencyError(
            f"expected exactly one outer orbit, found {dropped}"
        )
    if len(vertices) - len(edges) + (len(faces) + 1) != 2:
        raise InternalConsistencyError("Euler characteristic violated")

    edge_faces: list[tuple[int | None, int | None]] = []
    for e, edge in enumerate(edges):
        line = lines[edge.line_index]
        sides: dict[bool, int | None] = {False: None, True: None}
        for half in (2 * e, 2 * e + 1):
            face_id = face_renumber[face_of_half[half]]
            if face_id is None:
                continue
            value = line.value(faces[face_id].barycenter)
            if value == line.c:
                raise InternalConsistencyError(
                    "face barycenter lies on an incident carrier line"
                )
            sides[value > line.c] = face_id
        edge_faces.append((sides[False], sides[True]))

    return Arrangement(
        lines=tuple(lines),
        vertices=vertices,
        edges=tuple(edges),
        faces=tuple(faces),
        edge_faces=tuple(edge_faces),
        line_edges=tuple(line_edges),
    )

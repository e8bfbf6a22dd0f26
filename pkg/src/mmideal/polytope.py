"""Exact halfspace intersection in low dimension by vertex enumeration.

The regions this library works with are intersections of closed halfspaces
``normal . z <= bound`` over exact rationals, always bounded in practice
(every wall constraint has a strictly positive normal, and the nonnegative
orthant constraints are included explicitly).  Vertices are enumerated by
solving every r-subset of constraint hyperplanes exactly and keeping the
solutions that satisfy all constraints; this is quadratic-ish in the number
of constraints but the dimensions here are r = 1, 2, 3 with a handful of
constraints, so exactness wins over cleverness.

A constraint is classified against the resulting polytope as

* ``facet`` — its incident vertices affinely span dimension r - 1;
* ``touch`` — it has incident vertices but they span less;
* ``slack`` — no vertex lies on it.

Two constraints may be *coincident* (equal halfspaces up to positive
scaling); both then earn the same classification.  Geometric dedup is by the
canonical key of the hyperplane.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class Halfspace:
    """The closed halfspace normal . z <= bound."""

    normal: Vector
    bound: Fraction

    def value(self, point: Sequence[Fraction]) -> Fraction:
        return sum((n * x for n, x in zip(self.normal, point)), Fraction(0))

    def contains(self, point: Sequence[Fraction]) -> bool:
        return self.value(point) <= self.bound

    def active_at(self, point: Sequence[Fraction]) -> bool:
        return self.value(point) == self.bound

    def key(self) -> tuple[Fraction, ...]:
        """Canonical form invariant under positive scaling (halfspace identity)."""
        for entry in self.normal:
            if entry != 0:
                scale = abs(entry)
                return tuple(n / scale for n in self.normal) + (self.bound / scale,)
        raise ValueError("halfspace with zero normal")


def make_halfspace(normal: Iterable, bound) -> Halfspace:
    return Halfspace(tuple(Fraction(n) for n in normal), Fraction(bound))


def orthant_halfspaces(dimension: int) -> list[Halfspace]:
    """The constraints z_i >= 0, written as (-e_i) . z <= 0."""
    spaces = []
    for i in range(dimension):
        normal = tuple(
            Fraction(-1) if j == i else Fraction(0) for j in range(dimension)
        )
        spaces.append(Halfspace(normal, Fraction(0)))
    return spaces


def solve_square(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Solve a small square system exactly; None if singular."""
    size = len(rows)
    work = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(size):
        pivot_row = next(
            (r for r in range(col, size) if work[r][col] != 0), None
        )
        if pivot_row is None:
            return None
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [entry / pivot for entry in work[col]]
        for r in range(size):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [e - factor * lead for e, lead in zip(work[r], work[col])]
    return tuple(work[r][size] for r in range(size))


def affine_rank(points: Sequence[Vector]) -> int:
    """Dimension of the affine hull of a point set (-1 for empty)."""
    if not points:
        return -1
    base = points[0]
    rows = [
        [coordinate - base_coordinate for coordinate, base_coordinate in zip(p, base)]
        for p in points[1:]
    ]
    # Gaussian elimination rank over the rationals
    rank = 0
    cols = len(base)
    pivot_col = 0
    while rows and pivot_col < cols:
        pivot_row = next((i for i, row in enumerate(rows) if row[pivot_col] != 0), None)
        if pivot_row is None:
            pivot_col += 1
            continue
        rows[0], rows[pivot_row] = rows[pivot_row], rows[0]
        lead = rows[0]
        for i in range(1, len(rows)):
            if rows[i][pivot_col] != 0:
                factor = rows[i][pivot_col] / lead[pivot_col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], lead)]
        rows = rows[1:]
        rank += 1
        pivot_col += 1
    return rank


@dataclass(frozen=True)
class Polytope:
    """A bounded intersection of closed halfspaces with its vertex set."""

    halfspaces: tuple[Halfspace, ...]
    vertices: tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.halfspaces[0].normal)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def contains(self, point: Sequence[Fraction]) -> bool:
        return all(h.contains(point) for h in self.halfspaces)

    def incident_vertices(self, index: int) -> tuple[Vector, ...]:
        space = self.halfspaces[index]
        return tuple(v for v in self.vertices if space.active_at(v))

    def classify(self, index: int) -> str:
        """'facet', 'touch', or 'slack' for the index-th halfspace."""
        incident = self.incident_vertices(index)
        if not incident:
            return "slack"
        if affine_rank(incident) == self.dimension - 1:
            return "facet"
        return "touch"

    def facet_keys(self) -> dict[tuple[Fraction, ...], list[int]]:
        """Distinct facet-supporting hyperplanes -> indices of carrying constraints."""
        keys: dict[tuple[Fraction, ...], list[int]] = {}
        for index in range(len(self.halfspaces)):
            if self.classify(index) == "facet":
                keys.setdefault(self.halfspaces[index].key(), []).append(index)
        return keys


def intersect_halfspaces(halfspaces: Sequence[Halfspace]) -> Polytope:
    """Enumerate the vertices of a *bounded* intersection of halfspaces.

    Callers guarantee boundedness (wall constraints have strictly positive
    normals and the orthant constraints are present, or an explicit box is
    part of the input).
    """
    spaces = tuple(halfspaces)
    if not spaces:
        raise ValueError("no halfspaces given")
    dimension = len(spaces[0].normal)
    vertices: set[Vector] = set()
    for subset in combinations(range(len(spaces)), dimension):
        rows = [spaces[i].normal for i in subset]
        rhs = [spaces[i].bound for i in subset]
        solution = solve_square(rows, rhs)
        if solution is None:
            continue
        if all(h.contains(solution) for h in spaces):
            vertices.add(solution)
    return Polytope(halfspaces=spaces, vertices=tuple(sorted(vertices)))


def same_region(a: Polytope, b: Polytope) -> bool:
    """Equality of the two regions, compared through their closures.

    Both arguments are closures of regions of the form
    {z in the orthant : strict wall inequalities}; two such regions with the
    same closure are equal as sets, and bounded closed polytopes coincide iff
    their vertex sets do.
    """
    return set(a.vertices) == set(b.vertices)


def redundant_over(polytope: Polytope, halfspace: Halfspace) -> bool:
    """True iff adding the (strict) halfspace would not cut the region.

    For a bounded polytope the maximum of the linear form is attained at a
    vertex, so the open region carved from `polytope` loses points iff some
    vertex exceeds the bound.
    """
    return all(halfspace.value(v) <= halfspace.bound for v in polytope.vertices)

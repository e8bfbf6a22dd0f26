"""Dual graphs of resolutions: intersection matrices, canonical data, ideals.

The combinatorial input is a symmetric negative-definite intersection matrix
M over the exceptional components E_1..E_s of a resolution of a complex
surface point.  Off-diagonal entries are 0/1 (the components form a tree of
smooth rational curves), diagonal entries are integers <= -1.

From M alone the module computes, eagerly at build time:

* the relative canonical divisor K: the unique rational vector with
  (K + E_j).E_j = -2 for every j, i.e. M K = b with b_j = -2 - M[j][j];
* the fundamental cycle Z: the smallest nonzero antinef divisor.

A tuple of ideals is attached as a tuple of antinef vectors F_i (the
vanishing orders of the i-th ideal along each component).  Excesses
rho[i][j] = -F_i.E_j classify components: *dicritical* ones carry positive
excess for some ideal, *rupture* ones have valence >= 3 in the tree.

Indices are 0-based internally; user-facing labels are "E1".."Es".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    BadOffDiagonal,
    Disconnected,
    DivisionByZero,
    InternalConsistencyError,
    LengthMismatch,
    NonIntegralSelfIntersection,
    NotAntinef,
    NotNegativeDefinite,
    NotSymmetric,
    NotTree,
    ValidationError,
)
from .unloading import fundamental_cycle, intersection_products, is_antinef

Matrix = tuple[tuple[int, ...], ...]


class SingularityClass(enum.Enum):
    """Coarse classification by the coefficients of K."""

    LOG_TERMINAL = "LogTerminal"          # every k_j > -1
    LOG_CANONICAL_ONLY = "LogCanonicalOnly"  # every k_j >= -1, some = -1
    NEITHER = "Neither"                   # some k_j < -1


@dataclass(frozen=True)
class DualGraph:
    """Immutable dual graph with its eagerly computed canonical data."""

    matrix: Matrix
    canonical: tuple[Fraction, ...]
    fundamental: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.matrix)

    def valence(self, j: int) -> int:
        return len(self.adjacency[j])

    @property
    def rupture(self) -> tuple[bool, ...]:
        return tuple(self.valence(j) >= 3 for j in range(self.size))

    def label(self, j: int) -> str:
        return self.labels[j]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise LengthMismatch(f"unknown component label: {label!r}") from None


@dataclass(frozen=True)
class IdealTuple:
    """A dual graph together with r attached antinef ideal vectors."""

    graph: DualGraph
    ideals: tuple[tuple[int, ...], ...]
    excesses: tuple[tuple[int, ...], ...]  # excesses[i][j] = -F_i . E_j

    @property
    def r(self) -> int:
        return len(self.ideals)

    @property
    def size(self) -> int:
        return self.graph.size

    @property
    def dicritical(self) -> tuple[bool, ...]:
        """Components carrying positive excess for at least one ideal."""
        return tuple(
            any(self.excesses[i][j] > 0 for i in range(self.r))
            for j in range(self.size)
        )

    @property
    def rupture_or_dicritical(self) -> tuple[bool, ...]:
        rupture = self.graph.rupture
        dicritical = self.dicritical
        return tuple(a or b for a, b in zip(rupture, dicritical))


# ---------------------------------------------------------------------------
# Exact linear algebra helpers (integer Bareiss determinant, Fraction solve).
# ---------------------------------------------------------------------------


def _determinant_int(rows: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    size = len(rows)
    if size == 0:
        return 1
    work = [row[:] for row in rows]
    sign = 1
    previous_pivot = 1
    for k in range(size - 1):
        if work[k][k] == 0:
            for swap in range(k + 1, size):
                if work[swap][k] != 0:
                    work[k], work[swap] = work[swap], work[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                numerator = work[i][j] * work[k][k] - work[i][k] * work[k][j]
                quotient, remainder = divmod(numerator, previous_pivot)
                if remainder:
                    raise InternalConsistencyError("Bareiss division not exact")
                work[i][j] = quotient
            work[i][k] = 0
        previous_pivot = work[k][k]
    return sign * work[size - 1][size - 1]


def _solve_exact(matrix: Matrix, rhs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Solve M x = rhs exactly by fraction Gaussian elimination."""
    size = len(matrix)
    work = [[Fraction(matrix[i][j]) for j in range(size)] + [Fraction(rhs[i])]
            for i in range(size)]
    for col in range(size):
        pivot_row = next(
            (row for row in range(col, size) if work[row][col] != 0), None
        )
        if pivot_row is None:
            raise DivisionByZero("intersection matrix is singular")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [entry / pivot for entry in work[col]]
        for row in range(size):
            if row != col and work[row][col] != 0:
                factor = work[row][col]
                work[row] = [
                    entry - factor * lead
                    for entry, lead in zip(work[row], work[col])
                ]
    return tuple(work[row][size] for row in range(size))


# ---------------------------------------------------------------------------
# Graph construction and validation.
# ---------------------------------------------------------------------------


def _normalized_matrix(matrix_like) -> Matrix:
    rows = [list(row) for row in matrix_like]
    size = len(rows)
    for row in rows:
        if len(row) != size:
            raise LengthMismatch("intersection matrix must be square")
        for entry in row:
            if entry != int(entry):
                raise NonIntegralSelfIntersection(
                    f"matrix entries must be integers, got {entry!r}"
                )
    return tuple(tuple(int(entry) for entry in row) for row in rows)


def _validate_matrix(matrix: Matrix) -> tuple[tuple[int, ...], ...]:
    """Full admissibility check; returns the adjacency lists."""
    size = len(matrix)
    if size == 0:
        raise LengthMismatch("intersection matrix is empty")
    for i in range(size):
        for j in range(size):
            if matrix[i][j] != matrix[j][i]:
                raise NotSymmetric(f"matrix not symmetric at ({i + 1},{j + 1})")
            if i != j and matrix[i][j] not in (0, 1):
                raise BadOffDiagonal(
                    f"off-diagonal entry at ({i + 1},{j + 1}) is {matrix[i][j]}"
                )
        if matrix[i][i] > -1:
            raise NotNegativeDefinite(
                f"self-intersection of E{i + 1} is {matrix[i][i]} (must be <= -1)"
            )
    adjacency = tuple(
        tuple(j for j in range(size) if j != i and matrix[i][j] == 1)
        for i in range(size)
    )
    edge_count = sum(len(neighbors) for neighbors in adjacency) // 2
    # connectivity by depth-first search
    seen = {0}
    stack = [0]
    while stack:
        current = stack.pop()
        for neighbor in adjacency[current]:
            if neighbor not in seen:
                seen.add(neighbor)
                stack.append(neighbor)
    if len(seen) != size:
        raise Disconnected(f"dual graph has {size - len(seen)} unreachable components")
    if edge_count != size - 1:
        raise NotTree(f"connected graph with {edge_count} edges on {size} vertices")
    # negative definiteness: leading principal minors alternate in sign
    for k in range(1, size + 1):
        minor = _determinant_int([list(row[:k]) for row in matrix[:k]])
        if minor * (-1) ** k <= 0:
            raise NotNegativeDefinite(
                f"leading principal minor of order {k} is {minor}"
            )
    return adjacency


def build_graph(matrix_like, labels: Sequence[str] | None = None) -> DualGraph:
    """Validate an intersection matrix and build the graph with K and Z."""
    matrix = _normalized_matrix(matrix_like)
    adjacency = _validate_matrix(matrix)
    size = len(matrix)
    if labels is None:
        labels = tuple(f"E{j + 1}" for j in range(size))
    else:
        labels = tuple(str(label) for label in labels)
        if len(labels) != size:
            raise LengthMismatch("label count does not match matrix size")
    rhs = [Fraction(-2 - matrix[j][j]) for j in range(size)]
    canonical = _solve_exact(matrix, rhs)
    fundamental = fundamental_cycle(matrix)
    if any(coefficient < 1 for coefficient in fundamental):
        raise InternalConsistencyError("fundamental cycle is not strictly positive")
    return DualGraph(
        matrix=matrix,
        canonical=canonical,
        fundamental=fundamental,
        adjacency=adjacency,
        labels=labels,
    )


def derive_diagonal(
    edges: Sequence[tuple[int, int]],
    canonical: Sequence[Fraction],
    *,
    one_based: bool = False,
) -> tuple[int, ...]:
    """Reconstruct self-intersections from a tree and its canonical divisor.

    Solving (K + E_j).E_j = -2 for the diagonal gives

        E_j^2 = -(2 + sum of k_l over neighbors l of j) / (k_j + 1).

    *edges* are index pairs (0-based by default; pass one_based=True for
    1-based pairs as used in fixture files).  Raises DivisionByZero when some
    k_j = -1 and NonIntegralSelfIntersection when the quotient is not an
    integer <= -1.
    """
    canonical = tuple(Fraction(k) for k in canonical)
    size = len(canonical)
    offset = 1 if one_based else 0
    neighbor_sets: list[set[int]] = [set() for _ in range(size)]
    for a, b in edges:
        a -= offset
        b -= offset
        if not (0 <= a < size and 0 <= b < size) or a == b:
            raise LengthMismatch(f"edge ({a + offset},{b + offset}) out of range")
        neighbor_sets[a].add(b)
        neighbor_sets[b].add(a)
    diagonal = []
    for j in range(size):
        denominator = canonical[j] + 1
        if denominator == 0:
            raise DivisionByZero(
                f"component E{j + 1} has canonical coefficient -1; "
                "its self-intersection is not determined by the tree"
            )
        value = -(2 + sum(canonical[l] for l in neighbor_sets[j])) / denominator
        if value.denominator != 1 or value > -1:
            raise NonIntegralSelfIntersection(
                f"component E{j + 1} would need self-intersection {value}"
            )
        diagonal.append(int(value))
    return tuple(diagonal)


def graph_from_adjacency(
    edges: Sequence[tuple[int, int]],
    canonical: Sequence[Fraction],
    labels: Sequence[str] | None = None,
    *,
    one_based: bool = False,
) -> DualGraph:
    """Assemble and validate a graph from tree edges plus K.

    The derived matrix must reproduce the given K exactly (checked)."""
    canonical = tuple(Fraction(k) for k in canonical)
    diagonal = derive_diagonal(edges, canonical, one_based=one_based)
    size = len(canonical)
    offset = 1 if one_based else 0
    rows = [[0] * size for _ in range(size)]
    for j in range(size):
        rows[j][j] = diagonal[j]
    for a, b in edges:
        rows[a - offset][b - offset] = 1
        rows[b - offset][a - offset] = 1
    graph = build_graph(rows, labels)
    if graph.canonical != canonical:
        raise InternalConsistencyError(
            "derived matrix does not reproduce the given canonical divisor"
        )
    return graph


def attach_ideals(graph: DualGraph, ideals: Sequence[Sequence[int]]) -> IdealTuple:
    """Attach a tuple of ideals given by their antinef vanishing-order vectors."""
    if not ideals:
        raise ValidationError("at least one ideal is required")
    normalized = []
    for index, vector in enumerate(ideals):
        if len(vector) != graph.size:
            raise LengthMismatch(
                f"ideal {index + 1} has {len(vector)} coefficients, "
                f"graph has {graph.size} components"
            )
        entries = tuple(int(v) for v in vector)
        if any(entry != original for entry, original in zip(entries, vector)):
            raise NotAntinef(f"ideal {index + 1} has non-integer coefficients")
        if all(entry == 0 for entry in entries):
            raise NotAntinef(f"ideal {index + 1} is the zero divisor")
        if not is_antinef(graph.matrix, entries):
            products = intersection_products(graph.matrix, entries)
            bad = [
                graph.label(j)
                for j, product in enumerate(products)
                if product > 0 or entries[j] < 0
            ]
            raise NotAntinef(
                f"ideal {index + 1} is not antinef (violations at {', '.join(bad)})"
            )
        if any(entry < 1 for entry in entries):
            # nonzero antinef divisors on a connected graph have full support
            raise NotAntinef(f"ideal {index + 1} lacks full support")
        normalized.append(entries)
    excesses = tuple(
        tuple(-product for product in intersection_products(graph.matrix, vector))
        for vector in normalized
    )
    return IdealTuple(graph=graph, ideals=tuple(normalized), excesses=excesses)


def singularity_class(graph: DualGraph) -> SingularityClass:
    """Classify by K: log-terminal (> -1), log-canonical only, or neither."""
    if any(k < -1 for k in graph.canonical):
        return SingularityClass.NEITHER
    if any(k == -1 for k in graph.canonical):
        return SingularityClass.LOG_CANONICAL_ONLY
    return SingularityClass.LOG_TERMINAL

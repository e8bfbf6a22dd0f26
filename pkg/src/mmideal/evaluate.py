"""Evaluation of mixed-multiplier-ideal divisors at rational weight points.

For a tuple of ideals with vanishing-order vectors F_1..F_r and a weight
point c in the nonnegative orthant, the attached ideal is encoded by the
antinef divisor

    D_c = antinef closure of floor(c_1 F_1 + ... + c_r F_r - K).

Writing v_j = (c.F)_j - k_j (the "gap value" at component j), the one-sided
limit divisor D_{(1-eps)c} for all small eps > 0 is computed symbolically:
component j gets floor(v_j) - 1 when v_j is an integer and (c.F)_j > 0, and
floor(v_j) otherwise.  No numeric epsilon is ever chosen.

The maximal jumping divisor H_c is the reduced divisor supported on
{j : v_j is a strictly positive integer}; the support equality between H_c
and the clamped floor-difference is asserted on every call.

The constancy region of c is the set of weights with the same ideal: the
points z >= 0 with (z.F)_j < k_j + 1 + e_j^c for every j, where e^c = D_c.
Constraints are emitted for all components; a validation pass checks that
dropping every non-rupture, non-dicritical constraint leaves the open region
unchanged (the binding constraints belong to rupture or dicritical
components).  Violations are reported in the result, never raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dualgraph import IdealTuple
from .errors import InternalConsistencyError, LengthMismatch, ValidationError
from .polytope import (
    Halfspace,
    Polytope,
    intersect_halfspaces,
    orthant_halfspaces,
    redundant_over,
    same_region,
)
from .unloading import antinef_closure_checked

Point = tuple[Fraction, ...]


def normalize_point(ideals: IdealTuple, point: Sequence) -> Point:
    coords = tuple(Fraction(x) for x in point)
    if len(coords) != ideals.r:
        raise LengthMismatch(
            f"point has {len(coords)} coordinates, tuple has {ideals.r} ideals"
        )
    if any(x < 0 for x in coords):
        raise ValidationError(f"point {coords} has a negative coordinate")
    return coords


def weighted_F(ideals: IdealTuple, point: Sequence) -> tuple[Fraction, ...]:
    """The rational divisor c_1 F_1 + ... + c_r F_r."""
    coords = normalize_point(ideals, point)
    size = ideals.size
    return tuple(
        sum(
            (coords[i] * ideals.ideals[i][j] for i in range(ideals.r)),
            Fraction(0),
        )
        for j in range(size)
    )


def gap_values(ideals: IdealTuple, point: Sequence) -> tuple[Fraction, ...]:
    """v_j = (c.F)_j - k_j for every component."""
    weighted = weighted_F(ideals, point)
    return tuple(w - k for w, k in zip(weighted, ideals.graph.canonical))


def _floor(value: Fraction) -> int:
    return value.numerator // value.denominator


def mmi_divisor(ideals: IdealTuple, point: Sequence) -> tuple[int, ...]:
    """D_c: the antinef closure of floor(c.F - K)."""
    raw = [_floor(v) for v in gap_values(ideals, point)]
    return antinef_closure_checked(ideals.graph.matrix, raw)


def _left_floor(ideals: IdealTuple, point: Sequence) -> list[int]:
    weighted = weighted_F(ideals, point)
    values = [w - k for w, k in zip(weighted, ideals.graph.canonical)]
    floors = []
    for w, v in zip(weighted, values):
        if v.denominator == 1 and w > 0:
            floors.append(int(v) - 1)
        else:
            floors.append(_floor(v))
    return floors


def mmi_divisor_left(ideals: IdealTuple, point: Sequence) -> tuple[int, ...]:
    """D_{(1-eps)c} for all sufficiently small eps > 0, symbolically."""
    return antinef_closure_checked(ideals.graph.matrix, _left_floor(ideals, point))


def maximal_jumping_divisor(ideals: IdealTuple, point: Sequence) -> tuple[bool, ...]:
    """H_c: support = {j : v_j is a strictly positive integer}.

    The equivalent clamped-floor characterization — the support of
    max(floor(v), 0) - max(left-floor(v), 0) — is asserted to agree exactly.
    """
    values = gap_values(ideals, point)
    support = tuple(v.denominator == 1 and v > 0 for v in values)
    floors = [max(_floor(v), 0) for v in values]
    left = [max(f, 0) for f in _left_floor(ideals, point)]
    differences = tuple(a != b for a, b in zip(floors, left))
    if differences != support:
        raise InternalConsistencyError(
            "clamped floor-difference support disagrees with the integrality scan "
            f"at {tuple(point)}"
        )
    return support


def support_components(ideals: IdealTuple, support: Sequence[bool]) -> list[list[int]]:
    """Connected components (index lists) of a reduced divisor in the tree."""
    adjacency = ideals.graph.adjacency
    seen = [False] * len(support)
    components = []
    for start, inside in enumerate(support):
        if not inside or seen[start]:
            continue
        stack = [start]
        seen[start] = True
        component = []
        while stack:
            current = stack.pop()
            component.append(current)
            for neighbor in adjacency[current]:
                if support[neighbor] and not seen[neighbor]:
                    seen[neighbor] = True
                    stack.append(neighbor)
        components.append(sorted(component))
    return components


@dataclass(frozen=True)
class RegionReport:
    """The constancy-region polytope of a point, with validation results.

    `polytope` uses every component's constraint plus the orthant bounds;
    `restricted` keeps only rupture/dicritical constraints.  `classification`
    classifies each component's constraint against the full polytope as
    'facet', 'touch', or 'slack'.  `binding_non_rupture` lists components
    whose constraint genuinely cuts the restricted open region — expected to
    be empty always; surfaced for reporting rather than raised.
    """

    center: Point
    bounds: tuple[Fraction, ...]
    polytope: Polytope
    restricted: Polytope
    classification: tuple[str, ...]
    binding_non_rupture: tuple[int, ...]

    @property
    def valid(self) -> bool:
        return not self.binding_non_rupture


def region(ideals: IdealTuple, point: Sequence) -> RegionReport:
    """Open constancy region {z >= 0 : (z.F)_j < k_j + 1 + e_j^c for all j}."""
    coords = normalize_point(ideals, point)
    divisor = mmi_divisor(ideals, coords)
    bounds = tuple(
        k + 1 + e for k, e in zip(ideals.graph.canonical, divisor)
    )
    axis = orthant_halfspaces(ideals.r)
    constraints = [
        Halfspace(
            tuple(Fraction(ideals.ideals[i][j]) for i in range(ideals.r)),
            bounds[j],
        )
        for j in range(ideals.size)
    ]
    full = intersect_halfspaces(axis + constraints)
    keep = ideals.rupture_or_dicritical
    restricted_spaces = axis + [c for j, c in enumerate(constraints) if keep[j]]
    restricted = intersect_halfspaces(restricted_spaces)
    offset = len(axis)
    classification = tuple(
        full.classify(offset + j) for j in range(ideals.size)
    )
    binding = []
    if not same_region(full, restricted):
        for j, constraint in enumerate(constraints):
            if not keep[j] and not redundant_over(restricted, constraint):
                binding.append(j)
    return RegionReport(
        center=coords,
        bounds=bounds,
        polytope=full,
        restricted=restricted,
        classification=classification,
        binding_non_rupture=tuple(binding),
    )


def subtuple(ideals: IdealTuple, indices: Sequence[int]) -> IdealTuple:
    """The tuple restricted to the chosen ideals (0-based indices)."""
    from .dualgraph import attach_ideals

    chosen = [ideals.ideals[i] for i in indices]
    return attach_ideals(ideals.graph, chosen)


def combined_ideal(ideals: IdealTuple, weights: Sequence[int]) -> tuple[int, ...]:
    """The single ideal with vector sum(weights_i * F_i) (product of powers).

    Used by the planar-slice reduction: the slice through an axis point and
    an interior point sees the duple (F_a, sum of weighted others).
    """
    if len(weights) != ideals.r:
        raise LengthMismatch("one integer weight per ideal required")
    if any(w < 0 for w in weights) or all(w == 0 for w in weights):
        raise ValidationError("weights must be nonnegative and not all zero")
    size = ideals.size
    return tuple(
        sum(weights[i] * ideals.ideals[i][j] for i in range(ideals.r))
        for j in range(size)
    )

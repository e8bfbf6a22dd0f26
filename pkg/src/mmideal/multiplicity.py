"""Jump multiplicities by independent routes, jumping tests, perturbation sums.

The multiplicity of a weight point c measures the codimension of the ideal
at c inside its one-sided limit ideal.  Three routes compute it for any c:

* adjunction form:   m = (ceil(K - c.F) + H_c) . H_c + #components(H_c);
* fractional form:   sum over components E_i of H_c of
                     (sum of fractional parts of v_j over graph neighbors j
                      + sum_i c_i rho_{i,.}) minus #components(H_c);
* colength oracle:   colength(D_c) - colength(D_left).

A fourth route evaluates the adjunction form on the *minimal* jumping
divisor G and is valid at jumping points only.  All routes are exact; any
disagreement is an internal-consistency failure, never a rounding question.

The perturbation sum rule decomposes the multiplicity at a point lying on
several wall lines into the multiplicities at one generic point per line,
obtained by intersecting the lines with a parallel ray shifted by a small
exact offset.  Admissibility of the offset is itself checked exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dualgraph import IdealTuple
from .errors import (
    InequalityViolated,
    InternalConsistencyError,
    NonIntegralTotal,
    NotAJumpingPoint,
    OffsetTooLarge,
    ValidationError,
)
from .evaluate import (
    Point,
    gap_values,
    maximal_jumping_divisor,
    mmi_divisor,
    mmi_divisor_left,
    normalize_point,
    support_components,
    weighted_F,
)
from .unloading import colength, pairing

__all__ = [
    "multiplicity",
    "multiplicity_fractional",
    "multiplicity_oracle",
    "multiplicity_via_G",
    "multiplicity_checked",
    "is_jumping",
    "check_H_inequalities",
    "minimal_jumping_divisor",
    "jump_record",
    "wall_lines_through",
    "perturbation_sum",
    "default_offset",
    "admissible_perturbation",
    "JumpRecord",
    "HInequalityReport",
    "PerturbationReport",
]


def ceil_K_minus_cF(ideals: IdealTuple, point: Sequence) -> tuple[int, ...]:
    """ceil(K - c.F) componentwise; equals -floor(v) exactly."""
    values = gap_values(ideals, point)
    return tuple(-(v.numerator // v.denominator) for v in values)


def _adjunction_value(
    ideals: IdealTuple, ceiling: Sequence[int], support: Sequence[bool]
) -> int:
    indicator = [1 if inside else 0 for inside in support]
    shifted = [c + h for c, h in zip(ceiling, indicator)]
    product = pairing(ideals.graph.matrix, shifted, indicator)
    return product + len(support_components(ideals, support))


def multiplicity(ideals: IdealTuple, point: Sequence) -> int:
    """Adjunction-form multiplicity (the production route)."""
    support = maximal_jumping_divisor(ideals, point)
    if not any(support):
        return 0
    ceiling = ceil_K_minus_cF(ideals, point)
    return _adjunction_value(ideals, ceiling, support)


def multiplicity_fractional(ideals: IdealTuple, point: Sequence) -> int:
    """Fractional-parts form of the multiplicity; must equal `multiplicity`."""
    coords = normalize_point(ideals, point)
    support = maximal_jumping_divisor(ideals, coords)
    if not any(support):
        return 0
    values = gap_values(ideals, coords)
    adjacency = ideals.graph.adjacency
    total = Fraction(0)
    for i, inside in enumerate(support):
        if not inside:
            continue
        fractional = sum(
            (values[j] - (values[j].numerator // values[j].denominator)
             for j in adjacency[i]),
            Fraction(0),
        )
        excess = sum(
            (coords[k] * ideals.excesses[k][i] for k in range(ideals.r)),
            Fraction(0),
        )
        total += fractional + excess
    total -= len(support_components(ideals, support))
    if total.denominator != 1:
        raise NonIntegralTotal(
            f"fractional-form multiplicity is {total} at {coords}"
        )
    return int(total)


def multiplicity_oracle(ideals: IdealTuple, point: Sequence) -> int:
    """Independent oracle: colength(D_c) - colength(D_left)."""
    graph = ideals.graph
    at = colength(graph.matrix, graph.canonical, mmi_divisor(ideals, point))
    left = colength(graph.matrix, graph.canonical, mmi_divisor_left(ideals, point))
    return at - left


def multiplicity_checked(ideals: IdealTuple, point: Sequence) -> int:
    """All always-defined routes, asserted equal; via-G added at jumping points."""
    adjunction = multiplicity(ideals, point)
    fractional = multiplicity_fractional(ideals, point)
    oracle = multiplicity_oracle(ideals, point)
    if not (adjunction == fractional == oracle):
        raise InternalConsistencyError(
            f"multiplicity routes disagree at {tuple(point)}: "
            f"adjunction {adjunction}, fractional {fractional}, oracle {oracle}"
        )
    if adjunction > 0:
        via_G = multiplicity_via_G(ideals, point)
        if via_G != adjunction:
            raise InternalConsistencyError(
                f"minimal-divisor route gives {via_G} != {adjunction} "
                f"at {tuple(point)}"
            )
    return adjunction


def is_jumping(ideals: IdealTuple, point: Sequence) -> tuple[bool, list[int] | None]:
    """(jumping?, witness component of H achieving the criterion).

    The criterion — some connected component H' of H_c with
    (ceil(K - c.F) + H_c) . H' >= 0 — is asserted to agree with m > 0.
    """
    support = maximal_jumping_divisor(ideals, point)
    witness = None
    if any(support):
        ceiling = ceil_K_minus_cF(ideals, point)
        indicator = [1 if inside else 0 for inside in support]
        shifted = [c + h for c, h in zip(ceiling, indicator)]
        for component in support_components(ideals, support):
            part = [1 if j in component else 0 for j in range(ideals.size)]
            if pairing(ideals.graph.matrix, shifted, part) >= 0:
                witness = component
                break
    jumping = multiplicity(ideals, point) > 0
    if jumping != (witness is not None):
        raise InternalConsistencyError(
            f"jumping criterion and multiplicity disagree at {tuple(point)}"
        )
    return jumping, witness


@dataclass(frozen=True)
class HInequalityReport:
    """Exact values of the adjunction form against single components and
    whole connected components of H_c; every value must be >= -1."""

    point: Point
    support: tuple[bool, ...]
    per_component: tuple[tuple[int, int], ...]  # (component index, value)
    per_connected: tuple[tuple[tuple[int, ...], int], ...]


def check_H_inequalities(ideals: IdealTuple, point: Sequence) -> HInequalityReport:
    coords = normalize_point(ideals, point)
    support = maximal_jumping_divisor(ideals, coords)
    if not any(support):
        return HInequalityReport(coords, support, (), ())
    ceiling = ceil_K_minus_cF(ideals, coords)
    indicator = [1 if inside else 0 for inside in support]
    shifted = [c + h for c, h in zip(ceiling, indicator)]
    singles = []
    for i, inside in enumerate(support):
        if not inside:
            continue
        single = [1 if j == i else 0 for j in range(ideals.size)]
        value = pairing(ideals.graph.matrix, shifted, single)
        if value < -1:
            raise InequalityViolated(
                f"component {ideals.graph.label(i)} gives {value} < -1 at {coords}"
            )
        singles.append((i, value))
    connected = []
    for component in support_components(ideals, support):
        part = [1 if j in component else 0 for j in range(ideals.size)]
        value = pairing(ideals.graph.matrix, shifted, part)
        if value < -1:
            raise InequalityViolated(
                f"H-component {component} gives {value} < -1 at {coords}"
            )
        connected.append((tuple(component), value))
    return HInequalityReport(coords, support, tuple(singles), tuple(connected))


def minimal_jumping_divisor(ideals: IdealTuple, point: Sequence) -> tuple[bool, ...]:
    """G: support = {j : (c.F)_j = k_j + 1 + e_j^left}; jumping points only."""
    coords = normalize_point(ideals, point)
    jumping, _ = is_jumping(ideals, coords)
    if not jumping:
        raise NotAJumpingPoint(f"{coords} is not a jumping point")
    weighted = weighted_F(ideals, coords)
    left = mmi_divisor_left(ideals, coords)
    support = tuple(
        w == k + 1 + e
        for w, k, e in zip(weighted, ideals.graph.canonical, left)
    )
    maximal = maximal_jumping_divisor(ideals, coords)
    if any(g and not h for g, h in zip(support, maximal)):
        raise InternalConsistencyError(
            f"minimal jumping divisor exceeds the maximal one at {coords}"
        )
    return support


def multiplicity_via_G(ideals: IdealTuple, point: Sequence) -> int:
    """Adjunction form on the minimal jumping divisor; jumping points only."""
    support = minimal_jumping_divisor(ideals, point)
    ceiling = ceil_K_minus_cF(ideals, point)
    return _adjunction_value(ideals, ceiling, support)


def wall_lines_through(ideals: IdealTuple, point: Sequence) -> list[tuple[int, int]]:
    """(component j, level l) pairs with (c.F)_j - k_j = l, a positive integer."""
    values = gap_values(ideals, point)
    return [
        (j, int(v)) for j, v in enumerate(values) if v.denominator == 1 and v > 0
    ]


@dataclass(frozen=True)
class JumpRecord:
    """Everything the library knows about one evaluated point."""

    point: Point
    divisor: tuple[int, ...]
    divisor_left: tuple[int, ...]
    maximal: tuple[bool, ...]
    minimal: tuple[bool, ...] | None
    mult: int
    wall_lines: tuple[tuple[int, int], ...]


def jump_record(ideals: IdealTuple, point: Sequence) -> JumpRecord:
    coords = normalize_point(ideals, point)
    divisor = mmi_divisor(ideals, coords)
    left = mmi_divisor_left(ideals, coords)
    mult = multiplicity_checked(ideals, coords)
    if (mult > 0) != (divisor != left):
        raise InternalConsistencyError(
            f"multiplicity {mult} inconsistent with divisor jump at {coords}"
        )
    minimal = minimal_jumping_divisor(ideals, coords) if mult > 0 else None
    return JumpRecord(
        point=coords,
        divisor=divisor,
        divisor_left=left,
        maximal=maximal_jumping_divisor(ideals, coords),
        minimal=minimal,
        mult=mult,
        wall_lines=tuple(wall_lines_through(ideals, coords)),
    )


# ---------------------------------------------------------------------------
# Perturbation sum rule.
# ---------------------------------------------------------------------------


def _line_key(normal: Sequence[Fraction], bound: Fraction) -> tuple[Fraction, ...]:
    lead = next(n for n in normal if n != 0)
    scale = abs(lead)
    return tuple(n / scale for n in normal) + (bound / scale,)


@dataclass(frozen=True)
class PerturbationReport:
    """m at the center versus the sum of crossing multiplicities."""

    center: Point
    center_mult: int
    offset: tuple[Fraction, ...]
    crossings: tuple[tuple[Fraction, Point, int], ...]  # (parameter, point, m)
    total: int

    @property
    def matched(self) -> bool:
        return self.center_mult == self.total


def perturbation_sum(
    ideals: IdealTuple,
    point: Sequence,
    ray_dir: Sequence[int],
    offset: Sequence,
) -> PerturbationReport:
    """Decompose m(point) across the wall lines through it.

    The parallel line L'(mu) = (point + offset) + mu * ray_dir is intersected
    with every geometric line carrying a wall V_{j,l} through the point; the
    multiplicities at the crossings must add up to m(point).  The offset is
    admissible iff no line *missing* the point crosses L' within the closed
    parameter interval of the crossings and every crossing stays in the
    nonnegative orthant; otherwise OffsetTooLarge is raised.
    """
    coords = normalize_point(ideals, point)
    direction = tuple(int(u) for u in ray_dir)
    if len(direction) != ideals.r or any(u < 0 for u in direction) or not any(direction):
        raise ValidationError("ray direction must be nonnegative integers, not all 0")
    shift = tuple(Fraction(o) for o in offset)
    if len(shift) != ideals.r or all(s == 0 for s in shift):
        raise ValidationError("offset must be a nonzero rational vector")
    base = tuple(c + s for c, s in zip(coords, shift))
    if any(b < 0 for b in base):
        raise OffsetTooLarge(f"shifted base {base} leaves the orthant")

    columns = [
        tuple(ideals.ideals[i][j] for i in range(ideals.r))
        for j in range(ideals.size)
    ]
    weighted_at = weighted_F(ideals, coords)
    # distinct geometric lines through the point carrying some V_{j,l}, l > 0
    groups: dict[tuple[Fraction, ...], list[tuple[int, int]]] = {}
    for j, level in wall_lines_through(ideals, coords):
        normal = tuple(Fraction(e) for e in columns[j])
        key = _line_key(normal, weighted_at[j])
        groups.setdefault(key, []).append((j, level))

    crossings: list[tuple[Fraction, Point, int]] = []
    parameters: list[Fraction] = []
    for key, members in sorted(groups.items()):
        j = members[0][0]
        normal = columns[j]
        slope = sum(n * u for n, u in zip(normal, direction))
        if slope == 0:
            raise OffsetTooLarge(
                f"ray direction {direction} is parallel to the wall line of "
                f"{ideals.graph.label(j)}"
            )
        numerator = weighted_at[j] - sum(
            (Fraction(n) * b for n, b in zip(normal, base)), Fraction(0)
        )
        parameter = numerator / slope
        crossing = tuple(b + parameter * u for b, u in zip(base, direction))
        if any(x < 0 for x in crossing):
            raise OffsetTooLarge(
                f"crossing {crossing} leaves the orthant; shrink the offset"
            )
        parameters.append(parameter)
        crossings.append((parameter, crossing, 0))

    if crossings:
        # Admissibility: sliding the ray from the point to its offset copy
        # sweeps a parallelogram spanned by the offset and the parameter hull
        # of {0} and the crossings.  No integral-level line that misses the
        # point may meet that region, otherwise a crossing could drift onto a
        # different stretch of its wall and the crossing sum would change.
        low = min(Fraction(0), *parameters)
        high = max(Fraction(0), *parameters)
        through_keys = set(groups)
        for j in range(ideals.size):
            normal = columns[j]
            slope = sum(n * u for n, u in zip(normal, direction))
            value_base = sum(
                (Fraction(n) * b for n, b in zip(normal, base)), Fraction(0)
            )
            k_j = ideals.graph.canonical[j]
            corners = (
                weighted_at[j] + low * slope,
                weighted_at[j] + high * slope,
                value_base + low * slope,
                value_base + high * slope,
            )
            level_low = math.ceil(min(corners) - k_j)
            level_high = math.floor(max(corners) - k_j)
            for level in range(level_low, level_high + 1):
                bound = k_j + level
                if bound == weighted_at[j]:
                    continue  # the line passes through the point itself
                if _line_key(tuple(Fraction(n) for n in normal), bound) in through_keys:
                    continue
                raise OffsetTooLarge(
                    f"wall line of {ideals.graph.label(j)} at level {level} "
                    f"meets the swept region; shrink the offset"
                )
        crossings = [
            (parameter, crossing, multiplicity_checked(ideals, crossing))
            for parameter, crossing, _ in sorted(crossings)
        ]

    center_mult = multiplicity_checked(ideals, coords)
    total = sum(m for _, _, m in crossings)
    report = PerturbationReport(
        center=coords,
        center_mult=center_mult,
        offset=shift,
        crossings=tuple(crossings),
        total=total,
    )
    if not report.matched:
        raise InternalConsistencyError(
            f"perturbation sum {total} != multiplicity {center_mult} at {coords}"
        )
    return report


def default_offset(point: Sequence[Fraction], delta: Fraction) -> tuple[Fraction, ...]:
    """Offset along the first axis on which the point vanishes, else axis 1."""
    coords = tuple(Fraction(x) for x in point)
    axis = next((i for i, x in enumerate(coords) if x == 0), 0)
    return tuple(delta if i == axis else Fraction(0) for i in range(len(coords)))


def admissible_perturbation(
    ideals: IdealTuple,
    point: Sequence,
    ray_dir: Sequence[int],
    initial: Fraction = Fraction(1, 64),
    max_halvings: int = 200,
) -> PerturbationReport:
    """Shrink the axis offset by halving until it is exactly admissible."""
    coords = normalize_point(ideals, point)
    delta = Fraction(initial)
    last_error: OffsetTooLarge | None = None
    for _ in range(max_halvings):
        try:
            return perturbation_sum(
                ideals, coords, ray_dir, default_offset(coords, delta)
            )
        except OffsetTooLarge as error:
            last_error = error
            delta /= 2
    raise OffsetTooLarge(
        f"no admissible offset found after {max_halvings} halvings: {last_error}"
    )

"""Walking rays through the wall arrangement and closed-form Poincare series.

A ray is L(mu) = base + mu * direction with a nonnegative-integer direction,
not all zero.  Because every ideal in a tuple has full support, the pulled
back slope q_j = direction . F_j is a positive integer for every component,
so each gap value v_j is strictly increasing and integer-periodic along the
ray: v_j(mu + 1) = v_j(mu) + q_j.

Consequently the jumping parameters of the ray split into residue classes
modulo 1.  Within a class, once a jumping point is *non-degenerate* — no gap
value is a non-positive integer there — the support H is the same at every
later class member and the multiplicities grow exactly linearly with step
rho = sum over H of the direction-weighted excesses.  Each class therefore
contributes a rational closed form

    m0 * t^a / (1 - t^u)  +  rho * t^(a+u) / (1 - t^u)^2

anchored at its first non-degenerate jumping point a (u = direction), plus
one explicit monomial per degenerate jumping point seen before the anchor.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .dualgraph import IdealTuple
from .errors import (
    DirectionOrthogonal,
    HorizonTooSmall,
    InternalConsistencyError,
    ValidationError,
)
from .evaluate import Point, gap_values, maximal_jumping_divisor, normalize_point
from .multiplicity import JumpRecord, jump_record
from .rationals import format_rational
from .unloading import divisor_leq

__all__ = [
    "Ray",
    "RayJump",
    "make_ray",
    "ray_point",
    "ray_next",
    "ray_walk",
    "rho",
    "is_degenerate",
    "stability_bound",
    "AnchorTerm",
    "SeriesClosedForm",
    "poincare",
    "series_expand",
]


@dataclass(frozen=True)
class Ray:
    base: Point
    direction: tuple[int, ...]
    slopes: tuple[int, ...]  # q_j = direction . F_j, all positive


def make_ray(ideals: IdealTuple, base: Sequence, direction: Sequence[int]) -> Ray:
    origin = normalize_point(ideals, base)
    dir_ = tuple(int(u) for u in direction)
    if len(dir_) != ideals.r:
        raise ValidationError(
            f"direction has {len(dir_)} entries, expected {ideals.r}"
        )
    if any(u < 0 for u in dir_) or not any(dir_):
        raise ValidationError(
            "ray direction must be nonnegative integers, not all zero"
        )
    slopes = tuple(
        sum(dir_[i] * ideals.ideals[i][j] for i in range(ideals.r))
        for j in range(ideals.size)
    )
    if all(q == 0 for q in slopes):
        raise DirectionOrthogonal(
            f"direction {dir_} is orthogonal to every wall normal"
        )
    return Ray(base=origin, direction=dir_, slopes=slopes)


def ray_point(ray: Ray, parameter: Fraction) -> Point:
    return tuple(b + parameter * u for b, u in zip(ray.base, ray.direction))


@dataclass(frozen=True)
class RayJump:
    parameter: Fraction
    record: JumpRecord

    @property
    def point(self) -> Point:
        return self.record.point

    @property
    def mult(self) -> int:
        return self.record.mult


def _candidate_parameters(ideals: IdealTuple, ray: Ray, after: Fraction) -> Iterator[Fraction]:
    """Strictly increasing parameters mu > after where some v_j is a positive
    integer on the ray, each distinct parameter yielded once."""

    def stream(j: int) -> Iterator[Fraction]:
        q = ray.slopes[j]
        if q == 0:
            return
        p = sum(
            (ray.base[i] * ideals.ideals[i][j] for i in range(ideals.r)),
            Fraction(0),
        )
        k = ideals.graph.canonical[j]
        # v_j(mu) = p + mu*q - k = n  <=>  mu = (n + k - p) / q
        first = max(1, math.floor(after * q + p - k) + 1)
        for n in itertools.count(first):
            yield Fraction(n + k - p, q)

    merged = heapq.merge(*(stream(j) for j in range(ideals.size)))
    previous = None
    for mu in merged:
        if mu <= after:
            continue
        if previous is not None and mu == previous:
            continue
        previous = mu
        yield mu


def ray_next(ideals: IdealTuple, ray: Ray, after: Fraction) -> RayJump | None:
    """First jumping point on the ray with parameter strictly beyond `after`."""
    for mu in _candidate_parameters(ideals, ray, Fraction(after)):
        record = jump_record(ideals, ray_point(ray, mu))
        if record.mult > 0:
            return RayJump(parameter=mu, record=record)
    return None  # pragma: no cover - candidate stream is infinite


def ray_walk(ideals: IdealTuple, ray: Ray, until: Fraction) -> list[RayJump]:
    """All jumping points with parameter in (0, until], in order.

    The mixed multiplier ideals strictly decrease along the walk: each
    jump's divisor dominates the previous jump's divisor through the left
    limit.  Violations are internal errors, never data.
    """
    limit = Fraction(until)
    jumps: list[RayJump] = []
    previous: RayJump | None = None
    for mu in _candidate_parameters(ideals, ray, Fraction(0)):
        if mu > limit:
            break
        record = jump_record(ideals, ray_point(ray, mu))
        if record.mult == 0:
            continue
        jump = RayJump(parameter=mu, record=record)
        if previous is not None:
            chained = divisor_leq(previous.record.divisor, record.divisor_left)
            if not chained or previous.record.divisor == record.divisor:
                raise InternalConsistencyError(
                    f"divisor chain broken between parameters "
                    f"{previous.parameter} and {mu}"
                )
        jumps.append(jump)
        previous = jump
    return jumps


def rho(ideals: IdealTuple, point: Sequence, direction: Sequence[int]) -> int:
    """Direction-weighted excess over the support H at the point."""
    support = maximal_jumping_divisor(ideals, point)
    return sum(
        int(direction[i]) * ideals.excesses[i][j]
        for j, inside in enumerate(support)
        if inside
        for i in range(ideals.r)
    )


def is_degenerate(ideals: IdealTuple, point: Sequence) -> bool:
    """True when some gap value is an integer <= 0 — the support can still
    grow further along any ray through the point, so recurrences do not
    apply yet."""
    return any(
        v.denominator == 1 and v <= 0 for v in gap_values(ideals, point)
    )


def stability_bound(ideals: IdealTuple, ray: Ray) -> Fraction:
    """Smallest T >= 0 such that every point of the ray past T is
    non-degenerate: beyond T every integral gap value is positive."""
    bound = Fraction(0)
    for j in range(ideals.size):
        p = sum(
            (ray.base[i] * ideals.ideals[i][j] for i in range(ideals.r)),
            Fraction(0),
        )
        k = ideals.graph.canonical[j]
        threshold = Fraction(k - p, ray.slopes[j])
        bound = max(bound, threshold)
    return bound


# ---------------------------------------------------------------------------
# Closed-form Poincare series along a ray.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AnchorTerm:
    """One residue class: m0 * t^point / (1 - t^u) +
    step * t^(point + u) / (1 - t^u)^2 with u = the ray direction."""

    parameter: Fraction
    point: Point
    initial: int
    step: int


@dataclass(frozen=True)
class SeriesClosedForm:
    base: Point
    direction: tuple[int, ...]
    horizon: Fraction
    anchors: tuple[AnchorTerm, ...]
    monomials: tuple[tuple[Fraction, Point, int], ...]  # (parameter, point, m)
    exponent_denominator: int

    def render(self) -> str:
        """Canonical text form; exponents are written over the common
        denominator via z_i = t_i^(1/e) when e > 1."""
        e = self.exponent_denominator
        width = len(self.base)

        def power(point: Sequence[Fraction]) -> str:
            letter = "z" if e > 1 else "t"
            scaled = [Fraction(x) * e for x in point]
            if any(s.denominator != 1 for s in scaled):
                raise InternalConsistencyError(
                    f"exponent {tuple(point)} not integral over denominator {e}"
                )
            if width == 1:
                exponent = scaled[0].numerator
                return letter if exponent == 1 else f"{letter}^{exponent}"
            body = ",".join(str(s.numerator) for s in scaled)
            return f"{letter}^({body})"

        def coefficient(value: int, tail: str) -> str:
            return tail if value == 1 else f"{value}*{tail}"

        parts: list[str] = []
        for _, point, mult in self.monomials:
            parts.append(coefficient(mult, power(point)))
        unit = power(self.direction)
        for term in self.anchors:
            denominator = f"(1 - {unit})"
            # m0*t^a/(1-t^u) + s*t^(a+u)/(1-t^u)^2
            #   = (m0*t^a + (s-m0)*t^(a+u)) / (1-t^u)^2
            shifted = tuple(
                Fraction(a) + u for a, u in zip(term.point, self.direction)
            )
            if term.step == term.initial:
                parts.append(
                    f"{coefficient(term.initial, power(term.point))}"
                    f"/{denominator}^2"
                )
            elif term.step == 0:
                parts.append(
                    f"{coefficient(term.initial, power(term.point))}/{denominator}"
                )
            else:
                head = coefficient(term.initial, power(term.point))
                extra = term.step - term.initial
                sign = "+" if extra > 0 else "-"
                tail = coefficient(abs(extra), power(shifted))
                parts.append(f"({head} {sign} {tail})/{denominator}^2")
        return " + ".join(parts) if parts else "0"


def _residue(parameter: Fraction) -> Fraction:
    return parameter - math.floor(parameter)


def poincare(
    ideals: IdealTuple, ray: Ray, horizon: Fraction
) -> SeriesClosedForm:
    """Closed form of the multiplicity generating series along the ray.

    The walk runs over (0, horizon + 1]; the extra unit interval both
    verifies the recurrences and proves completeness.  The horizon must
    reach one unit past the stability bound of the ray, and every residue
    class must anchor at or before it; otherwise HorizonTooSmall names the
    smallest horizon that can work.
    """
    limit = Fraction(horizon)
    bound = stability_bound(ideals, ray)
    if limit < bound + 1:
        raise HorizonTooSmall(
            f"horizon {format_rational(limit)} is below the stability bound "
            f"plus one ({format_rational(bound + 1)}); every class is "
            f"anchored by {format_rational(bound + 2)}"
        )

    anchors: dict[Fraction, AnchorTerm] = {}
    supports: dict[Fraction, tuple[bool, ...]] = {}
    monomials: list[tuple[Fraction, Point, int]] = []
    for jump in ray_walk(ideals, ray, limit + 1):
        residue = _residue(jump.parameter)
        anchor = anchors.get(residue)
        if anchor is None:
            if is_degenerate(ideals, jump.point):
                if jump.parameter > bound:
                    raise InternalConsistencyError(
                        f"degenerate point past the stability bound at "
                        f"parameter {jump.parameter}"
                    )
                monomials.append((jump.parameter, jump.point, jump.mult))
                continue
            if jump.parameter > limit:
                raise HorizonTooSmall(
                    f"a residue class anchors only at parameter "
                    f"{format_rational(jump.parameter)} past the horizon; "
                    f"rerun with horizon >= {format_rational(bound + 2)}"
                )
            anchors[residue] = AnchorTerm(
                parameter=jump.parameter,
                point=jump.point,
                initial=jump.mult,
                step=rho(ideals, jump.point, ray.direction),
            )
            supports[residue] = jump.record.maximal
            continue
        offset = jump.parameter - anchor.parameter
        if offset.denominator != 1:
            raise InternalConsistencyError(
                f"class member at {jump.parameter} not an integer step from "
                f"its anchor {anchor.parameter}"
            )
        predicted = anchor.initial + int(offset) * anchor.step
        if jump.mult != predicted:
            raise InternalConsistencyError(
                f"recurrence predicts multiplicity {predicted} at parameter "
                f"{jump.parameter}, found {jump.mult}"
            )
        if jump.record.maximal != supports[residue]:
            raise InternalConsistencyError(
                f"support changed along the class anchored at "
                f"{anchor.parameter}"
            )

    denominators = [1]
    for term in anchors.values():
        denominators.extend(x.denominator for x in term.point)
    for _, point, _ in monomials:
        denominators.extend(x.denominator for x in point)
    exponent_denominator = math.lcm(*denominators)

    return SeriesClosedForm(
        base=ray.base,
        direction=ray.direction,
        horizon=limit,
        anchors=tuple(sorted(anchors.values(), key=lambda t: t.parameter)),
        monomials=tuple(sorted(monomials)),
        exponent_denominator=exponent_denominator,
    )


def series_expand(
    form: SeriesClosedForm, until: Fraction
) -> list[tuple[Fraction, Point, int]]:
    """Expand the closed form back into (parameter, point, multiplicity)
    triples with parameter in (0, until], sorted by parameter."""
    limit = Fraction(until)
    out: list[tuple[Fraction, Point, int]] = []
    for parameter, point, mult in form.monomials:
        if 0 < parameter <= limit:
            out.append((parameter, point, mult))
    for term in form.anchors:
        steps = math.floor(limit - term.parameter)
        for k in range(steps + 1):
            mult = term.initial + k * term.step
            if mult <= 0:
                raise InternalConsistencyError(
                    f"closed form predicts nonpositive multiplicity {mult} "
                    f"at anchor offset {k}"
                )
            point = tuple(
                a + k * u for a, u in zip(term.point, form.direction)
            )
            out.append((term.parameter + k, point, mult))
    out.sort(key=lambda entry: entry[0])
    for left, right in zip(out, out[1:]):
        if left[0] == right[0]:
            raise InternalConsistencyError(
                f"closed form lists parameter {left[0]} twice"
            )
    return out

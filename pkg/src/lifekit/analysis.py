"""Dynamics classification and oscillator structure analysis.

detect_dynamics simulates a finite pattern on the plane and reports whether
it is an oscillator (returns exactly to its initial state), a spaceship
(returns translated), or unresolved within the generation budget.
Recurrence is detected on a translation-normalized canonical form of each
generation; rotated recurrences deliberately do not count.  Because the
classification fires on the first recurrence of the *initial* state, the
reported period is minimal.

Patterns with a nonzero preperiod (a later generation recurs but the
initial one never does) are reported unresolved, with the preperiod and
cycle length attached as annotations rather than silently trimmed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Cell, LifeError, Pattern, evolve, step_n

OSCILLATOR = "oscillator"
SPACESHIP = "spaceship"
UNRESOLVED = "unresolved"

DEFAULT_MAX_GENS = 4096


class AnalysisError(LifeError):
    """Bad arguments to an analysis operation."""


@dataclass(frozen=True)
class DynamicsReport:
    kind: str
    generations_examined: int
    period: int | None = None
    displacement: tuple[int, int] | None = None
    min_population: int | None = None
    max_population: int | None = None
    cycle_bounding_box: tuple[int, int, int, int] | None = None
    preperiod: int | None = None
    cycle_length: int | None = None


def _canonical(p: Pattern) -> frozenset[Cell]:
    return p.normalized().cells


def detect_dynamics(p: Pattern, max_gens: int = DEFAULT_MAX_GENS) -> DynamicsReport:
    """Classify a pattern's long-run behaviour on the plane."""
    if max_gens <= 0:
        raise AnalysisError("max_gens must be positive")

    key0 = _canonical(p)
    origin0 = p.bounding_box()
    seen: dict[frozenset[Cell], int] = {key0: 0}
    gens = evolve(p)
    for t in range(1, max_gens + 1):
        cur = next(gens)
        key = _canonical(cur)
        if key == key0:
            origin = cur.bounding_box()
            if origin0 is None or origin is None:
                displacement = (0, 0)
            else:
                displacement = (origin[0] - origin0[0], origin[1] - origin0[1])
            kind = OSCILLATOR if displacement == (0, 0) else SPACESHIP
            stats = _cycle_stats(p, t)
            return DynamicsReport(
                kind=kind,
                generations_examined=t,
                period=t,
                displacement=displacement,
                min_population=stats[0],
                max_population=stats[1],
                cycle_bounding_box=stats[2],
            )
        if key in seen:
            return DynamicsReport(
                kind=UNRESOLVED,
                generations_examined=t,
                preperiod=seen[key],
                cycle_length=t - seen[key],
            )
        seen[key] = t
    return DynamicsReport(kind=UNRESOLVED, generations_examined=max_gens)


def _cycle_stats(p: Pattern, period: int):
    min_pop = max_pop = p.population
    box = p.bounding_box()
    union = list(box) if box else None
    gens = evolve(p)
    for _ in range(period - 1):
        cur = next(gens)
        min_pop = min(min_pop, cur.population)
        max_pop = max(max_pop, cur.population)
        b = cur.bounding_box()
        if b is not None:
            if union is None:
                union = list(b)
            else:
                union[0] = min(union[0], b[0])
                union[1] = min(union[1], b[1])
                union[2] = max(union[2], b[2])
                union[3] = max(union[3], b[3])
    return min_pop, max_pop, tuple(union) if union else None


def cycle_phases(p: Pattern, period: int) -> list[Pattern]:
    """The `period` successive states starting at p; errors if p is not
    periodic with the given period (not necessarily minimal)."""
    if period <= 0:
        raise AnalysisError("period must be positive")
    phases = [p]
    gens = evolve(p)
    for _ in range(period - 1):
        phases.append(next(gens))
    if next(gens) != p:
        raise AnalysisError("pattern does not return to itself after the stated period")
    return phases


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def cell_period_map(p: Pattern, period: int) -> dict[Cell, int]:
    """Minimal per-cell period, for every cell alive in at least one phase.

    Every value divides the pattern period.  A value of 1 marks a stator
    cell (alive in all phases).
    """
    phases = cycle_phases(p, period)
    domain: set[Cell] = set()
    for phase in phases:
        domain |= phase.cells
    divisors = _divisors(period)
    result: dict[Cell, int] = {}
    for cell in domain:
        seq = [cell in phase.cells for phase in phases]
        for d in divisors:
            if all(seq[i] == seq[(i + d) % period] for i in range(period)):
                result[cell] = d
                break
    return result


@dataclass(frozen=True)
class VolatilityStats:
    rotor_cell_count: int
    stator_cell_count: int
    volatility: Fraction
    strictly_volatile: bool
    trivial: bool


def volatility_stats(p: Pattern, period: int) -> VolatilityStats:
    """Rotor/stator decomposition and the derived volatility flags.

    strictly_volatile means every involved cell oscillates at the full
    pattern period; a period-1 pattern is all stator, never strictly
    volatile.  trivial means no cell oscillates at the full period (the
    signature of a non-interacting lcm composite).
    """
    cpm = cell_period_map(p, period)
    stator = sum(1 for v in cpm.values() if v == 1)
    rotor = len(cpm) - stator
    volatility = Fraction(rotor, rotor + stator) if cpm else Fraction(0)
    strictly = bool(cpm) and stator == 0 and all(v == period for v in cpm.values())
    trivial = bool(cpm) and not any(v == period for v in cpm.values())
    return VolatilityStats(
        rotor_cell_count=rotor,
        stator_cell_count=stator,
        volatility=volatility,
        strictly_volatile=strictly,
        trivial=trivial,
    )

"""Long-run behavior: exact simulation, classification, limit prediction
and verification of the predictions against the simulated trajectory."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, build_cube, is_connected, two_coloring
from .mixing import Amounts, apply, as_amounts, mixing_matrix
from .spectral import (
    InvariantViolation,
    largest_magnitude_below_one,
    slem,
    spectrum_numeric,
)


class Classification(enum.Enum):
    """How the dynamics behave in the long run."""

    CONVERGES_TO_STATIONARY = "ConvergesToStationary"
    PERIOD_TWO_OSCILLATION = "PeriodTwoOscillation"
    REDUCIBLE = "Reducible"


@dataclass(frozen=True)
class Trajectory:
    """States at rounds 0..T plus the max-min spread at each round."""

    states: tuple[Amounts, ...]
    range_series: tuple[Fraction, ...]


def simulate(g: Graph, init, steps: int) -> Trajectory:
    """Run the averaging dynamics for ``steps`` rounds, exactly."""
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    state = as_amounts(init, g.node_count)
    w = mixing_matrix(g)
    states = [state]
    for _ in range(steps):
        state = apply(w, state)
        states.append(state)
    ranges = tuple(max(s) - min(s) for s in states)
    return Trajectory(tuple(states), ranges)


def classify(g: Graph) -> Classification:
    """Decide the long-run regime from the graph alone.

    Disconnected graphs are reducible.  A connected graph with an odd
    cycle mixes to a single stationary state; a connected bipartite graph
    swaps all mass across the two sides each round, so the amounts
    oscillate with period 2 instead of settling.
    """
    if not is_connected(g):
        return Classification.REDUCIBLE
    if two_coloring(g) is None:
        return Classification.CONVERGES_TO_STATIONARY
    return Classification.PERIOD_TWO_OSCILLATION


@dataclass(frozen=True)
class AsymptoticReport:
    """Predicted limit(s) and the geometric rate of approach.

    ``limit_even`` is the limit along even rounds and ``limit_odd`` along
    odd rounds; they coincide when the dynamics converge outright.  Both
    carry the initial total exactly.
    """

    classification: Classification
    limit_even: Amounts
    limit_odd: Amounts
    convergence_rate: float


def predict_limit(g: Graph, init) -> AsymptoticReport:
    """Exact limit state(s) for a connected graph.

    Convergent case: the limit gives node v the share degree(v) / (2 * #edges)
    of the total, which is the uniform split on regular graphs.  Bipartite
    case: mass returns to its own side every second round, spreading within
    the side proportionally to degree, so along even rounds node v holds
    side_total(side(v)) * degree(v) / #edges and along odd rounds the two
    side totals swap.
    """
    classification = classify(g)
    if classification is Classification.REDUCIBLE:
        raise ValueError("graph is disconnected; limits are component-dependent")
    amounts = as_amounts(init, g.node_count)
    total = sum(amounts)
    degrees = [g.degree(v) for v in range(g.node_count)]
    edge_count = len(g.edges)
    spectrum = spectrum_numeric(mixing_matrix(g))

    if classification is Classification.CONVERGES_TO_STATIONARY:
        limit = tuple(total * d / (2 * edge_count) for d in degrees)
        return AsymptoticReport(classification, limit, limit, slem(spectrum))

    coloring = two_coloring(g)
    assert coloring is not None
    side_total = [Fraction(0), Fraction(0)]
    for v, x in enumerate(amounts):
        side_total[coloring[v]] += x
    limit_even = tuple(
        side_total[coloring[v]] * degrees[v] / edge_count for v in range(g.node_count)
    )
    limit_odd = tuple(
        side_total[1 - coloring[v]] * degrees[v] / edge_count for v in range(g.node_count)
    )
    rate = largest_magnitude_below_one(spectrum)
    return AsymptoticReport(classification, limit_even, limit_odd, rate)


def max_norm_gap(a: Amounts, b: Amounts) -> Fraction:
    return max(abs(x - y) for x, y in zip(a, b))


@dataclass(frozen=True)
class ConvergenceReport:
    """Measured agreement between a simulated run and the predicted limits."""

    classification: Classification
    steps: int
    tolerance: float
    deviation: Fraction
    passed: bool
    contraction_ratios: tuple[Fraction | None, ...]
    prediction: AsymptoticReport


def verify_convergence(g: Graph, init, steps: int, tolerance: float) -> ConvergenceReport:
    """Simulate ``steps`` rounds and compare against the predicted limits.

    The final state is compared in max-norm against the limit of matching
    parity; in the oscillating case the state one round earlier is also
    compared against the other limit, and the reported deviation is the
    worse of the two.  Also records the spread ratio range(t+1)/range(t)
    per round (None where the spread is already zero).
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    prediction = predict_limit(g, init)
    trajectory = simulate(g, init, steps)

    def target(t: int) -> Amounts:
        return prediction.limit_even if t % 2 == 0 else prediction.limit_odd

    deviation = max_norm_gap(trajectory.states[steps], target(steps))
    if prediction.classification is Classification.PERIOD_TWO_OSCILLATION:
        deviation = max(deviation, max_norm_gap(trajectory.states[steps - 1], target(steps - 1)))
    ratios = tuple(
        trajectory.range_series[t + 1] / trajectory.range_series[t]
        if trajectory.range_series[t] != 0
        else None
        for t in range(steps)
    )
    passed = deviation <= Fraction(tolerance)
    return ConvergenceReport(
        prediction.classification, steps, tolerance, deviation, passed, ratios, prediction
    )


@dataclass(frozen=True)
class CubeContractionLog:
    """Evidence from the cube's elementary contraction argument."""

    range_series: tuple[Fraction, ...]
    opposite_equal_rounds: int
    exact_halvings: int


def cube_elementary_check(init, steps: int) -> CubeContractionLog:
    """Exact checks behind the halving argument on the cube.

    After one round antipodal faces hold equal amounts (they receive the
    same four shares), and from round 1 on the max-min spread halves
    exactly each round.  Raises InvariantViolation if either fails.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    cube = build_cube()
    opposite = cube.opposite
    assert opposite is not None
    trajectory = simulate(cube, init, steps)
    for t in range(1, steps + 1):
        state = trajectory.states[t]
        for v in range(6):
            if state[v] != state[opposite[v]]:
                raise InvariantViolation(
                    f"round {t}: antipodal faces {v} and {opposite[v]} differ"
                )
    for t in range(1, steps):
        if 2 * trajectory.range_series[t + 1] != trajectory.range_series[t]:
            raise InvariantViolation(f"round {t} -> {t + 1}: spread did not halve exactly")
    return CubeContractionLog(trajectory.range_series, steps, steps - 1)

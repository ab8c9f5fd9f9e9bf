"""Spectra of averaging operators and the cube's invariant decomposition.

Closed forms are exact: the cube face graph has eigenvalues {1, 0, -1/2}
with multiplicities 1, 3, 2, and the n-cycle has cos(2*pi*k/n).  The
numeric path runs a self-contained Jacobi rotation solver, so arbitrary
graphs need no external linear-algebra dependency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, build_cube
from .mixing import Amounts, Matrix, apply, as_amounts, mixing_matrix

# Numeric eigenvalues within SNAP_TOL of these rationals are reported as
# exact; they are the values the closed forms can produce exactly.
_SNAP_TARGETS = (Fraction(1), Fraction(1, 2), Fraction(0), Fraction(-1, 2), Fraction(-1))
_SNAP_TOL = 1e-9
_CLUSTER_TOL = 1e-8
_OFF_NORM_TOL = 1e-12


class InvariantViolation(RuntimeError):
    """An identity that must hold exactly failed; signals an implementation bug."""


@dataclass(frozen=True)
class SpectrumEntry:
    value: float
    multiplicity: int
    exact: bool


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues with multiplicities, sorted descending by value."""

    entries: tuple[SpectrumEntry, ...]

    @property
    def size(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def values(self) -> list[float]:
        """Eigenvalues expanded with multiplicity, descending."""
        out: list[float] = []
        for e in self.entries:
            out.extend([e.value] * e.multiplicity)
        return out

    def render(self) -> str:
        """One `value multiplicity exact?` triple per line, descending."""
        return "\n".join(
            f"{e.value:.12g} {e.multiplicity} {'exact' if e.exact else 'approx'}"
            for e in self.entries
        )


def cube_spectrum_closed_form() -> Spectrum:
    """Exact spectrum of the cube face graph's averaging operator.

    The six-dimensional state space splits into three invariant parts:
    constant vectors (fixed by the round), zero-sum vectors with equal
    antipodal entries (scaled by -1/2 each round) and vectors with
    negated antipodal entries (sent to zero).  Dimensions 1 + 2 + 3.
    """
    return Spectrum((
        SpectrumEntry(1.0, 1, True),
        SpectrumEntry(0.0, 3, True),
        SpectrumEntry(-0.5, 2, True),
    ))


def _exact_cosine(k: int, n: int) -> Fraction | None:
    # cos(2*pi*k/n) for 0 <= k <= n/2 is rational only at these points.
    if k == 0:
        return Fraction(1)
    if 2 * k == n:
        return Fraction(-1)
    if 4 * k == n:
        return Fraction(0)
    if 6 * k == n:
        return Fraction(1, 2)
    if 3 * k == n:
        return Fraction(-1, 2)
    return None


def cycle_spectrum_closed_form(n: int) -> Spectrum:
    """Spectrum of the n-cycle's averaging operator: {cos(2*pi*k/n)}.

    k and n-k give the same value, so interior k appear with multiplicity
    two; 1 (k = 0) is always simple and -1 (k = n/2) appears exactly when
    n is even.
    """
    if n < 3:
        raise ValueError(f"cycle needs at least 3 nodes, got {n}")
    entries = []
    for k in range(n // 2 + 1):
        multiplicity = 1 if k == 0 or 2 * k == n else 2
        exact = _exact_cosine(k, n)
        if exact is not None:
            entries.append(SpectrumEntry(float(exact), multiplicity, True))
        else:
            entries.append(SpectrumEntry(math.cos(2.0 * math.pi * k / n), multiplicity, False))
    # k ascending makes the cosine strictly decreasing, so already sorted.
    return Spectrum(tuple(entries))


def jacobi_eigenvalues(matrix: list[list[float]], off_tol: float = _OFF_NORM_TOL) -> list[float]:
    """All eigenvalues of a real symmetric matrix, descending.

    Cyclic Jacobi: sweep the upper triangle, rotating each (p, q) pair to
    zero, until the off-diagonal Frobenius norm drops below ``off_tol``.
    Rotations on entries already below a per-entry threshold are skipped.
    Adequate and fast for the n <= 64 matrices used here.
    """
    n = len(matrix)
    a = [list(map(float, row)) for row in matrix]
    if n == 1:
        return [a[0][0]]
    skip = off_tol / (8.0 * n)
    for _ in range(60):
        off = math.sqrt(2.0 * sum(a[i][j] * a[i][j] for i in range(n) for j in range(i + 1, n)))
        if off < off_tol:
            return sorted((a[i][i] for i in range(n)), reverse=True)
        for p in range(n - 1):
            ap = a[p]
            for q in range(p + 1, n):
                apq = ap[q]
                if abs(apq) < skip:
                    continue
                theta = (a[q][q] - ap[p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                aq = a[q]
                for k in range(n):
                    akp = a[k][p]
                    akq = a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    akp = ap[k]
                    akq = aq[k]
                    ap[k] = c * akp - s * akq
                    aq[k] = s * akp + c * akq
    raise RuntimeError("Jacobi iteration did not converge in 60 sweeps")


def _cluster(values: list[float]) -> Spectrum:
    """Group near-equal eigenvalues and snap notable rationals to exact."""
    values = sorted(values, reverse=True)
    entries = []
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[i] - values[j + 1] <= _CLUSTER_TOL:
            j += 1
        cluster = values[i:j + 1]
        mean = sum(cluster) / len(cluster)
        snapped = next((t for t in _SNAP_TARGETS if abs(mean - t) <= _SNAP_TOL), None)
        if snapped is not None:
            entries.append(SpectrumEntry(float(snapped), len(cluster), True))
        else:
            entries.append(SpectrumEntry(mean, len(cluster), False))
        i = j + 1
    return Spectrum(tuple(entries))


def spectrum_numeric(matrix: Matrix) -> Spectrum:
    """Numeric spectrum of an averaging operator, any connected graph.

    A non-regular graph gives an asymmetric matrix, but conjugating by
    the diagonal square-root-of-degree matrix symmetrizes it without
    moving eigenvalues; entrywise that transform is just
    sqrt(M[u][v] * M[v][u]), so one symmetric solver covers every case.
    """
    n = len(matrix)
    sym = [[math.sqrt(matrix[u][v] * matrix[v][u]) for v in range(n)] for u in range(n)]
    return _cluster(jacobi_eigenvalues(sym))


def slem(spectrum: Spectrum) -> float:
    """Second-largest eigenvalue magnitude.

    Largest absolute value after removing one copy of eigenvalue 1; this
    is the geometric rate at which the convergent part of the dynamics
    approaches its limit.
    """
    values = spectrum.values()
    if not values:
        raise ValueError("empty spectrum")
    for i, v in enumerate(values):
        if abs(v - 1.0) <= _SNAP_TOL:
            del values[i]
            break
    return max((abs(v) for v in values), default=0.0)


def largest_magnitude_below_one(spectrum: Spectrum) -> float:
    """Largest |eigenvalue| strictly below 1; rate of the oscillating case."""
    return max((abs(v) for v in spectrum.values() if abs(v) < 1.0 - _SNAP_TOL), default=0.0)


@dataclass(frozen=True)
class CubeDecomposition:
    """A 6-face state split into the three invariant components.

    uniform: constant vector carrying the mean.
    opposite_symmetric: antipodal faces equal, total zero; one round
        multiplies it by -1/2.
    opposite_antisymmetric: antipodal faces negated; one round kills it.
    The three parts sum back to the original state exactly.
    """

    uniform: Amounts
    opposite_symmetric: Amounts
    opposite_antisymmetric: Amounts

    @property
    def parts(self) -> tuple[Amounts, Amounts, Amounts]:
        return (self.uniform, self.opposite_symmetric, self.opposite_antisymmetric)


def decompose_cube_state(amounts) -> CubeDecomposition:
    """Project a 6-face state onto the cube's three invariant subspaces, exactly."""
    state = as_amounts(amounts, 6)
    opposite = build_cube().opposite
    assert opposite is not None
    mean = sum(state) / 6
    uniform = tuple(mean for _ in range(6))
    symmetric = tuple((state[v] + state[opposite[v]]) / 2 - mean for v in range(6))
    antisymmetric = tuple((state[v] - state[opposite[v]]) / 2 for v in range(6))
    return CubeDecomposition(uniform, symmetric, antisymmetric)


def verify_scalar_action(amounts) -> tuple[Fraction, Fraction, Fraction]:
    """Confirm the cube round acts as a scalar on each invariant component.

    Checks, as exact rational identities, that one round fixes the
    uniform part, multiplies the opposite-symmetric part by -1/2 and
    sends the opposite-antisymmetric part to zero.  Returns the scalars
    (1, -1/2, 0); raises InvariantViolation if any identity fails.
    """
    decomposition = decompose_cube_state(amounts)
    w = mixing_matrix(build_cube())
    scalars = (Fraction(1), Fraction(-1, 2), Fraction(0))
    names = ("uniform", "opposite-symmetric", "opposite-antisymmetric")
    for part, scalar, name in zip(decomposition.parts, scalars, names):
        if apply(w, part) != tuple(scalar * x for x in part):
            raise InvariantViolation(f"{name} component is not scaled by {scalar}")
    return scalars

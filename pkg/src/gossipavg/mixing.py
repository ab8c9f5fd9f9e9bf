"""The synchronous averaging round as an exact column-stochastic matrix.

Each round, every node's amount is split equally among that node's
neighbors (nothing is kept).  All arithmetic is exact rational so that
statements like "the total never changes" hold as identities, not up to
rounding.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import Graph, adjacency_lists

Matrix = tuple[tuple[Fraction, ...], ...]
Amounts = tuple[Fraction, ...]


class DegenerateGraphError(ValueError):
    """A node has no neighbors, so the averaging round is undefined there."""


def as_amounts(values, node_count: int) -> Amounts:
    """Coerce to a tuple of Fractions of the right length."""
    amounts = tuple(Fraction(x) for x in values)
    if len(amounts) != node_count:
        raise ValueError(f"expected {node_count} amounts, got {len(amounts)}")
    return amounts


def mixing_matrix(g: Graph) -> Matrix:
    """Update matrix of one averaging round.

    Entry (u, v) is the share of node v's amount that node u receives:
    1/degree(v) when u and v are adjacent, else 0.  Columns sum to 1
    exactly and the diagonal is zero; for regular graphs the matrix is
    symmetric, hence doubly stochastic.
    """
    adj = adjacency_lists(g)
    for v, nbrs in enumerate(adj):
        if not nbrs:
            raise DegenerateGraphError(f"node {v} has no neighbors")
    share = [Fraction(1, len(nbrs)) for nbrs in adj]
    neighbor_sets = [set(nbrs) for nbrs in adj]
    zero = Fraction(0)
    return tuple(
        tuple(share[v] if v in neighbor_sets[u] else zero for v in range(g.node_count))
        for u in range(g.node_count)
    )


def apply(matrix: Matrix, amounts: Amounts) -> Amounts:
    """One exact matrix-vector product (one averaging round)."""
    n = len(matrix)
    if len(amounts) != n:
        raise ValueError(f"dimension mismatch: matrix is {n}x{n}, state has {len(amounts)}")
    return tuple(sum(row[v] * amounts[v] for v in range(n)) for row in matrix)


def identity_matrix(n: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError("dimension mismatch in matrix product")
    bt = tuple(zip(*b))
    k = len(b)
    return tuple(tuple(sum(row[i] * col[i] for i in range(k)) for col in bt) for row in a)


def matrix_power(matrix: Matrix, t: int) -> Matrix:
    """Exact t-th power by repeated multiplication; t = 0 is the identity.

    Deliberately naive: this is the ground truth that the step-by-step
    simulation and the predicted limits are checked against.
    """
    if t < 0:
        raise ValueError(f"power must be >= 0, got {t}")
    out = identity_matrix(len(matrix))
    for _ in range(t):
        out = matmul(out, matrix)
    return out


def column_sums(matrix: Matrix) -> Amounts:
    return tuple(sum(col) for col in zip(*matrix))

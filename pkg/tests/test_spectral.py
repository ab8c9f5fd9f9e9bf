"""Spectra: closed forms, the numeric solver and the cube decomposition."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gossipavg.graphs import build_cube, build_cycle, from_edge_list
from gossipavg.mixing import apply, as_amounts, mixing_matrix
from gossipavg.spectral import (
    InvariantViolation,
    cube_spectrum_closed_form,
    cycle_spectrum_closed_form,
    decompose_cube_state,
    jacobi_eigenvalues,
    largest_magnitude_below_one,
    slem,
    spectrum_numeric,
    verify_scalar_action,
)

F = Fraction

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=32)
states6 = st.lists(rationals, min_size=6, max_size=6).map(tuple)


def exact_det(m):
    """Cofactor-expansion determinant over exact rationals (small n only)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = F(0)
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * exact_det(minor)
    return total


def char_value(matrix, x):
    n = len(matrix)
    shifted = [
        [matrix[i][j] - (x if i == j else 0) for j in range(n)] for i in range(n)
    ]
    return exact_det(shifted)


def test_cube_characteristic_polynomial_oracle():
    # det(W - xI) must equal (1-x) * (-1/2-x)^2 * (-x)^3; checking the
    # identity at 7 points pins down the degree-6 polynomial completely,
    # so this verifies the closed-form spectrum with multiplicities.
    w = [list(row) for row in mixing_matrix(build_cube())]
    for x in (F(2), F(3), F(1, 2), F(1, 3), F(-1), F(-2), F(5, 7)):
        assert char_value(w, x) == (1 - x) * (F(-1, 2) - x) ** 2 * (-x) ** 3


def test_cube_closed_form():
    spec = cube_spectrum_closed_form()
    assert [(e.value, e.multiplicity, e.exact) for e in spec.entries] == [
        (1.0, 1, True),
        (0.0, 3, True),
        (-0.5, 2, True),
    ]
    assert spec.size == 6
    values = spec.values()
    assert values[0] == 1.0
    assert sorted((abs(v) for v in values), reverse=True)[1] == 0.5


def test_cycle3_closed_form():
    spec = cycle_spectrum_closed_form(3)
    assert [(e.value, e.multiplicity, e.exact) for e in spec.entries] == [
        (1.0, 1, True),
        (-0.5, 2, True),
    ]


def test_cycle4_closed_form():
    spec = cycle_spectrum_closed_form(4)
    assert [(e.value, e.multiplicity, e.exact) for e in spec.entries] == [
        (1.0, 1, True),
        (0.0, 2, True),
        (-1.0, 1, True),
    ]


def test_cycle6_contains_minus_one_once():
    spec = cycle_spectrum_closed_form(6)
    assert (-1.0, 1, True) == (
        spec.entries[-1].value,
        spec.entries[-1].multiplicity,
        spec.entries[-1].exact,
    )


def test_cycle12_exact_flags():
    spec = cycle_spectrum_closed_form(12)
    flagged = {e.value: e.exact for e in spec.entries}
    for v in (1.0, 0.5, 0.0, -0.5, -1.0):
        assert flagged[v] is True
    assert flagged[math.cos(2 * math.pi / 12)] is False


@pytest.mark.parametrize("n", range(3, 65))
def test_cycle_closed_form_multiplicities_sum(n):
    spec = cycle_spectrum_closed_form(n)
    assert spec.size == n
    values = spec.values()
    assert values == sorted(values, reverse=True)
    assert all(-1.0 - 1e-12 <= v <= 1.0 + 1e-12 for v in values)


def test_closed_form_rejects_small_cycles():
    with pytest.raises(ValueError):
        cycle_spectrum_closed_form(2)


def test_jacobi_on_a_known_matrix():
    # eigenvalues of [[2,1],[1,2]] are 1 and 3
    assert jacobi_eigenvalues([[2.0, 1.0], [1.0, 2.0]]) == pytest.approx([3.0, 1.0])


def test_numeric_cube_matches_closed_form():
    numeric = spectrum_numeric(mixing_matrix(build_cube()))
    closed = cube_spectrum_closed_form()
    assert numeric.entries == closed.entries  # snapping makes them exact


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 12, 17, 31])
def test_numeric_cycles_match_closed_form(n):
    numeric = spectrum_numeric(mixing_matrix(build_cycle(n)))
    closed = cycle_spectrum_closed_form(n)
    assert numeric.size == closed.size == n
    for a, b in zip(numeric.values(), closed.values()):
        assert abs(a - b) < 1e-10


def test_path_spectrum_is_plus_one_zero_minus_one():
    w = mixing_matrix(from_edge_list("0 1\n1 2\n"))
    # oracle: each claimed eigenvalue is an exact root of det(W - xI),
    # and there are only three of them
    rows = [list(row) for row in w]
    for x in (F(1), F(0), F(-1)):
        assert char_value(rows, x) == 0
    spec = spectrum_numeric(w)
    assert [(e.value, e.multiplicity, e.exact) for e in spec.entries] == [
        (1.0, 1, True),
        (0.0, 1, True),
        (-1.0, 1, True),
    ]


def test_star_spectrum_via_degree_symmetrization():
    # star on 4 nodes is bipartite and non-regular: eigenvalues 1, 0, 0, -1
    w = mixing_matrix(from_edge_list("0 1\n0 2\n0 3\n"))
    spec = spectrum_numeric(w)
    assert [(e.value, e.multiplicity) for e in spec.entries] == [
        (1.0, 1),
        (0.0, 2),
        (-1.0, 1),
    ]


def test_constant_vector_is_fixed_on_regular_graphs():
    for g in (build_cube(), build_cycle(9)):
        w = mixing_matrix(g)
        ones = as_amounts([1] * g.node_count, g.node_count)
        assert apply(w, ones) == ones


def test_slem_values():
    assert slem(spectrum_numeric(mixing_matrix(build_cube()))) == 0.5
    assert slem(spectrum_numeric(mixing_matrix(build_cycle(4)))) == 1.0
    assert slem(cycle_spectrum_closed_form(3)) == 0.5


def test_largest_magnitude_below_one():
    assert largest_magnitude_below_one(cycle_spectrum_closed_form(4)) == 0.0
    assert largest_magnitude_below_one(cycle_spectrum_closed_form(6)) == 0.5


@pytest.mark.parametrize(
    "text",
    ["0 1\n1 2\n", "0 1\n0 2\n0 3\n1 2\n", "0 1\n1 2\n2 3\n3 4\n0 4\n1 3\n"],
)
def test_numeric_spectrum_stays_in_unit_interval(text):
    spec = spectrum_numeric(mixing_matrix(from_edge_list(text)))
    assert all(-1.0 - 1e-10 <= v <= 1.0 + 1e-10 for v in spec.values())
    assert any(abs(v - 1.0) <= 1e-10 for v in spec.values())


@pytest.mark.parametrize("n", [5, 8, 12])
def test_cycle_cosine_sine_vectors_are_eigenvectors(n):
    w = [[float(x) for x in row] for row in mixing_matrix(build_cycle(n))]
    for k in range(1, n // 2 + 1):
        lam = math.cos(2 * math.pi * k / n)
        vectors = [[math.cos(2 * math.pi * k * i / n) for i in range(n)]]
        if 2 * k != n:
            vectors.append([math.sin(2 * math.pi * k * i / n) for i in range(n)])
        for vec in vectors:
            out = [sum(w[u][v] * vec[v] for v in range(n)) for u in range(n)]
            assert max(abs(out[i] - lam * vec[i]) for i in range(n)) < 1e-10


def test_decompose_uniform_state():
    d = decompose_cube_state([1, 1, 1, 1, 1, 1])
    assert d.uniform == tuple(F(1) for _ in range(6))
    assert d.opposite_symmetric == tuple(F(0) for _ in range(6))
    assert d.opposite_antisymmetric == tuple(F(0) for _ in range(6))


def test_decompose_pure_antisymmetric_state():
    d = decompose_cube_state([1, 0, 0, 0, 0, -1])
    assert d.uniform == tuple(F(0) for _ in range(6))
    assert d.opposite_symmetric == tuple(F(0) for _ in range(6))
    assert d.opposite_antisymmetric == (F(1), F(0), F(0), F(0), F(0), F(-1))


def test_decompose_one_hot_times_six():
    d = decompose_cube_state([6, 0, 0, 0, 0, 0])
    assert d.uniform == tuple(F(1) for _ in range(6))
    assert d.opposite_symmetric == (F(2), F(-1), F(-1), F(-1), F(-1), F(2))
    assert d.opposite_antisymmetric == (F(3), F(0), F(0), F(0), F(0), F(-3))


def test_decompose_rejects_wrong_dimension():
    with pytest.raises(ValueError):
        decompose_cube_state([1, 2, 3])


@given(states6)
@settings(max_examples=50, deadline=None)
def test_decomposition_reconstructs_exactly(state):
    d = decompose_cube_state(state)
    s = as_amounts(state, 6)
    opposite = (5, 3, 4, 1, 2, 0)
    for v in range(6):
        assert d.uniform[v] + d.opposite_symmetric[v] + d.opposite_antisymmetric[v] == s[v]
        assert d.uniform[v] == d.uniform[0]
        assert d.opposite_symmetric[v] == d.opposite_symmetric[opposite[v]]
        assert d.opposite_antisymmetric[v] == -d.opposite_antisymmetric[opposite[v]]
    assert sum(d.opposite_symmetric) == 0


@given(states6)
@settings(max_examples=50, deadline=None)
def test_scalar_action_identities(state):
    assert verify_scalar_action(state) == (F(1), F(-1, 2), F(0))


def test_scalar_action_on_the_symmetric_example():
    w = mixing_matrix(build_cube())
    sym = as_amounts([2, -1, -1, -1, -1, 2], 6)
    assert apply(w, sym) == (F(-1), F(1, 2), F(1, 2), F(1, 2), F(1, 2), F(-1))
    assert apply(w, sym) == tuple(F(-1, 2) * x for x in sym)


def test_scalar_action_on_zero_state():
    assert verify_scalar_action([0] * 6) == (F(1), F(-1, 2), F(0))

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from lfmd.lp import DANTZIG, UnboundedLP, simplex_max, solve_covering, verify_covering


def test_textbook_lp():
    res = simplex_max([[1, 0], [0, 2], [3, 2]], [4, 12, 18], [3, 5])
    assert res.value == 36
    assert res.x == (2, 6)
    assert res.duals == (0, Fraction(3, 2), 1)


def test_rational_coefficients():
    res = simplex_max([[Fraction(1, 2), Fraction(1, 3)]], [1], [1, 1])
    assert res.value == 3
    assert res.duals == (3,)


def test_unbounded():
    with pytest.raises(UnboundedLP):
        simplex_max([[1, -1]], [1], [1, 1])


def test_negative_rhs_rejected():
    with pytest.raises(ValueError):
        simplex_max([[1]], [-1], [1])


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda m: st.integers(1, 4).flatmap(
            lambda n: st.tuples(
                st.lists(st.lists(st.integers(-2, 5), min_size=n, max_size=n), min_size=m, max_size=m),
                st.lists(st.integers(0, 10), min_size=m, max_size=m),
                st.lists(st.integers(-3, 5), min_size=n, max_size=n),
            )
        )
    ),
    st.sampled_from(["bland", DANTZIG]),
)
def test_simplex_matches_float_oracle(data, rule):
    A, b, c = data
    ref = linprog(-np.array(c, float), A_ub=np.array(A, float), b_ub=np.array(b, float), method="highs")
    if ref.status == 3:
        with pytest.raises(UnboundedLP):
            simplex_max(A, b, c, rule=rule)
        return
    res = simplex_max(A, b, c, rule=rule)
    assert abs(float(res.value) + ref.fun) < 1e-7
    # exact primal feasibility and strong duality
    for row, rhs in zip(A, b):
        assert sum(a * x for a, x in zip(row, res.x)) <= rhs
    assert all(y >= 0 for y in res.duals)
    assert sum(y * rhs for y, rhs in zip(res.duals, b)) == res.value
    for j in range(len(c)):
        assert sum(res.duals[i] * A[i][j] for i in range(len(A))) >= c[j]


def _brute_cover(rows, n):
    """Optimum over the half-integral grid, valid when every row has size 2."""
    from itertools import product

    best = None
    for z in product((Fraction(0), Fraction(1, 2), Fraction(1)), repeat=n):
        if all(sum(z[u] for u in r) >= 1 for r in rows):
            s = sum(z)
            best = s if best is None or s < best else best
    return best


@pytest.mark.parametrize(
    "rows,n",
    [
        ([(0, 1), (1, 2), (0, 2)], 3),
        ([(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], 5),
        ([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 4),
        ([(0, 1), (2, 3)], 4),
    ],
)
def test_edge_cover_lp_is_half_integral(rows, n):
    # vertex-cover LPs have half-integral optimal vertices
    z, y, value = solve_covering(rows, n)
    assert value == _brute_cover(rows, n)
    assert verify_covering(rows, n, z, y).optimal


def test_covering_certificate_detects_bad_pairs():
    rows = [(0, 1), (1, 2), (0, 2)]
    good = verify_covering(rows, 3, [Fraction(1, 2)] * 3, [Fraction(1, 2)] * 3)
    assert good.optimal and good.primal_value == Fraction(3, 2)
    infeasible = verify_covering(rows, 3, [Fraction(1, 2), 0, Fraction(1, 2)], [Fraction(1, 2)] * 3)
    assert not infeasible.primal_feasible
    gap = verify_covering(rows, 3, [1, 1, 1], [Fraction(1, 2)] * 3)
    assert gap.primal_feasible and gap.dual_feasible and not gap.optimal


def test_overloaded_dual_pays_for_excess():
    # y on both rows loads vertex 0 with 2; w_0 = 1 is charged against the dual objective
    cert = verify_covering([(0,), (0,)], 1, [1], [1, 1])
    assert cert.dual_value == 1 and cert.optimal


def test_empty_covering():
    z, y, value = solve_covering([], 3)
    assert value == 0 and z == [0, 0, 0] and y == []

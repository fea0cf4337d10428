"""Exact rational simplex and covering-LP certificates.

The tableau is kept fraction-free: every entry is an integer and the true
value is ``entry / denom`` where ``denom`` is the determinant of the current
basis (Edmonds' integer pivoting). Divisions in the pivot update are exact.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

log = logging.getLogger(__name__)

BLAND = "bland"
DANTZIG = "dantzig"


class UnboundedLP(ArithmeticError):
    pass


@dataclass(frozen=True)
class SimplexResult:
    value: Fraction
    x: tuple[Fraction, ...]
    duals: tuple[Fraction, ...]
    pivots: int


def _integer_row(row: Sequence, rhs) -> tuple[list[int], int, int]:
    """Scale a rational row to integers; returns (coeffs, rhs, scale)."""
    fr = [Fraction(a) for a in row] + [Fraction(rhs)]
    scale = lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * scale) for f in fr]
    return ints[:-1], ints[-1], scale


def simplex_max(
    A: Sequence[Sequence], b: Sequence, c: Sequence, rule: str = BLAND, max_pivots: int = 1_000_000
) -> SimplexResult:
    """Maximize c.x subject to A x <= b, x >= 0, with b >= 0.

    Starts from the all-slack basis, so no phase one is needed. Returns the
    optimal x, the row duals (shadow prices, all >= 0) and the exact value.
    ``rule`` is ``"bland"`` (smallest-index entering and leaving variable) or
    ``"dantzig"`` (most negative reduced cost, falling back to Bland while
    pivots are degenerate).
    """
    m = len(A)
    n = len(c)
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("simplex_max needs a nonnegative right-hand side")
    rows: list[list[int]] = []
    scales: list[int] = []
    for i in range(m):
        if len(A[i]) != n:
            raise ValueError("ragged constraint matrix")
        coeffs, rhs, scale = _integer_row(A[i], b[i])
        # slack for the integer-scaled row is itself rescaled so its coefficient is 1
        slack = [0] * m
        slack[i] = 1
        rows.append(coeffs + slack + [rhs])
        scales.append(scale)
    obj_coeffs, _, obj_scale = _integer_row(c, 0)
    obj = [-a for a in obj_coeffs] + [0] * m + [0]
    width = n + m
    basis = [n + i for i in range(m)]
    denom = 1

    pivots = 0
    degenerate_run = 0
    while True:
        if rule == BLAND or degenerate_run > 0:
            s = next((j for j in range(width) if obj[j] < 0), -1)
        else:
            s, best = -1, 0
            for j in range(width):
                if obj[j] < best:
                    s, best = j, obj[j]
        if s < 0:
            break
        r = -1
        for i in range(m):
            a = rows[i][s]
            if a <= 0:
                continue
            if r < 0:
                r = i
                continue
            lhs = rows[i][-1] * rows[r][s]
            rhs = rows[r][-1] * a
            if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                r = i
        if r < 0:
            raise UnboundedLP("objective is unbounded above")
        pivots += 1
        if pivots > max_pivots:
            raise RuntimeError(f"simplex exceeded {max_pivots} pivots")
        degenerate_run = degenerate_run + 1 if rows[r][-1] == 0 else 0
        prow = rows[r]
        p = prow[s]
        for i in range(m):
            if i == r:
                continue
            row = rows[i]
            f = row[s]
            if f == 0:
                if p != denom:
                    rows[i] = [a * p // denom for a in row]
            else:
                rows[i] = [(p * a - f * q) // denom for a, q in zip(row, prow)]
        f = obj[s]
        obj = [(p * a - f * q) // denom for a, q in zip(obj, prow)]
        denom = p
        basis[r] = s

    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = Fraction(rows[i][-1], denom)
    value = Fraction(obj[-1], denom * obj_scale)
    duals = tuple(Fraction(obj[n + i] * scales[i], denom * obj_scale) for i in range(m))
    log.debug("simplex finished after %d pivots", pivots)
    return SimplexResult(value, tuple(x), duals, pivots)


# --- covering LP ----------------------------------------------------------------


@dataclass(frozen=True)
class CoveringCertificate:
    primal_value: Fraction
    dual_value: Fraction
    primal_feasible: bool
    dual_feasible: bool

    @property
    def optimal(self) -> bool:
        return self.primal_feasible and self.dual_feasible and self.primal_value == self.dual_value


def solve_covering(rows: Sequence[Sequence[int]], ncols: int, rule: str = BLAND) -> tuple[list[Fraction], list[Fraction], Fraction]:
    """min sum(z) s.t. sum_{u in row} z_u >= 1 for each row, 0 <= z <= 1.

    ``rows`` are index lists. Solved through its packing dual
    max sum(y) - sum(w) s.t. sum_{rows r containing u} y_r - w_u <= 1,
    whose row duals are the covering solution z. Returns (z, y, value).
    """
    m = len(rows)
    if m == 0:
        return [Fraction(0)] * ncols, [], Fraction(0)
    # columns: y_0..y_{m-1}, w_0..w_{ncols-1}; one constraint per covering variable
    A = [[0] * (m + ncols) for _ in range(ncols)]
    for r, members in enumerate(rows):
        for u in members:
            A[u][r] = 1
    for u in range(ncols):
        A[u][m + u] = -1
    c = [1] * m + [-1] * ncols
    res = simplex_max(A, [1] * ncols, c, rule=rule)
    y = list(res.x[:m])
    z = list(res.duals)
    return z, y, res.value


def verify_covering(
    rows: Sequence[Sequence[int]], ncols: int, z: Sequence[Fraction], y: Sequence[Fraction]
) -> CoveringCertificate:
    """Exact feasibility and objective check of a primal/dual pair.

    The upper-bound multipliers w are recovered as w_u = max(0, load_u - 1)
    where load_u is the total y weight on rows containing u. Arithmetic runs
    on integers over a common denominator.
    """
    z = [Fraction(v) for v in z]
    y = [Fraction(v) for v in y]
    zden = lcm(*(v.denominator for v in z)) if z else 1
    zi = [v.numerator * (zden // v.denominator) for v in z]
    primal_ok = len(z) == ncols and all(0 <= v <= zden for v in zi)
    if primal_ok:
        primal_ok = all(sum(zi[u] for u in members) >= zden for members in rows)
    yden = lcm(*(v.denominator for v in y)) if y else 1
    yi = [v.numerator * (yden // v.denominator) for v in y]
    dual_ok = len(y) == len(rows) and all(v >= 0 for v in yi)
    load = [0] * ncols
    for val, members in zip(yi, rows):
        if val:
            for u in members:
                load[u] += val
    excess = sum(v - yden for v in load if v > yden)
    primal_value = Fraction(sum(zi), zden)
    dual_value = Fraction(sum(yi) - excess, yden)
    return CoveringCertificate(primal_value, dual_value, primal_ok, dual_ok)

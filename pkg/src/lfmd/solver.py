"""Local fractional metric dimension and its companions.

ldim_f(G) is the optimum of the covering LP

    min sum_v z_v   s.t.  sum_{x in R{u,v}} z_x >= 1 for every edge uv,  0 <= z <= 1,

and dim_f(G) is the same program over every pair of distinct vertices.
"""

from __future__ import annotations

import enum
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

import numpy as np

from .errors import CapacityError, InvalidInputError, NoEdgesError
from .graphs import DistanceMatrix, Graph, all_pairs_distances
from .lp import BLAND, solve_covering, verify_covering
from .resolving import ell_beta, iter_masks

log = logging.getLogger(__name__)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


LDIM_CAP = _env_int("LFMD_LDIM_CAP", 20)
# tableau cells (vertices x (distinct rows + 2 * vertices)) above which the exact
# simplex hands over to the certified floating-point route
SIMPLEX_CELL_CAP = _env_int("LFMD_SIMPLEX_CELLS", 400_000)
MAX_LP_ROWS = _env_int("LFMD_MAX_LP_ROWS", 200_000)
DOMINANCE_ROW_CAP = 4000


class LpStatus(str, enum.Enum):
    OPTIMAL = "OPTIMAL"
    INFEASIBLE_IMPOSSIBLE = "INFEASIBLE-IMPOSSIBLE"
    EMPTY = "EMPTY"


def fmt_fraction(q: Fraction) -> str:
    """Always "p/q", including integers ("2/1")."""
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    value: Fraction
    primal: dict[int, Fraction]
    dual: dict[tuple[int, int], Fraction]
    method: str = "simplex"
    distinct_rows: int = 0
    kept_rows: int = 0
    primal_value: Fraction = Fraction(0)
    dual_value: Fraction = Fraction(0)

    @property
    def certified(self) -> bool:
        return self.status is LpStatus.EMPTY or (
            self.status is LpStatus.OPTIMAL and self.primal_value == self.dual_value == self.value
        )

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "value": fmt_fraction(self.value),
            "primal": {str(k): fmt_fraction(v) for k, v in self.primal.items()},
            "dual": [{"pair": list(k), "value": fmt_fraction(v)} for k, v in self.dual.items()],
            "method": self.method,
            "certificate": {
                "primal_objective": fmt_fraction(self.primal_value),
                "dual_objective": fmt_fraction(self.dual_value),
                "equal": self.primal_value == self.dual_value,
            },
        }


@dataclass(frozen=True)
class BoundReport:
    order: int
    ell: int
    beta: int
    lower_nt: Fraction
    upper_ell: Fraction
    lower_lemma: Optional[Fraction] = None
    integer_ldim: Optional[int] = None
    exact: Optional[Fraction] = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def sandwich_holds(self) -> Optional[bool]:
        if self.exact is None:
            return None
        ok = self.lower_nt <= self.exact <= self.upper_ell
        if self.lower_lemma is not None:
            ok = ok and self.lower_lemma <= self.exact
        return ok

    def to_dict(self) -> dict:
        out = {
            "order": self.order,
            "ell": self.ell,
            "beta": self.beta,
            "lower_nt": fmt_fraction(self.lower_nt),
            "upper_ell": fmt_fraction(self.upper_ell),
            "lower_lemma": None if self.lower_lemma is None else fmt_fraction(self.lower_lemma),
            "integer_ldim": self.integer_ldim,
            "exact": None if self.exact is None else fmt_fraction(self.exact),
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


# --- constraint assembly --------------------------------------------------------


@dataclass(frozen=True)
class ConstraintSystem:
    """Distinct covering rows and the map from original constraints to them."""

    pairs: tuple[tuple[int, int], ...]  # original constraints as index pairs
    rows: tuple[tuple[int, ...], ...]  # distinct neighborhoods as sorted index tuples
    row_of: tuple[int, ...]  # pairs[k] uses rows[row_of[k]]
    kept: tuple[int, ...]  # rows passed to the solver after dropping supersets


def build_constraints(
    d: DistanceMatrix, pairs: list[tuple[int, int]], drop_dominated: bool = True
) -> ConstraintSystem:
    seen: dict[bytes, int] = {}
    rows: list[tuple[int, ...]] = []
    row_of: list[int] = []
    if len(pairs) > MAX_LP_ROWS:
        raise CapacityError(f"{len(pairs)} constraints exceed the cap of {MAX_LP_ROWS}")
    for block in iter_masks(d, pairs):
        packed = np.packbits(block, axis=1)
        for k in range(block.shape[0]):
            key = packed[k].tobytes()
            idx = seen.get(key)
            if idx is None:
                idx = len(rows)
                seen[key] = idx
                rows.append(tuple(int(x) for x in np.flatnonzero(block[k])))
            row_of.append(idx)
    kept = list(range(len(rows)))
    if drop_dominated and 1 < len(rows) <= DOMINANCE_ROW_CAP:
        kept = _undominated(rows)
    return ConstraintSystem(tuple(pairs), tuple(rows), tuple(row_of), tuple(kept))


def _undominated(rows: list[tuple[int, ...]]) -> list[int]:
    """Indices of rows that are not proper supersets of another row.

    A covering row containing another row is implied by it.
    """
    masks = [sum(1 << x for x in r) for r in rows]
    order = sorted(range(len(rows)), key=lambda i: (len(rows[i]), i))
    kept: list[int] = []
    for i in order:
        mi = masks[i]
        if not any(masks[k] & mi == masks[k] for k in kept):
            kept.append(i)
    return sorted(kept)


# --- LP solving -----------------------------------------------------------------


def _solve_rows_float(rows: list[tuple[int, ...]], n: int) -> tuple[list[Fraction], list[Fraction]]:
    """HiGHS solve, then snap to small-denominator rationals for exact checking."""
    from scipy.optimize import linprog
    from scipy.sparse import csr_matrix

    data, ri, ci = [], [], []
    for r, members in enumerate(rows):
        for u in members:
            ri.append(r)
            ci.append(u)
            data.append(-1.0)
    A = csr_matrix((data, (ri, ci)), shape=(len(rows), n))
    res = linprog(np.ones(n), A_ub=A, b_ub=-np.ones(len(rows)), bounds=(0, 1), method="highs-ds")
    if res.status != 0:
        raise RuntimeError(f"floating LP failed: {res.message}")
    z_float = res.x
    y_float = -res.ineqlin.marginals
    return _snap(z_float), _snap(y_float)


def _snap(values, max_den: int = 10_000) -> list[Fraction]:
    out = []
    for v in values:
        q = Fraction(float(v)).limit_denominator(max_den)
        out.append(max(Fraction(0), q))
    return out


def _solve_system(system: ConstraintSystem, n: int, method: str, rule: str) -> tuple[list[Fraction], dict[int, Fraction], str]:
    rows = [system.rows[i] for i in system.kept]
    cells = n * (len(rows) + 2 * n)
    if method == "auto":
        method = "simplex" if cells <= SIMPLEX_CELL_CAP else "certified-float"
    if method == "simplex":
        z, y, _ = solve_covering(rows, n, rule=rule)
    elif method == "certified-float":
        z, y = _solve_rows_float(rows, n)
        cert = verify_covering(rows, n, z, y)
        if not cert.optimal:
            if cells > 4 * SIMPLEX_CELL_CAP:
                raise CapacityError(
                    f"floating solution did not certify and the exact tableau ({cells} cells) is over the cap"
                )
            log.warning("floating solution failed exact certification; re-solving with simplex")
            z, y, _ = solve_covering(rows, n, rule=rule)
            method = "simplex"
    else:
        raise InvalidInputError(f"unknown LP method {method!r}")
    y_by_row = {system.kept[k]: v for k, v in enumerate(y)}
    return z, y_by_row, method


def _solve_pairs(g: Graph, d: DistanceMatrix, pairs: list[tuple[int, int]], method: str, rule: str) -> LpSolution:
    n = g.order
    labels = g.labels
    if not pairs:
        return LpSolution(
            LpStatus.EMPTY, Fraction(0), {lab: Fraction(0) for lab in labels}, {}, method="none"
        )
    system = build_constraints(d, pairs)
    z, y_by_row, used = _solve_system(system, n, method, rule)
    # each distinct row carries its multiplier on the first constraint that produced it
    dual: dict[tuple[int, int], Fraction] = {}
    assigned: set[int] = set()
    for (i, j), r in zip(system.pairs, system.row_of):
        val = Fraction(0)
        if r not in assigned:
            assigned.add(r)
            val = y_by_row.get(r, Fraction(0))
        dual[(labels[i], labels[j])] = val
    # duplicates carry zero multipliers, so checking distinct rows is equivalent
    y_distinct = [y_by_row.get(r, Fraction(0)) for r in range(len(system.rows))]
    cert = verify_covering(system.rows, n, z, y_distinct)
    value = sum(z, Fraction(0))
    if not (cert.primal_feasible and cert.dual_feasible):
        raise ArithmeticError("LP solution failed exact feasibility check")
    return LpSolution(
        status=LpStatus.OPTIMAL,
        value=value,
        primal={labels[u]: z[u] for u in range(n)},
        dual=dual,
        method=used,
        distinct_rows=len(system.rows),
        kept_rows=len(system.kept),
        primal_value=cert.primal_value,
        dual_value=cert.dual_value,
    )


def solve_lfmd_exact(
    g: Graph, d: Optional[DistanceMatrix] = None, method: str = "auto", rule: str = BLAND
) -> LpSolution:
    """Exact ldim_f(G); an edgeless graph gives status EMPTY and value 0."""
    if d is None:
        d = all_pairs_distances(g)
    return _solve_pairs(g, d, list(g.edges), method, rule)


def solve_fmd_exact(
    g: Graph, d: Optional[DistanceMatrix] = None, method: str = "auto", rule: str = BLAND
) -> LpSolution:
    """Exact dim_f(G) over all unordered pairs of distinct vertices."""
    if g.order < 2:
        raise InvalidInputError("fractional metric dimension needs at least two vertices")
    if d is None:
        d = all_pairs_distances(g)
    pairs = [(i, j) for i in range(g.order) for j in range(i + 1, g.order)]
    return _solve_pairs(g, d, pairs, method, rule)


# --- integer local metric dimension ------------------------------------------------


def local_metric_dimension_integer(
    g: Graph, d: Optional[DistanceMatrix] = None, cap: Optional[int] = None
) -> int:
    """Smallest W such that every edge uv has w in W with d(w,u) != d(w,v)."""
    cap = LDIM_CAP if cap is None else cap
    if g.order > cap:
        raise CapacityError(f"order {g.order} exceeds the exhaustive-search cap {cap}")
    if not g.edges:
        return 0
    if d is None:
        d = all_pairs_distances(g)
    system = build_constraints(d, list(g.edges))
    masks = [sum(1 << x for x in system.rows[i]) for i in system.kept]
    for size in range(1, g.order + 1):
        for combo in combinations(range(g.order), size):
            w = 0
            for x in combo:
                w |= 1 << x
            if all(w & m for m in masks):
                return size
    raise AssertionError("the full vertex set always resolves every edge")


def generic_bounds(
    g: Graph,
    with_integer_ldim: bool = False,
    exact: Optional[Fraction] = None,
    d: Optional[DistanceMatrix] = None,
    ldim_cap: Optional[int] = None,
) -> BoundReport:
    """n/beta <= ldim_f <= n/ell, plus n/(n - ldim + 1) when requested."""
    if not g.edges:
        raise NoEdgesError(f"{g!r} has no edges")
    if d is None:
        d = all_pairs_distances(g)
    ell, beta = ell_beta(g, d)
    n = g.order
    notes = []
    ldim = lower_lemma = None
    if with_integer_ldim:
        if n <= 2:
            notes.append("lemma bound omitted for order <= 2")
        else:
            try:
                ldim = local_metric_dimension_integer(g, d, cap=ldim_cap)
                lower_lemma = Fraction(n, n - ldim + 1)
            except CapacityError as exc:
                notes.append(f"lemma bound omitted: {exc}")
    return BoundReport(
        order=n,
        ell=ell,
        beta=beta,
        lower_nt=Fraction(n, beta),
        upper_ell=Fraction(n, ell),
        lower_lemma=lower_lemma,
        integer_ldim=ldim,
        exact=exact,
        notes=tuple(notes),
    )

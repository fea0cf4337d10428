"""Closed-form bound tables rendered in the same number style as print.

Numbers follow the usual computer-algebra display: six significant digits,
round half up, trailing zeros dropped, a bare trailing "." on integral reals,
thousands separators from 10,000 on, and ``m×10^e`` from a million on.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Context, Decimal
from fractions import Fraction
from typing import Callable

from .errors import InvalidInputError
from .families import ASYMPTOTIC_LABEL, Family

TABLE_IDS = ("T1", "T2", "TT2", "T3", "T4")

_CTX = Context(prec=6, rounding=ROUND_HALF_UP)


def format_real(q: Fraction | int, digits: int = 6) -> str:
    q = Fraction(q)
    ctx = _CTX if digits == 6 else Context(prec=digits, rounding=ROUND_HALF_UP)
    d = ctx.divide(Decimal(q.numerator), Decimal(q.denominator))
    sign = "-" if d < 0 else ""
    d = abs(d)
    if d >= 10**6:
        _, ds, exp = d.normalize(ctx).as_tuple()
        ds = "".join(map(str, ds))
        power = len(ds) - 1 + exp
        return f"{sign}{ds[0]}.{ds[1:]}×10^{power}"
    text = format(d.normalize(ctx), "f")
    whole, _, frac = text.partition(".")
    if int(whole) >= 10_000:
        whole = f"{int(whole):,}"
    return f"{sign}{whole}.{frac}"


def format_index(k: int) -> str:
    return f"{k}."


@dataclass(frozen=True)
class Table:
    table_id: str
    title: str
    headers: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    values: tuple[tuple[object, ...], ...] = ()
    notes: tuple[str, ...] = field(default_factory=tuple)

    def column(self, j: int) -> list[str]:
        return [r[j] for r in self.rows]

    def to_markdown(self) -> str:
        out = [f"**{self.table_id}**: {self.title}", ""]
        out.append("| " + " | ".join(self.headers) + " |")
        out.append("|" + "|".join("---" for _ in self.headers) + "|")
        for row in self.rows:
            out.append("| " + " | ".join(row) + " |")
        for note in self.notes:
            out.append("")
            out.append(f"Note: {note}")
        return "\n".join(out) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.headers)
        w.writerows(self.rows)
        return buf.getvalue()


F = Fraction

# (header, exact value of row k, render as real?)
Column = tuple[str, Callable[[int], Fraction], bool]

_T2_COLUMNS: list[Column] = [
    ("T_w<1,w-2> (w=2k)", lambda k: F(2 * k, 2 * k - 2), True),
    ("T_{w≡0} (w=4k)", lambda k: F(2), False),
    ("T_{w≡1} (w=4k+1)", lambda k: F(2 * (4 * k + 1), 4 * k + 2), True),
    ("T_{w≡2} (w=4k+2)", lambda k: F(2), False),
    ("T_{w≡3} (w=4k+3)", lambda k: F(4 * (4 * k + 3), 3 * (4 * k + 3) - 5), True),
]

_TT2_COLUMNS: list[Column] = [
    ("T_w<1,w-2> (w=2k)", lambda k: F(2 * k, 2 * k - 1), True),
    # printed column matches (2k+1)/(2k-1), not w/(w-2) at w = 4k
    ("T_{w≡0} (w=4k)", lambda k: F(2 * k + 1, 2 * k - 1), True),
    ("T_{w≡1} (w=4k+1)", lambda k: F(4 * k + 1, 4 * k), True),
    ("T_{w≡2} (w=4k+2)", lambda k: F(1), False),
    ("T_{w≡3} (w=4k+3)", lambda k: F(4 * k + 3, 4 * k + 2), True),
]

_T3_COLUMNS: list[Column] = [
    ("T_{2^k}<1,2^(k-2),2^(k-1)>", lambda k: F(2 ** (k - 3)), True),
    ("G(Z*_{2^k})", lambda k: F(2**k - 1, 2), True),
    ("G(Z*_{3^k})", lambda k: F(3**k - 1, 2), True),
]

_T4_COLUMNS: list[Column] = [
    ("T_{2^k}<1,2^(k-2),2^(k-1)>", lambda k: F(2**k, 2**k - 2), True),
    ("G(Z*_{2^k})", lambda k: F(2**k - 1, 2 ** (k - 1) + 1), True),
    ("G(Z*_{3^k})", lambda k: F(3**k - 1, 3 ** (k - 1) + 1), True),
]

TT2_NOTE = (
    "column T_{w≡0}: the lower bound w/(w-2) at w = 4k gives 2k/(2k-1) (16/15 = 1.06667 at k = 8), "
    "but the printed column equals (2k+1)/(2k-1) (17/15 = 1.13333 at k = 8); the printed value is emitted"
)

_T1_ROWS = [
    (Family.TOEPLITZ_1_WM2, "T_w<1,w-2>", "1 (w odd); w/(w-1) <= ldim_f <= w/(w-2) (w even)"),
    (
        Family.TOEPLITZ_1_2_WM1,
        "T_w<1,2,w-1>",
        "2 (w=4); [w/(w-2), 2] (w≡0); [w/(w-1), 2w/(w+1)] (w≡1); [1, 2] (w≡2); [w/(w-1), 4w/(3w-5)] (w≡3)",
    ),
    (Family.TOEPLITZ_POW2, "T_{2^k}<1,2^(k-2),2^(k-1)>", "2^k/(2^k-2) <= ldim_f <= 2^(k-3)"),
    (Family.TOEPLITZ_2P, "T_{2p}<2,p>", "2p/(2p-1) <= ldim_f <= p/(p-1)"),
    (Family.TOEPLITZ_3P, "T_{3p}<3,p>", "1"),
    (Family.ZD_2P, "G(Z_{2p})", "1"),
    (Family.ZD_KP, "G(Z_{kp})", "1"),
    (Family.ZD_PK, "G(Z_{p^k})", "(p^(k-1)-1)/2"),
    (Family.ZDSTAR_2K, "G(Z*_{2^k})", "(2^k-1)/(2^(k-1)+1) <= ldim_f <= (2^k-1)/2"),
    (Family.ZDSTAR_3K, "G(Z*_{3^k})", "(3^k-1)/(3^(k-1)+1) <= ldim_f <= (3^k-1)/2"),
    (Family.ZDSTAR_P2, "G(Z*_{p^2})", "(p^2-1)/(p^2-p+1) <= ldim_f <= (p^2-1)/2"),
]


def _numeric(table_id: str, title: str, index: str, cols: list[Column], ks: range, notes=()) -> Table:
    rows, values = [], []
    for k in ks:
        vals = [f(k) for _, f, _ in cols]
        cells = [format_real(v) if real else str(v) for v, (_, _, real) in zip(vals, cols)]
        rows.append((format_index(k), *cells))
        values.append((k, *vals))
    headers = (index, *(h for h, _, _ in cols))
    return Table(table_id, title, headers, tuple(rows), tuple(values), tuple(notes))


def reproduce_tables(table_id: str) -> Table:
    tid = table_id.upper()
    if tid == "T1":
        rows = tuple((name, claim, ASYMPTOTIC_LABEL[fam]) for fam, name, claim in _T1_ROWS)
        vals = tuple((fam.value,) for fam, _, _ in _T1_ROWS)
        return Table("T1", "asymptotic behaviour of the named families", ("Family", "ldim_f", "Asymptotic"), rows, vals)
    if tid == "T2":
        return _numeric("T2", "upper bounds, T_w families", "k", _T2_COLUMNS, range(8, 21))
    if tid == "TT2":
        return _numeric("TT2", "lower bounds, T_w families", "k", _TT2_COLUMNS, range(8, 21), notes=(TT2_NOTE,))
    if tid == "T3":
        return _numeric("T3", "upper bounds, power families", "k", _T3_COLUMNS, range(4, 21))
    if tid == "T4":
        return _numeric("T4", "lower bounds, power families", "k", _T4_COLUMNS, range(4, 21))
    raise InvalidInputError(f"unknown table {table_id!r}; expected one of {', '.join(TABLE_IDS)}")

"""Grid sweeps over q, emitted as CSV step-function data."""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, List, Optional

from .convergence import (
    DEFAULT_CAP,
    DEFAULT_N_CAP,
    IntervalClass,
    agreement_length_simulated,
    classify,
)
from .numerics import format_rational, to_rational

HEADER = ("p", "q", "inv_p", "L_closed", "L_sim", "class", "tie")


class Grid(enum.Enum):
    UNIFORM_Q = "q"
    UNIFORM_INVERSE_P = "inv-p"


class SweepMismatch(RuntimeError):
    def __init__(self, row: "SweepRow", reason: str):
        super().__init__(f"{reason} at q={format_rational(row.q)}: "
                         f"closed={row.l_closed} sim={row.l_sim}")
        self.row = row


@dataclass(frozen=True)
class SweepSpec:
    q_min: Fraction
    q_max: Fraction
    steps: int
    grid: Grid = Grid.UNIFORM_Q

    def __post_init__(self):
        q_min, q_max = to_rational(self.q_min), to_rational(self.q_max)
        if not 0 < q_min < q_max < 1:
            raise ValueError("need 0 < q_min < q_max < 1")
        if self.steps < 2:
            raise ValueError("steps must be >= 2")
        object.__setattr__(self, "q_min", q_min)
        object.__setattr__(self, "q_max", q_max)

    @classmethod
    def from_inverse_p(cls, lo, hi, steps: int) -> "SweepSpec":
        """Grid uniform in ``1/p`` over ``[lo, hi]``."""
        lo, hi = to_rational(lo), to_rational(hi)
        return cls(1 - 1 / lo, 1 - 1 / hi, steps, Grid.UNIFORM_INVERSE_P)

    def points(self) -> List[Fraction]:
        """Grid points, ascending in q."""
        last = self.steps - 1
        if self.grid is Grid.UNIFORM_Q:
            span = self.q_max - self.q_min
            return [self.q_min + span * i / last for i in range(self.steps)]
        lo = 1 / (1 - self.q_min)
        hi = 1 / (1 - self.q_max)
        span = hi - lo
        return [1 - 1 / (lo + span * i / last) for i in range(self.steps)]


@dataclass(frozen=True)
class SweepRow:
    q: Fraction
    l_closed: int
    interval: IntervalClass
    l_sim: Optional[int] = None
    tie: bool = False

    @property
    def p(self) -> Fraction:
        return 1 - self.q

    @property
    def inverse_p(self) -> Fraction:
        return 1 / self.p

    def fields(self) -> List[str]:
        return [
            format_rational(self.p),
            format_rational(self.q),
            format_decimal(self.inverse_p),
            str(self.l_closed),
            "" if self.l_sim is None else str(self.l_sim),
            self.interval.render(),
            "1" if self.tie else "0",
        ]


def format_decimal(x: Fraction, digits: int = 15) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return format(Decimal(x.numerator) / Decimal(x.denominator), "f")


def sweep_row(q: Fraction, simulate: bool = True, cap: int = DEFAULT_CAP,
              n_cap: int = DEFAULT_N_CAP) -> SweepRow:
    interval = classify(q, n_cap)
    l_sim, tie = None, False
    if simulate:
        result = agreement_length_simulated(q, cap)
        l_sim, tie = result.length, result.tie_flag
    return SweepRow(q, interval.length, interval, l_sim, tie)


def run_sweep(spec: SweepSpec, simulate: bool = True, cap: int = DEFAULT_CAP,
              n_cap: int = DEFAULT_N_CAP) -> List[SweepRow]:
    """Compute every row; raise :class:`SweepMismatch` on a mismatch or tie."""
    rows = []
    for q in spec.points():
        row = sweep_row(q, simulate, cap, n_cap)
        if row.l_sim is not None and row.l_sim != row.l_closed:
            raise SweepMismatch(row, "MISMATCH")
        if row.tie:
            raise SweepMismatch(row, "tie")
        rows.append(row)
    return rows


def write_csv(rows: Iterable[SweepRow], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(HEADER)
    for row in rows:
        writer.writerow(row.fields())


def render_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def read_csv(stream) -> List[dict]:
    """Parse a sweep CSV back into dicts with exact rationals and ints."""
    reader = csv.DictReader(stream)
    if tuple(reader.fieldnames or ()) != HEADER:
        raise ValueError(f"unexpected header {reader.fieldnames}")
    out = []
    for rec in reader:
        out.append({
            "p": Fraction(rec["p"]),
            "q": Fraction(rec["q"]),
            "inv_p": Decimal(rec["inv_p"]),
            "L_closed": int(rec["L_closed"]),
            "L_sim": int(rec["L_sim"]) if rec["L_sim"] else None,
            "class": IntervalClass.parse(rec["class"]),
            "tie": rec["tie"] == "1",
        })
    return out

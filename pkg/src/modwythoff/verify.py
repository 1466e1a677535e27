"""Cross-check harness: closed form vs brute-force oracle.

`verify_m` solves one modulus on a box comfortably larger than the
finite P set (every P coordinate is at most floor(m*phi) < 2m, so the
default box factor 3 leaves a margin of N cells around the set, making
"nothing else is P" a meaningful check), then compares the oracle
against the closed form, the count formula 2*floor(m/phi) + 1, the
subset-of-Wythoff property, and the soundness of `winning_move` at
every box position.  Reports serialize to JSON-ready dicts, aligned
text, and CSV.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, asdict

from .beatty import floor_div_phi
from .modular import is_legal, modular_p_set, winning_move
from .oracle import BoardLabels, p_positions_of, solve_fast
from .wythoff import Position, is_wythoff_p

CSV_HEADER = "m,box_side,closed_count,oracle_count,sets_equal,count_ok,subset_ok,strategy_ok"


@dataclass
class VerificationReport:
    m: int
    box_side: int
    closed_form_count: int
    oracle_count: int
    sets_equal: bool
    count_formula_holds: bool
    subset_of_wythoff: bool
    strategy_sound: bool
    # (position, closed-form label, oracle label) for every disagreement;
    # reported exhaustively, never fail-fast.
    mismatches: list[tuple[Position, str, str]] = field(default_factory=list)
    error: str | None = None

    @property
    def all_pass(self) -> bool:
        return (
            self.error is None
            and self.sets_equal
            and self.count_formula_holds
            and self.subset_of_wythoff
            and self.strategy_sound
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["mismatches"] = [
            {"position": list(pos), "closed_form": exp, "oracle": got}
            for pos, exp, got in self.mismatches
        ]
        d["all_pass"] = self.all_pass
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        mismatches = [
            ((int(e["position"][0]), int(e["position"][1])), e["closed_form"], e["oracle"])
            for e in d.get("mismatches", [])
        ]
        return cls(
            m=d["m"],
            box_side=d["box_side"],
            closed_form_count=d["closed_form_count"],
            oracle_count=d["oracle_count"],
            sets_equal=d["sets_equal"],
            count_formula_holds=d["count_formula_holds"],
            subset_of_wythoff=d["subset_of_wythoff"],
            strategy_sound=d["strategy_sound"],
            mismatches=mismatches,
            error=d.get("error"),
        )

    def to_text(self) -> str:
        if self.error is not None:
            return f"m={self.m} ERROR {self.error}"
        flags = (
            f"sets_equal={_yn(self.sets_equal)} count_ok={_yn(self.count_formula_holds)} "
            f"subset_ok={_yn(self.subset_of_wythoff)} strategy_ok={_yn(self.strategy_sound)}"
        )
        line = (
            f"m={self.m} box_side={self.box_side} closed={self.closed_form_count} "
            f"oracle={self.oracle_count} {flags}"
        )
        if self.mismatches:
            shown = ", ".join(
                f"{pos}: closed={exp} oracle={got}" for pos, exp, got in self.mismatches
            )
            line += f"\n  mismatches: {shown}"
        return line

    def to_csv_row(self) -> str:
        return (
            f"{self.m},{self.box_side},{self.closed_form_count},{self.oracle_count},"
            f"{_tf(self.sets_equal)},{_tf(self.count_formula_holds)},"
            f"{_tf(self.subset_of_wythoff)},{_tf(self.strategy_sound)}"
        )


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _tf(b: bool) -> str:
    return "true" if b else "false"


def _strategy_sound(labels: BoardLabels, m: int) -> bool:
    """winning_move is None exactly on oracle-P cells and otherwise
    produces a legal move into an oracle-P cell."""
    grid = labels.grid
    size = labels.n_max + 1
    for x in range(size):
        row = grid[x]
        for y in range(size):
            mv = winning_move((x, y), m)
            if row[y]:
                if mv is not None:
                    return False
            else:
                if mv is None or not is_legal((x, y), mv, m):
                    return False
                if not grid[x - mv.k1, y - mv.k2]:
                    return False
    return True


def verify_m(m: int, box_factor: float = 3.0) -> VerificationReport:
    """Verify one modulus on the box [0, ceil(m * box_factor)]^2."""
    if box_factor < 2:
        raise ValueError(f"box_factor must be >= 2, got {box_factor}")
    box_side = math.ceil(m * box_factor)
    labels = solve_fast(m, box_side)

    closed = modular_p_set(m)
    closed_set = closed.position_set()
    oracle_list = p_positions_of(labels)
    oracle_set = set(oracle_list)

    mismatches: list[tuple[Position, str, str]] = []
    for pos in sorted(closed_set - oracle_set):
        mismatches.append((pos, "P", "N"))
    for pos in sorted(oracle_set - closed_set):
        mismatches.append((pos, "N", "P"))

    return VerificationReport(
        m=m,
        box_side=box_side,
        closed_form_count=len(closed),
        oracle_count=len(oracle_list),
        sets_equal=not mismatches,
        count_formula_holds=len(oracle_list) == 2 * floor_div_phi(m) + 1,
        subset_of_wythoff=all(is_wythoff_p(p) for p in oracle_list),
        strategy_sound=_strategy_sound(labels, m),
        mismatches=mismatches,
    )


def verify_range(
    m_lo: int, m_hi: int, box_factor: float = 3.0
) -> list[VerificationReport]:
    """One independent report per m in [m_lo, m_hi].

    Per-m failures (e.g. a box beyond the oracle tier) are recorded in
    the report's `error` field instead of aborting the batch.
    """
    if m_lo < 1 or m_hi < m_lo:
        raise ValueError(f"need 1 <= m_lo <= m_hi, got [{m_lo}, {m_hi}]")
    reports = []
    for m in range(m_lo, m_hi + 1):
        try:
            reports.append(verify_m(m, box_factor))
        except ValueError as e:
            reports.append(
                VerificationReport(
                    m=m,
                    box_side=math.ceil(m * box_factor),
                    closed_form_count=0,
                    oracle_count=0,
                    sets_equal=False,
                    count_formula_holds=False,
                    subset_of_wythoff=False,
                    strategy_sound=False,
                    error=str(e),
                )
            )
    return reports


def all_pass(reports: list[VerificationReport]) -> bool:
    return all(r.all_pass for r in reports)


def reports_to_csv(reports: list[VerificationReport]) -> str:
    return "\n".join([CSV_HEADER] + [r.to_csv_row() for r in reports]) + "\n"


def _format_positions(positions: list[Position]) -> str:
    return ", ".join(f"({x}, {y})" for x, y in positions)


@dataclass(frozen=True)
class PTable:
    """P-position listing per modulus, renderable as text or CSV."""

    rows: tuple[tuple[int, tuple[Position, ...]], ...]

    def to_text(self) -> str:
        width = max(len(str(m)) for m, _ in self.rows)
        lines = [f"{'m'.rjust(width)} | P-positions"]
        for m, positions in self.rows:
            lines.append(f"{str(m).rjust(width)} | {_format_positions(list(positions))}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        lines = ["m,count,p_positions"]
        for m, positions in self.rows:
            lines.append(f'{m},{len(positions)},"{_format_positions(list(positions))}"')
        return "\n".join(lines) + "\n"


def p_position_table(m_values: list[int]) -> PTable:
    """The closed-form P-position set of each modulus, in entry order."""
    rows = tuple(
        (m, tuple(modular_p_set(m).positions())) for m in m_values
    )
    return PTable(rows)

"""Grid-sweep verification reports."""

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of sweeping one subject (a sum family or an identity) over a grid.

    points_checked + points_skipped equals the grid cardinality; skipped
    points are those where a precondition (vanishing denominator, degenerate
    parameter) ruled the check out.  Mismatch entries keep big integers as
    decimal strings.
    """

    subject: str
    grid: dict
    points_checked: int = 0
    points_skipped: int = 0
    mismatches: list = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def status(self) -> str:
        if self.mismatches:
            return "fail"
        if self.points_checked == 0:
            return "vacuous"
        return "pass"

    def to_json_dict(self) -> dict:
        return {
            "subject": self.subject,
            "grid": self.grid,
            "points_checked": self.points_checked,
            "points_skipped": self.points_skipped,
            "mismatches": self.mismatches,
            "wall_time_s": self.wall_time_s,
            "status": self.status,
        }

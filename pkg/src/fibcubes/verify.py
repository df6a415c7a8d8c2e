"""Closed-form vs oracle verification sweeps."""

import time

from . import closed_forms, oracle
from .closed_forms import SumFamily, SumSpec
from .report import VerificationReport

__all__ = ["sweep_family"]


def sweep_family(
    family: SumFamily,
    r_range: tuple[int, int],
    n_range: tuple[int, int],
    fail_fast: bool = False,
) -> VerificationReport:
    """Compare evaluate() against the brute-force oracle over an (r, n) grid.

    r = 0 points are degenerate (the theorems' divisors vanish there) and are
    skipped and counted rather than verified.  The oracle side is one
    incremental prefix pass per r, so the whole n axis costs O(n_max) terms.
    """
    family = SumFamily(family)
    r_lo, r_hi = r_range
    n_lo, n_hi = n_range
    if n_lo < 0:
        raise ValueError("n range must be nonnegative")
    report = VerificationReport(
        subject=family.value,
        grid={"r": [r_lo, r_hi], "n": [n_lo, n_hi]},
    )
    start = time.perf_counter()
    n_count = n_hi - n_lo + 1
    for r in range(r_lo, r_hi + 1):
        if r == 0:
            report.points_skipped += n_count
            continue
        stream = oracle.prefix_sums(family, r, n_hi)
        for n, expected in enumerate(stream):
            if n < n_lo:
                continue
            got = closed_forms.evaluate(SumSpec(family, r, n)).value
            report.points_checked += 1
            if got != expected:
                report.mismatches.append(
                    {
                        "params": {"r": r, "n": n},
                        "expected": str(expected),
                        "got": str(got),
                    }
                )
                if fail_fast:
                    report.wall_time_s = time.perf_counter() - start
                    return report
    report.wall_time_s = time.perf_counter() - start
    return report

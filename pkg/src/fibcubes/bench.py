"""Wall-clock comparison of the closed forms against the two oracle routes.

Each bench point runs a warm-up pass (which doubles as the value
cross-assertion against the closed form) and then one timed pass; --repeat
runs several timed passes and reports the median.  Values are asserted
identical across methods before any timing is recorded.
"""

import statistics
import time
from dataclasses import dataclass
from enum import Enum

from .arith import digit_count
from .closed_forms import SumFamily, SumSpec, evaluate
from .errors import IntegrityError
from .oracle import oracle_sum, oracle_sum_incremental

__all__ = ["BenchMethod", "BenchRecord", "CSV_HEADER", "run_bench"]

CSV_HEADER = ["family", "r", "n", "method", "wall_time_s", "value_digits"]


class BenchMethod(str, Enum):
    CLOSED_FORM = "closed-form"
    ORACLE_PER_TERM = "oracle-per-term"
    ORACLE_INCREMENTAL = "oracle-incremental"


_RUNNERS = {
    BenchMethod.CLOSED_FORM: lambda spec: evaluate(spec).value,
    BenchMethod.ORACLE_PER_TERM: oracle_sum,
    BenchMethod.ORACLE_INCREMENTAL: oracle_sum_incremental,
}


@dataclass(frozen=True)
class BenchRecord:
    family: str
    r: int
    n: int
    method: BenchMethod
    wall_time_s: float
    value_digits: int

    def csv_row(self) -> list:
        return [
            self.family, self.r, self.n, self.method.value,
            f"{self.wall_time_s:.6f}", self.value_digits,
        ]


def run_bench(
    family: SumFamily,
    r: int,
    n_values,
    methods=tuple(BenchMethod),
    repeat: int = 1,
    warmup: bool = True,
) -> list[BenchRecord]:
    """Time each selected method at each n; records in (n, method) order."""
    family = SumFamily(family)
    methods = [BenchMethod(m) for m in methods]
    records = []
    for n in n_values:
        if n < 1:
            raise ValueError(f"bench n values must be >= 1, got {n}")
        spec = SumSpec(family, r, n)
        reference = evaluate(spec).value
        digits = digit_count(reference)
        for method in BenchMethod:
            if method not in methods:
                continue
            runner = _RUNNERS[method]
            if warmup:
                _assert_value(runner(spec), reference, spec, method)
            times = []
            for _ in range(max(1, repeat)):
                t0 = time.perf_counter()
                value = runner(spec)
                times.append(time.perf_counter() - t0)
            _assert_value(value, reference, spec, method)
            records.append(
                BenchRecord(
                    family=family.value, r=r, n=n, method=method,
                    wall_time_s=statistics.median(times), value_digits=digits,
                )
            )
    return records


def _assert_value(value, reference, spec, method):
    if value != reference:
        raise IntegrityError(
            f"bench cross-assertion failed for {method.value} at "
            f"{spec.family.value}(r={spec.r}, n={spec.n}): "
            f"got {value}, closed form says {reference}"
        )

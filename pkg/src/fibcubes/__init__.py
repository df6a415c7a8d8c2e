"""Exact sums of cubes (and first powers) of even-indexed Fibonacci and
Lucas numbers via factored closed forms, with brute-force verification.

The public surface:

* kernel: fib, lucas, fib_lucas (O(log n) fast doubling, signed indices)
* closed_forms: evaluate and the per-family evaluators, FactoredForm
* oracle: oracle_sum, oracle_sum_incremental, check_telescope
* identities: list_identities, check_identity, sweep_identity
* verify.sweep_family, bench.run_bench, cli.main
"""

from ._backend import BACKEND
from .bench import BenchMethod, BenchRecord, run_bench
from .closed_forms import (
    Branch,
    FactoredForm,
    SpecialCase,
    SumFamily,
    SumSpec,
    evaluate,
    fib_cube_sum,
    fib_cube_sum_variant,
    first_power_fib_sum,
    first_power_lucas_sum,
    lucas_cube_sum,
    special_case_sum,
)
from .errors import IndexCapError, IntegrityError, ZeroDenominatorError
from .identities import (
    EQUIVALENT_RHS_PAIRS,
    IdentityCheck,
    check_identity,
    list_identities,
    sweep_identity,
)
from .kernel import INDEX_CAP, fib, fib_lucas, lucas
from .oracle import (
    TelescopeSpec,
    check_telescope,
    oracle_sum,
    oracle_sum_incremental,
)
from .report import VerificationReport
from .verify import sweep_family

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "INDEX_CAP",
    "__version__",
    "fib",
    "lucas",
    "fib_lucas",
    "SumFamily",
    "SumSpec",
    "Branch",
    "SpecialCase",
    "FactoredForm",
    "evaluate",
    "fib_cube_sum",
    "fib_cube_sum_variant",
    "lucas_cube_sum",
    "first_power_fib_sum",
    "first_power_lucas_sum",
    "special_case_sum",
    "oracle_sum",
    "oracle_sum_incremental",
    "TelescopeSpec",
    "check_telescope",
    "IdentityCheck",
    "check_identity",
    "list_identities",
    "sweep_identity",
    "EQUIVALENT_RHS_PAIRS",
    "VerificationReport",
    "sweep_family",
    "BenchMethod",
    "BenchRecord",
    "run_bench",
    "IndexCapError",
    "IntegrityError",
    "ZeroDenominatorError",
]

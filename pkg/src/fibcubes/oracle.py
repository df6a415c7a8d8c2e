"""Brute-force reference sums and the telescoping checker.

Nothing here uses a closed form.  Two independent summation routes exist on
purpose: the per-term route recomputes every term from scratch with the
doubling kernel, while the incremental route advances a Fibonacci pair by a
fixed stride using only additions and multiplications by constants taken
from a one-time seed.  A defect in the doubling kernel therefore cannot
corrupt both routes at once.
"""

from dataclasses import dataclass
from typing import Callable, Iterator

from ._backend import core
from .closed_forms import SumFamily, SumSpec
from .identities import IdentityCheck
from .kernel import INDEX_CAP, fib_lucas
from .errors import IndexCapError

__all__ = [
    "oracle_sum",
    "oracle_sum_incremental",
    "prefix_sums",
    "TelescopeSpec",
    "check_telescope",
]

_IS_LUCAS = {SumFamily.LUCAS_CUBE: True, SumFamily.LUCAS_FIRST: True,
             SumFamily.FIB_CUBE: False, SumFamily.FIB_FIRST: False}
_IS_CUBE = {SumFamily.FIB_CUBE: True, SumFamily.LUCAS_CUBE: True,
            SumFamily.FIB_FIRST: False, SumFamily.LUCAS_FIRST: False}


def _checked_stride(spec: SumSpec) -> int:
    stride = 2 * spec.r
    if abs(stride) * spec.n > INDEX_CAP:
        raise IndexCapError(
            f"top index |2rn| = {abs(stride) * spec.n} exceeds INDEX_CAP"
        )
    return stride


def oracle_sum(spec: SumSpec) -> int:
    """Term-by-term sum, every term evaluated from scratch by the kernel."""
    family = SumFamily(spec.family)
    stride = _checked_stride(spec)
    return core.per_term_power_sum(
        stride, spec.n, _IS_LUCAS[family], _IS_CUBE[family]
    )


def _step_seed(r: int):
    """(F_{2r-1}, F_2r, F_2r+1) from a single kernel evaluation at 2r."""
    f, ell = fib_lucas(2 * r)
    f_next = (f + ell) >> 1          # F_{m+1} = (F_m + L_m) / 2, always exact
    return f_next - f, f, f_next


def oracle_sum_incremental(spec: SumSpec) -> int:
    """Same sum as oracle_sum via fixed-stride pair stepping.

    After the seed, the loop performs only additions and multiplications by
    the seed constants, making it both a kernel-independent cross-check and
    the fair linear-time baseline for benchmarks.
    """
    family = SumFamily(spec.family)
    _checked_stride(spec)
    p, q, b = _step_seed(spec.r)
    return core.pair_step_sum(
        p, q, q, b, spec.n, _IS_LUCAS[family], _IS_CUBE[family]
    )


def prefix_sums(family: SumFamily, r: int, n_max: int) -> Iterator[int]:
    """Yield the sums for n = 0, 1, .., n_max in one incremental pass.

    Equivalent to oracle_sum at each n, at total cost O(n_max) terms; used by
    verification sweeps so a grid over n costs one pass, not a triangle.
    """
    family = SumFamily(family)
    _checked_stride(SumSpec(family, r, n_max))
    lucas, cube = _IS_LUCAS[family], _IS_CUBE[family]
    p, q, b = _step_seed(r)
    a = q
    total = 0
    yield total
    for _ in range(n_max):
        t = (b << 1) - a if lucas else a
        total += t * t * t if cube else t
        a, b = q * b + p * a, (p + q) * b + q * a
        yield total


@dataclass(frozen=True)
class TelescopeSpec:
    """Parameters for the telescoping-cancellation check.

    For positive m, q, n and any integer sequence f:

        sum_{k=1..n} [f(mk + mq) - f(mk)]
            = sum_{k=1..q} f(mk + mn) - sum_{k=1..q} f(mk)
    """

    m: int
    q: int
    n: int
    f: Callable[[int], int]

    def __post_init__(self):
        for name in ("m", "q", "n"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")


def check_telescope(spec: TelescopeSpec) -> IdentityCheck:
    """Evaluate both sides of the telescoping identity literally."""
    m, q, n, f = spec.m, spec.q, spec.n, spec.f
    lhs = sum(f(m * k + m * q) - f(m * k) for k in range(1, n + 1))
    rhs = sum(f(m * k + m * n) for k in range(1, q + 1)) - sum(
        f(m * k) for k in range(1, q + 1)
    )
    return IdentityCheck(
        key="telescope", args=(m, q, n), lhs=lhs, rhs=rhs, holds=lhs == rhs
    )

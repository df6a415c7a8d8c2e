"""Exact Fibonacci and Lucas numbers for any signed index.

Definitions: F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}; L_0 = 2, L_1 = 1,
same recurrence.  Negative indices follow the reflection rules

    F_{-n} = (-1)^(n-1) * F_n        L_{-n} = (-1)^n * L_n

which are applied here at the API boundary; the doubling core only ever sees
nonnegative indices.  Every function costs O(log |n|) big-integer
multiplications and is pure, so concurrent use is safe.
"""

from ._backend import BACKEND, core
from .errors import IndexCapError

__all__ = ["INDEX_CAP", "BACKEND", "fib", "lucas", "fib_lucas"]

# Hard bound on |index|.  Far beyond anything computable (F at 2^40 already
# has ~3*10^11 digits) but a named, checked limit: derived indices such as
# 3rn + 3r are validated against it instead of being trusted.
INDEX_CAP = 2**63


def _checked_magnitude(n: int) -> int:
    if not isinstance(n, int):
        raise TypeError(f"index must be an int, got {type(n).__name__}")
    m = -n if n < 0 else n
    if m > INDEX_CAP:
        raise IndexCapError(f"|{n}| exceeds INDEX_CAP = 2**63")
    return m


def fib(n: int) -> int:
    """F_n, exactly, for |n| <= INDEX_CAP."""
    m = _checked_magnitude(n)
    f = core.fib_pair(m)[0]
    if n < 0 and not m & 1:
        f = -f
    return f


def lucas(n: int) -> int:
    """L_n, exactly, computed as 2*F_{n+1} - F_n on the doubling pair."""
    m = _checked_magnitude(n)
    a, b = core.fib_pair(m)
    ell = (b << 1) - a
    if n < 0 and m & 1:
        ell = -ell
    return ell


def fib_lucas(n: int) -> tuple[int, int]:
    """(F_n, L_n) from one doubling pass.

    Identical to (fib(n), lucas(n)); exists because every closed-form
    evaluator needs both values at the same index.
    """
    m = _checked_magnitude(n)
    a, b = core.fib_pair(m)
    ell = (b << 1) - a
    if n < 0:
        if m & 1:
            ell = -ell
        else:
            a = -a
    return a, ell

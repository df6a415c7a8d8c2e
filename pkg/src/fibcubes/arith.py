"""Small exact-arithmetic helpers.

Everything in this package is integer arithmetic; these helpers keep parity
signs and exact division in one place so per-site bugs cannot creep in.
"""

import sys

from .errors import IntegrityError


def sign_pow(k: int) -> int:
    """(-1)**k for any integer k.

    Python's % yields the nonnegative residue even for negative k, so this is
    safe for exponents like rn - 1 with r, n of any sign.
    """
    return -1 if k % 2 else 1


def exact_div(numerator: int, denominator: int, context: str) -> int:
    """Divide exactly, asserting a zero remainder.

    A nonzero remainder can only arise from a coding defect (every division
    in this package is backed by a divisibility fact), so it raises
    IntegrityError rather than returning a truncated quotient.
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegrityError(
            f"{context}: {numerator} / {denominator} leaves remainder {remainder}"
        )
    return quotient


def decimal_str(x: int) -> str:
    """Decimal string of x, lifting CPython's int-to-str digit guard as needed.

    Sums at benchmark sizes run to ~10^5 digits, past the default 4300-digit
    conversion limit of Python >= 3.10.7.
    """
    if hasattr(sys, "get_int_max_str_digits"):
        # bit_length // 3 over-counts decimal digits, which is all we need
        needed = x.bit_length() // 3 + 4
        current = sys.get_int_max_str_digits()
        if current != 0 and needed > current:
            sys.set_int_max_str_digits(needed)
    return str(x)


def digit_count(x: int) -> int:
    """Number of decimal digits of |x|."""
    return len(decimal_str(-x if x < 0 else x))

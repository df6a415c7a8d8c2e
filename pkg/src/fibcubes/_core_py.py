"""Pure-Python kernel primitives.

The compiled backend (fibcubes._core_c) implements the same three functions
on GMP integers; fibcubes._backend picks whichever is available.  Keep the
two implementations semantically identical.
"""


def fib_pair(m):
    """(F_m, F_{m+1}) for m >= 0, by binary doubling.

    One step maps (F_k, F_{k+1}) to (F_2k, F_2k+1) with three big-integer
    multiplications:

        F_2k   = F_k * (2*F_{k+1} - F_k)
        F_2k+1 = F_k^2 + F_{k+1}^2
    """
    a, b = 0, 1
    for i in range(m.bit_length() - 1, -1, -1):
        c = a * ((b << 1) - a)
        d = a * a + b * b
        if (m >> i) & 1:
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def pair_step_sum(p, q, a, b, n, lucas, cube):
    """Sum n terms by advancing a Fibonacci pair with a fixed stride.

    (a, b) is (F_j, F_{j+1}) at the first summand's index j; (p, q) is
    (F_{m-1}, F_m) for the stride m, so each step is

        F_{j+m}   = q*F_{j+1} + p*F_j
        F_{j+m+1} = (p+q)*F_{j+1} + q*F_j

    The k-th term is F at the current index (or L = 2*F_{j+1} - F_j when
    ``lucas``), cubed when ``cube``.  Only additions and multiplications by
    the seed constants are used; no doubling happens here.  Works for
    negative strides and start indices since the stepping identity holds for
    all integers.
    """
    pq = p + q
    total = 0
    for _ in range(n):
        t = (b << 1) - a if lucas else a
        total += t * t * t if cube else t
        a, b = q * b + p * a, pq * b + q * a
    return total


def per_term_power_sum(stride, n, lucas, cube):
    """Literal term-by-term sum, each term recomputed from scratch.

    Sums F_{stride*k} (or L, or their cubes) for k = 1..n with one full
    fast-doubling evaluation per term.  ``stride`` must be even; a negative
    stride flips the sign of Fibonacci terms (even-index reflection) and
    leaves Lucas terms unchanged.  The caller guarantees |stride|*n stays
    under the index cap.
    """
    if stride % 2:
        raise ValueError("per_term_power_sum requires an even stride")
    s = -stride if stride < 0 else stride
    total = 0
    for k in range(1, n + 1):
        a, b = fib_pair(s * k)
        t = (b << 1) - a if lucas else a
        total += t * t * t if cube else t
    if stride < 0 and not lucas:
        total = -total
    return total

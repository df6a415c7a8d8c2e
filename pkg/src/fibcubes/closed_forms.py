"""Factored closed forms for the four sum families.

Each evaluator computes S = sum_{k=1..n} of F_{2rk}, L_{2rk}, F_{2rk}^3 or
L_{2rk}^3 in O(log) big-integer operations: a constant number of kernel
calls, a fixed product of sequence values, and one exact division by the
family's multiplier (F_r, L_r, F_3r, L_3r, 5 F_3r, or the constants 4 / 8 in
the special cases).  The branch taken depends on the parities of r and n:

  cube sums, r odd (divide by L_3r):
      n even:  F_rn^2 L_rn+r^2 (L_rn F_rn+r + F_r)            [Fibonacci]
      n odd:   L_rn^2 F_rn+r^2 (F_rn L_rn+r + F_r)
      n even:  5 F_rn F_rn+r (L_rn L_rn+r L_2rn+r + 4(L_2r + 1))   [Lucas]
      n odd:   L_rn L_rn+r (5 F_rn F_rn+r L_2rn+r + 4(L_2r + 1))
  cube sums, r even (divide by F_3r):
      F_rn^2 F_rn+r^2 (L_rn L_rn+r + L_r)                     [Fibonacci]
      F_rn L_rn+r (5 L_rn F_rn+r F_2rn+r + 4(L_2r + 1))       [Lucas]

plus variant Fibonacci factorizations and first-power analogues; see each
function.  Results carry the factor list and the exact-division certificate
so callers can re-verify product = divisor * value.

r = 0 degenerates (the divisors vanish): those sums are computed directly
from L_0 = 2 / F_0 = 0 and flagged with the "degenerate" branch.  Negative r
is evaluated with the formulas as written, indices resolved by kernel
reflection.  n must be >= 0.
"""

from dataclasses import dataclass
from enum import Enum
from math import prod

from .arith import decimal_str, exact_div
from .errors import IntegrityError
from .kernel import fib_lucas

__all__ = [
    "SumFamily",
    "Branch",
    "SpecialCase",
    "SumSpec",
    "FactoredForm",
    "first_power_fib_sum",
    "first_power_lucas_sum",
    "fib_cube_sum",
    "fib_cube_sum_variant",
    "lucas_cube_sum",
    "special_case_sum",
    "evaluate",
]


class SumFamily(str, Enum):
    FIB_CUBE = "fib-cube"
    LUCAS_CUBE = "lucas-cube"
    FIB_FIRST = "fib-first"
    LUCAS_FIRST = "lucas-first"


class Branch(str, Enum):
    R_EVEN = "r-even"
    R_ODD_N_EVEN = "r-odd-n-even"
    R_ODD_N_ODD = "r-odd-n-odd"
    DEGENERATE = "degenerate"


class SpecialCase(str, Enum):
    """The four fixed-stride special cases (r = 1 and r = 2)."""

    EQ1 = "eq1"   # 4 * sum F_{2k}^3
    EQ2 = "eq2"   # 8 * sum F_{4k}^3
    EQ3 = "eq3"   # 4 * sum L_{2k}^3
    EQ4 = "eq4"   # 8 * sum L_{4k}^3


@dataclass(frozen=True)
class SumSpec:
    family: SumFamily
    r: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")


@dataclass(frozen=True)
class FactoredForm:
    """A sum value together with its factored-product certificate.

    Invariants: product == divisor * value, and product equals the product
    of the recorded factor values (scalar multipliers are recorded as
    factors too, so the factor list is the complete factorization).
    """

    spec: SumSpec
    value: int
    divisor: int
    product: int
    factors: tuple  # of (label, value)
    branch: Branch

    def to_json_dict(self) -> dict:
        return {
            "family": self.spec.family.value,
            "r": self.spec.r,
            "n": self.spec.n,
            "branch": self.branch.value,
            "value": decimal_str(self.value),
            "divisor": decimal_str(self.divisor),
            "factors": [
                {"label": label, "value": decimal_str(v)}
                for label, v in self.factors
            ],
        }


def _build(spec, branch, divisor, factors):
    """Assemble a FactoredForm, certifying the exact division.

    For n = 0 a factor F_{r*0} = F_0 = 0 must annihilate the product; that
    the empty sum really comes out as 0 is asserted here, not assumed.
    """
    factors = tuple(factors)
    product = prod(v for _, v in factors)
    value = exact_div(
        product, divisor, f"{spec.family.value}(r={spec.r}, n={spec.n})"
    )
    if spec.n == 0 and value != 0:
        raise IntegrityError(
            f"{spec.family.value}(r={spec.r}, n=0): empty sum evaluated to {value}"
        )
    return FactoredForm(
        spec=spec, value=value, divisor=divisor, product=product,
        factors=factors, branch=branch,
    )


def _degenerate(spec):
    # r = 0: every term is F_0 = 0 or L_0 = 2, so the sums are 0, 0, 8n, 2n.
    n = spec.n
    value = {
        SumFamily.FIB_CUBE: 0,
        SumFamily.FIB_FIRST: 0,
        SumFamily.LUCAS_CUBE: 8 * n,
        SumFamily.LUCAS_FIRST: 2 * n,
    }[spec.family]
    return FactoredForm(
        spec=spec, value=value, divisor=1, product=value,
        factors=((_DEGENERATE_LABELS[spec.family], value),),
        branch=Branch.DEGENERATE,
    )


_DEGENERATE_LABELS = {
    SumFamily.FIB_CUBE: "0",
    SumFamily.FIB_FIRST: "0",
    SumFamily.LUCAS_CUBE: "8n",
    SumFamily.LUCAS_FIRST: "2n",
}


def first_power_fib_sum(r: int, n: int) -> FactoredForm:
    """sum_{k=1..n} F_{2rk}.

    r even: F_r * S = F_rn F_rn+r.
    r odd:  L_r * S = F_rn L_rn+r (n even) or L_rn F_rn+r (n odd).
    """
    spec = SumSpec(SumFamily.FIB_FIRST, r, n)
    if r == 0:
        return _degenerate(spec)
    f_rn, l_rn = fib_lucas(r * n)
    f_rn1, l_rn1 = fib_lucas(r * n + r)
    f_r, l_r = fib_lucas(r)
    if r % 2 == 0:
        return _build(spec, Branch.R_EVEN, f_r,
                      [("F_{rn}", f_rn), ("F_{rn+r}", f_rn1)])
    if n % 2 == 0:
        return _build(spec, Branch.R_ODD_N_EVEN, l_r,
                      [("F_{rn}", f_rn), ("L_{rn+r}", l_rn1)])
    return _build(spec, Branch.R_ODD_N_ODD, l_r,
                  [("L_{rn}", l_rn), ("F_{rn+r}", f_rn1)])


def first_power_lucas_sum(r: int, n: int) -> FactoredForm:
    """sum_{k=1..n} L_{2rk}.

    r even: F_r * S = F_rn L_rn+r.
    r odd:  L_r * S = 5 F_rn F_rn+r (n even) or L_rn L_rn+r (n odd).
    """
    spec = SumSpec(SumFamily.LUCAS_FIRST, r, n)
    if r == 0:
        return _degenerate(spec)
    f_rn, l_rn = fib_lucas(r * n)
    f_rn1, l_rn1 = fib_lucas(r * n + r)
    f_r, l_r = fib_lucas(r)
    if r % 2 == 0:
        return _build(spec, Branch.R_EVEN, f_r,
                      [("F_{rn}", f_rn), ("L_{rn+r}", l_rn1)])
    if n % 2 == 0:
        return _build(spec, Branch.R_ODD_N_EVEN, l_r,
                      [("5", 5), ("F_{rn}", f_rn), ("F_{rn+r}", f_rn1)])
    return _build(spec, Branch.R_ODD_N_ODD, l_r,
                  [("L_{rn}", l_rn), ("L_{rn+r}", l_rn1)])


def fib_cube_sum(r: int, n: int) -> FactoredForm:
    """sum_{k=1..n} F_{2rk}^3, main factorization (see module docstring)."""
    spec = SumSpec(SumFamily.FIB_CUBE, r, n)
    if r == 0:
        return _degenerate(spec)
    f_rn, l_rn = fib_lucas(r * n)
    f_rn1, l_rn1 = fib_lucas(r * n + r)
    f_r, l_r = fib_lucas(r)
    f_3r, l_3r = fib_lucas(3 * r)
    if r % 2 == 0:
        return _build(spec, Branch.R_EVEN, f_3r,
                      [("F_{rn}^2", f_rn * f_rn),
                       ("F_{rn+r}^2", f_rn1 * f_rn1),
                       ("L_{rn}L_{rn+r}+L_r", l_rn * l_rn1 + l_r)])
    if n % 2 == 0:
        return _build(spec, Branch.R_ODD_N_EVEN, l_3r,
                      [("F_{rn}^2", f_rn * f_rn),
                       ("L_{rn+r}^2", l_rn1 * l_rn1),
                       ("L_{rn}F_{rn+r}+F_r", l_rn * f_rn1 + f_r)])
    return _build(spec, Branch.R_ODD_N_ODD, l_3r,
                  [("L_{rn}^2", l_rn * l_rn),
                   ("F_{rn+r}^2", f_rn1 * f_rn1),
                   ("F_{rn}L_{rn+r}+F_r", f_rn * l_rn1 + f_r)])


def fib_cube_sum_variant(r: int, n: int) -> FactoredForm:
    """sum_{k=1..n} F_{2rk}^3 via the alternative factorization.

    r odd,  n even: L_3r * S = F_rn L_rn+r (L_rn F_rn+r F_2rn+r - 2 F_r^2)
    r odd,  n odd:  L_3r * S = L_rn F_rn+r (F_rn L_rn+r F_2rn+r - 2 F_r^2)
    r even:       5 F_3r * S = F_rn F_rn+r (L_rn L_rn+r L_2rn+r - 2 L_r^2)

    Same value as fib_cube_sum; for r even the divisor picks up the factor 5
    and the division is still exact.
    """
    spec = SumSpec(SumFamily.FIB_CUBE, r, n)
    if r == 0:
        return _degenerate(spec)
    f_rn, l_rn = fib_lucas(r * n)
    f_rn1, l_rn1 = fib_lucas(r * n + r)
    f_r, l_r = fib_lucas(r)
    f_3r, l_3r = fib_lucas(3 * r)
    f_mid, l_mid = fib_lucas(2 * r * n + r)
    if r % 2 == 0:
        return _build(spec, Branch.R_EVEN, 5 * f_3r,
                      [("F_{rn}", f_rn), ("F_{rn+r}", f_rn1),
                       ("L_{rn}L_{rn+r}L_{2rn+r}-2L_r^2",
                        l_rn * l_rn1 * l_mid - 2 * l_r * l_r)])
    if n % 2 == 0:
        return _build(spec, Branch.R_ODD_N_EVEN, l_3r,
                      [("F_{rn}", f_rn), ("L_{rn+r}", l_rn1),
                       ("L_{rn}F_{rn+r}F_{2rn+r}-2F_r^2",
                        l_rn * f_rn1 * f_mid - 2 * f_r * f_r)])
    return _build(spec, Branch.R_ODD_N_ODD, l_3r,
                  [("L_{rn}", l_rn), ("F_{rn+r}", f_rn1),
                   ("F_{rn}L_{rn+r}F_{2rn+r}-2F_r^2",
                    f_rn * l_rn1 * f_mid - 2 * f_r * f_r)])


def lucas_cube_sum(r: int, n: int) -> FactoredForm:
    """sum_{k=1..n} L_{2rk}^3 (see module docstring for the branches)."""
    spec = SumSpec(SumFamily.LUCAS_CUBE, r, n)
    if r == 0:
        return _degenerate(spec)
    f_rn, l_rn = fib_lucas(r * n)
    f_rn1, l_rn1 = fib_lucas(r * n + r)
    l_2r = fib_lucas(2 * r)[1]
    f_3r, l_3r = fib_lucas(3 * r)
    f_mid, l_mid = fib_lucas(2 * r * n + r)
    tail = 4 * (l_2r + 1)
    if r % 2 == 0:
        return _build(spec, Branch.R_EVEN, f_3r,
                      [("F_{rn}", f_rn), ("L_{rn+r}", l_rn1),
                       ("5L_{rn}F_{rn+r}F_{2rn+r}+4(L_{2r}+1)",
                        5 * l_rn * f_rn1 * f_mid + tail)])
    if n % 2 == 0:
        return _build(spec, Branch.R_ODD_N_EVEN, l_3r,
                      [("5", 5), ("F_{rn}", f_rn), ("F_{rn+r}", f_rn1),
                       ("L_{rn}L_{rn+r}L_{2rn+r}+4(L_{2r}+1)",
                        l_rn * l_rn1 * l_mid + tail)])
    return _build(spec, Branch.R_ODD_N_ODD, l_3r,
                  [("L_{rn}", l_rn), ("L_{rn+r}", l_rn1),
                   ("5F_{rn}F_{rn+r}L_{2rn+r}+4(L_{2r}+1)",
                    5 * f_rn * f_rn1 * l_mid + tail)])


def special_case_sum(which: SpecialCase, n: int) -> FactoredForm:
    """The fixed-stride special cases, as independent cross-checks.

    EQ1: 4 * sum F_{2k}^3 = F_n^2 L_n+1^2 F_n-1 L_n+2   (n even)
                            L_n^2 F_n+1^2 L_n-1 F_n+2   (n odd)
    EQ2: 8 * sum F_{4k}^3 = F_2n^2 F_2n+2^2 (L_4n+2 + 6)
    EQ3: 4 * sum L_{2k}^3 = 5 F_n F_n+1 (L_n L_n+1 L_2n+1 + 16)   (n even)
                            L_n L_n+1 (5 F_n F_n+1 L_2n+1 + 16)   (n odd)
    EQ4: 8 * sum L_{4k}^3 = F_2n L_2n+2 (5 L_2n F_2n+2 F_4n+2 + 32)

    Each must agree with the general evaluator at r = 1 (EQ1, EQ3) or r = 2
    (EQ2, EQ4); the factors here follow the special-case shapes, not the
    general ones.
    """
    which = SpecialCase(which)
    if which is SpecialCase.EQ1:
        spec = SumSpec(SumFamily.FIB_CUBE, 1, n)
        f_n, l_n = fib_lucas(n)
        f_n1, l_n1 = fib_lucas(n + 1)
        if n % 2 == 0:
            return _build(spec, Branch.R_ODD_N_EVEN, 4,
                          [("F_n^2", f_n * f_n), ("L_{n+1}^2", l_n1 * l_n1),
                           ("F_{n-1}", fib_lucas(n - 1)[0]),
                           ("L_{n+2}", fib_lucas(n + 2)[1])])
        return _build(spec, Branch.R_ODD_N_ODD, 4,
                      [("L_n^2", l_n * l_n), ("F_{n+1}^2", f_n1 * f_n1),
                       ("L_{n-1}", fib_lucas(n - 1)[1]),
                       ("F_{n+2}", fib_lucas(n + 2)[0])])
    if which is SpecialCase.EQ2:
        spec = SumSpec(SumFamily.FIB_CUBE, 2, n)
        f_2n = fib_lucas(2 * n)[0]
        f_2n2 = fib_lucas(2 * n + 2)[0]
        l_4n2 = fib_lucas(4 * n + 2)[1]
        return _build(spec, Branch.R_EVEN, 8,
                      [("F_{2n}^2", f_2n * f_2n), ("F_{2n+2}^2", f_2n2 * f_2n2),
                       ("L_{4n+2}+6", l_4n2 + 6)])
    if which is SpecialCase.EQ3:
        spec = SumSpec(SumFamily.LUCAS_CUBE, 1, n)
        f_n, l_n = fib_lucas(n)
        f_n1, l_n1 = fib_lucas(n + 1)
        l_2n1 = fib_lucas(2 * n + 1)[1]
        if n % 2 == 0:
            return _build(spec, Branch.R_ODD_N_EVEN, 4,
                          [("5", 5), ("F_n", f_n), ("F_{n+1}", f_n1),
                           ("L_nL_{n+1}L_{2n+1}+16", l_n * l_n1 * l_2n1 + 16)])
        return _build(spec, Branch.R_ODD_N_ODD, 4,
                      [("L_n", l_n), ("L_{n+1}", l_n1),
                       ("5F_nF_{n+1}L_{2n+1}+16", 5 * f_n * f_n1 * l_2n1 + 16)])
    spec = SumSpec(SumFamily.LUCAS_CUBE, 2, n)
    f_2n, l_2n = fib_lucas(2 * n)
    f_2n2, l_2n2 = fib_lucas(2 * n + 2)
    f_4n2 = fib_lucas(4 * n + 2)[0]
    return _build(spec, Branch.R_EVEN, 8,
                  [("F_{2n}", f_2n), ("L_{2n+2}", l_2n2),
                   ("5L_{2n}F_{2n+2}F_{4n+2}+32", 5 * l_2n * f_2n2 * f_4n2 + 32)])


_EVALUATORS = {
    SumFamily.FIB_CUBE: fib_cube_sum,
    SumFamily.LUCAS_CUBE: lucas_cube_sum,
    SumFamily.FIB_FIRST: first_power_fib_sum,
    SumFamily.LUCAS_FIRST: first_power_lucas_sum,
}


def evaluate(spec: SumSpec) -> FactoredForm:
    """Dispatch a SumSpec to its family's evaluator."""
    return _EVALUATORS[SumFamily(spec.family)](spec.r, spec.n)

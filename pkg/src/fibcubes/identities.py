"""Machine-checkable catalog of Fibonacci/Lucas identities.

Two groups:

* twelve auxiliary identities: product-to-sum rules, double- and triple-index
  expansions, the norm relation 5F^2 - L^2 = +-4, and two square-difference
  factorizations.  Both sides are plain integer expressions.

* eight ratio identities: quotients such as F(3rn) F(3rn+3r) / (F(rn) F(rn+r))
  equal to a polynomial in sequence values.  The left side is evaluated as an
  exact quotient (zero-remainder division), which checks the divisibility
  fact the closed forms rely on, not just the cross-multiplied equality.
  Each ratio identity comes in two equivalent right-hand-side versions, the
  product form and the square form; EQUIVALENT_RHS_PAIRS lists the pairings.

Keys are stable structural strings (never equation numbers); the ``anchor``
field holds the identity's canonical formula text in subscript notation so a
catalog export is self-describing.
"""

import time
from dataclasses import dataclass
from itertools import product
from typing import Callable, NamedTuple, Optional

from .arith import exact_div, sign_pow as s
from .errors import IntegrityError, ZeroDenominatorError
from .kernel import fib as F, lucas as L
from .report import VerificationReport

__all__ = [
    "Identity",
    "IdentityCheck",
    "CatalogEntry",
    "EQUIVALENT_RHS_PAIRS",
    "get_identity",
    "list_identities",
    "check_identity",
    "sweep_identity",
    "catalog_json",
]


@dataclass(frozen=True)
class Identity:
    key: str
    arity: int
    arg_names: tuple
    formula: str
    anchor: str
    rhs_fn: Callable
    lhs_fn: Optional[Callable] = None     # auxiliary identities
    numer_fn: Optional[Callable] = None   # ratio identities
    denom_fn: Optional[Callable] = None   # -> [(factor label, value)]

    @property
    def is_ratio(self) -> bool:
        return self.numer_fn is not None

    def vanishing_factor(self, args):
        """Label of a zero denominator factor, or None when well-defined."""
        if not self.is_ratio:
            return None
        for label, value in self.denom_fn(*args):
            if value == 0:
                return label
        return None

    def lhs(self, args) -> int:
        if not self.is_ratio:
            return self.lhs_fn(*args)
        denominator = 1
        for label, value in self.denom_fn(*args):
            if value == 0:
                raise ZeroDenominatorError(self.key, label, args)
            denominator *= value
        return exact_div(self.numer_fn(*args), denominator, self.key)

    def rhs(self, args) -> int:
        return self.rhs_fn(*args)


@dataclass(frozen=True)
class IdentityCheck:
    key: str
    args: tuple
    lhs: int
    rhs: int
    holds: bool


class CatalogEntry(NamedTuple):
    key: str
    arity: int
    formula: str
    anchor: str


def _aux(key, arg_names, formula, anchor, lhs, rhs):
    return Identity(
        key=key, arity=len(arg_names), arg_names=arg_names,
        formula=formula, anchor=anchor, lhs_fn=lhs, rhs_fn=rhs,
    )


def _ratio(key, formula, anchor, numer, denom, rhs):
    return Identity(
        key=key, arity=2, arg_names=("r", "n"),
        formula=formula, anchor=anchor,
        numer_fn=numer, denom_fn=denom, rhs_fn=rhs,
    )


_CATALOG = (
    # -- auxiliary identities ------------------------------------------------
    _aux("prod-5FF", ("u", "v"),
         "L(u+v) - (-1)^v L(u-v) = 5 F(u) F(v)",
         "L_{u + v} - (-1)^vL_{u-v}=5F_uF_v",
         lambda u, v: L(u + v) - s(v) * L(u - v),
         lambda u, v: 5 * F(u) * F(v)),
    _aux("prod-LL", ("u", "v"),
         "L(u+v) + (-1)^v L(u-v) = L(u) L(v)",
         "L_{u + v} + (-1)^vL_{u-v}=L_uL_v",
         lambda u, v: L(u + v) + s(v) * L(u - v),
         lambda u, v: L(u) * L(v)),
    _aux("prod-FL", ("u", "v"),
         "F(u+v) - (-1)^v F(u-v) = F(v) L(u)",
         "F_{u + v} - (-1)^vF_{u-v}=F_vL_u",
         lambda u, v: F(u + v) - s(v) * F(u - v),
         lambda u, v: F(v) * L(u)),
    _aux("prod-LF", ("u", "v"),
         "F(u+v) + (-1)^v F(u-v) = L(v) F(u)",
         "F_{u + v} + (-1)^vF_{u-v}=L_vF_u",
         lambda u, v: F(u + v) + s(v) * F(u - v),
         lambda u, v: L(v) * F(u)),
    _aux("double-F", ("u",),
         "F(2u) = F(u) L(u)",
         "F_{2u}=F_uL_u",
         lambda u: F(2 * u),
         lambda u: F(u) * L(u)),
    _aux("triple-F", ("u",),
         "F(3u) = 5 F(u)^3 + 3 (-1)^u F(u)",
         "F_{3u}=5F_u^3+3(-1)^uF_u",
         lambda u: F(3 * u),
         lambda u: 5 * F(u) ** 3 + 3 * s(u) * F(u)),
    _aux("triple-L", ("u",),
         "L(3u) = L(u)^3 - 3 (-1)^u L(u)",
         "L_{3u}=L_u^3-3(-1)^uL_u",
         lambda u: L(3 * u),
         lambda u: L(u) ** 3 - 3 * s(u) * L(u)),
    _aux("five-square", ("u",),
         "5 F(u)^2 - L(u)^2 = (-1)^(u-1) 4",
         "5F_u^2-L_u^2=(-1)^{u-1}4",
         lambda u: 5 * F(u) ** 2 - L(u) ** 2,
         lambda u: 4 * s(u - 1)),
    _aux("double-L-L", ("u",),
         "L(2u) = L(u)^2 + (-1)^(u-1) 2",
         "L_{2u}=L_u^2+(-1)^{u-1}2",
         lambda u: L(2 * u),
         lambda u: L(u) ** 2 + 2 * s(u - 1)),
    _aux("double-L-F", ("u",),
         "L(2u) = 5 F(u)^2 + (-1)^u 2",
         "L_{2u}=5F_u^2+(-1)^u2",
         lambda u: L(2 * u),
         lambda u: 5 * F(u) ** 2 + 2 * s(u)),
    _aux("sq-diff-F", ("u", "v"),
         "F(u)^2 + (-1)^(u+v-1) F(v)^2 = F(u-v) F(u+v)",
         "F_u^2 + (-1)^{u+v-1}F_v^2=F_{u-v}F_{u+v}",
         lambda u, v: F(u) ** 2 + s(u + v - 1) * F(v) ** 2,
         lambda u, v: F(u - v) * F(u + v)),
    _aux("sq-diff-L", ("u", "v"),
         "L(u)^2 + (-1)^(u+v-1) L(v)^2 = 5 F(u-v) F(u+v)",
         "L_u^2 + (-1)^{u+v-1}L_v^2=5F_{u-v}F_{u+v}",
         lambda u, v: L(u) ** 2 + s(u + v - 1) * L(v) ** 2,
         lambda u, v: 5 * F(u - v) * F(u + v)),
    # -- ratio identities, product-form right-hand sides ---------------------
    _ratio("ratio-FF",
           "F(3rn) F(3rn+3r) / (F(rn) F(rn+r)) = "
           "L(rn) L(rn+r) L(2rn+r) + L(2r) + (-1)^(r-1)",
           "L_{rn}L_{rn+r}L_{2rn+r}+L_{2r}+(-1)^{r-1}",
           lambda r, n: F(3 * r * n) * F(3 * r * n + 3 * r),
           lambda r, n: [("F_{rn}", F(r * n)), ("F_{rn+r}", F(r * n + r))],
           lambda r, n: L(r * n) * L(r * n + r) * L(2 * r * n + r)
           + L(2 * r) + s(r - 1)),
    _ratio("ratio-LL",
           "L(3rn) L(3rn+3r) / (L(rn) L(rn+r)) = "
           "5 F(rn) F(rn+r) L(2rn+r) + L(2r) + (-1)^(r-1)",
           "5F_{rn}F_{rn+r}L_{2rn+r}+L_{2r}+(-1)^{r-1}",
           lambda r, n: L(3 * r * n) * L(3 * r * n + 3 * r),
           lambda r, n: [("L_{rn}", L(r * n)), ("L_{rn+r}", L(r * n + r))],
           lambda r, n: 5 * F(r * n) * F(r * n + r) * L(2 * r * n + r)
           + L(2 * r) + s(r - 1)),
    _ratio("ratio-LF",
           "L(3rn) F(3rn+3r) / (L(rn) F(rn+r)) = "
           "5 F(rn) L(rn+r) F(2rn+r) + L(2r) + (-1)^r",
           "5F_{rn}L_{rn+r}F_{2rn+r}+L_{2r}+(-1)^r",
           lambda r, n: L(3 * r * n) * F(3 * r * n + 3 * r),
           lambda r, n: [("L_{rn}", L(r * n)), ("F_{rn+r}", F(r * n + r))],
           lambda r, n: 5 * F(r * n) * L(r * n + r) * F(2 * r * n + r)
           + L(2 * r) + s(r)),
    _ratio("ratio-FL",
           "F(3rn) L(3rn+3r) / (F(rn) L(rn+r)) = "
           "5 L(rn) F(rn+r) F(2rn+r) + L(2r) + (-1)^r",
           "5L_{rn}F_{rn+r}F_{2rn+r}+L_{2r}+(-1)^r",
           lambda r, n: F(3 * r * n) * L(3 * r * n + 3 * r),
           lambda r, n: [("F_{rn}", F(r * n)), ("L_{rn+r}", L(r * n + r))],
           lambda r, n: 5 * L(r * n) * F(r * n + r) * F(2 * r * n + r)
           + L(2 * r) + s(r)),
    # -- ratio identities, square-form right-hand sides ----------------------
    _ratio("ratio-FF-sq",
           "F(3rn) F(3rn+3r) / (F(rn) F(rn+r)) = "
           "L(2rn+r)^2 + (-1)^(nr) L(rn+r)^2 + (-1)^((n-1)r) L(rn)^2 "
           "+ L(r)^2 + (-1)^(r-1) 7",
           "L_{2rn + r}^2  + ( - 1)^{nr} L_{rn + r}^2  "
           "+ ( - 1)^{(n - 1)r} L_{rn}^2  + L_r^2  + ( - 1)^{r - 1} 7",
           lambda r, n: F(3 * r * n) * F(3 * r * n + 3 * r),
           lambda r, n: [("F_{rn}", F(r * n)), ("F_{rn+r}", F(r * n + r))],
           lambda r, n: L(2 * r * n + r) ** 2
           + s(n * r) * L(r * n + r) ** 2
           + s((n - 1) * r) * L(r * n) ** 2
           + L(r) ** 2 + 7 * s(r - 1)),
    _ratio("ratio-LL-sq",
           "L(3rn) L(3rn+3r) / (L(rn) L(rn+r)) = "
           "L(2rn+r)^2 + (-1)^(nr-1) L(rn+r)^2 - (-1)^((n-1)r) L(rn)^2 "
           "+ L(r)^2 + (-1)^r",
           "L_{2rn + r}^2  + ( - 1)^{nr-1} L_{rn + r}^2  "
           "- ( - 1)^{(n - 1)r} L_{rn}^2  + L_r^2  + ( - 1)^r",
           lambda r, n: L(3 * r * n) * L(3 * r * n + 3 * r),
           lambda r, n: [("L_{rn}", L(r * n)), ("L_{rn+r}", L(r * n + r))],
           lambda r, n: L(2 * r * n + r) ** 2
           + s(n * r - 1) * L(r * n + r) ** 2
           - s((n - 1) * r) * L(r * n) ** 2
           + L(r) ** 2 + s(r)),
    _ratio("ratio-LF-sq",
           "L(3rn) F(3rn+3r) / (L(rn) F(rn+r)) = "
           "5 F(2rn+r)^2 + (-1)^(nr-1) 5 F(rn+r)^2 + (-1)^((n-1)r) 5 F(rn)^2 "
           "+ 5 F(r)^2 + (-1)^r 3",
           "5F_{2rn + r}^2  + ( - 1)^{nr - 1} 5F_{rn + r}^2  "
           "+ ( - 1)^{(n - 1)r} 5F_{rn}^2  + 5F_r^2  + ( - 1)^r 3",
           lambda r, n: L(3 * r * n) * F(3 * r * n + 3 * r),
           lambda r, n: [("L_{rn}", L(r * n)), ("F_{rn+r}", F(r * n + r))],
           lambda r, n: 5 * F(2 * r * n + r) ** 2
           + 5 * s(n * r - 1) * F(r * n + r) ** 2
           + 5 * s((n - 1) * r) * F(r * n) ** 2
           + 5 * F(r) ** 2 + 3 * s(r)),
    _ratio("ratio-FL-sq",
           "F(3rn) L(3rn+3r) / (F(rn) L(rn+r)) = "
           "5 F(2rn+r)^2 + (-1)^(nr) 5 F(rn+r)^2 - (-1)^((n-1)r) 5 F(rn)^2 "
           "+ 5 F(r)^2 + (-1)^r 3",
           "5F_{2rn + r}^2  + ( - 1)^{nr} 5F_{rn + r}^2  "
           "- ( - 1)^{(n - 1)r} 5F_{rn}^2  + 5F_r^2  + ( - 1)^r 3",
           lambda r, n: F(3 * r * n) * L(3 * r * n + 3 * r),
           lambda r, n: [("F_{rn}", F(r * n)), ("L_{rn+r}", L(r * n + r))],
           lambda r, n: 5 * F(2 * r * n + r) ** 2
           + 5 * s(n * r) * F(r * n + r) ** 2
           - 5 * s((n - 1) * r) * F(r * n) ** 2
           + 5 * F(r) ** 2 + 3 * s(r)),
)

_BY_KEY = {identity.key: identity for identity in _CATALOG}
assert len(_BY_KEY) == len(_CATALOG), "duplicate identity keys"

# Product-form / square-form pairs whose right-hand sides must agree wherever
# both are defined (they share numerator and denominator by construction).
EQUIVALENT_RHS_PAIRS = (
    ("ratio-FF", "ratio-FF-sq"),
    ("ratio-LL", "ratio-LL-sq"),
    ("ratio-LF", "ratio-LF-sq"),
    ("ratio-FL", "ratio-FL-sq"),
)


def get_identity(key: str) -> Identity:
    try:
        return _BY_KEY[key]
    except KeyError:
        raise ValueError(f"unknown identity key: {key!r}") from None


def list_identities() -> list[CatalogEntry]:
    """The full catalog in stable order: auxiliary identities, then ratios."""
    return [
        CatalogEntry(i.key, i.arity, i.formula, i.anchor) for i in _CATALOG
    ]


def catalog_json() -> list[dict]:
    """Catalog as JSON-ready dicts (CLI export format)."""
    return [
        {"key": i.key, "arity": i.arity, "formula": i.formula, "anchor": i.anchor}
        for i in _CATALOG
    ]


def _validated(key, args):
    identity = get_identity(key)
    args = tuple(args)
    if len(args) != identity.arity:
        raise ValueError(
            f"{key} takes {identity.arity} argument(s), got {len(args)}"
        )
    return identity, args


def check_identity(key: str, args) -> IdentityCheck:
    """Evaluate both sides at ``args`` and report whether they agree.

    Raises ZeroDenominatorError when a ratio identity's denominator vanishes
    and IntegrityError if the quotient is not exact (an implementation bug).
    """
    identity, args = _validated(key, args)
    lhs = identity.lhs(args)
    rhs = identity.rhs(args)
    return IdentityCheck(key=key, args=args, lhs=lhs, rhs=rhs, holds=lhs == rhs)


def sweep_identity(key: str, ranges, fail_fast: bool = False) -> VerificationReport:
    """Check an identity over an inclusive grid, one (lo, hi) range per argument.

    Points violating a precondition are skipped and counted.  Integrity
    errors (non-exact quotients) are collected as mismatches rather than
    raised, so a sweep always yields a complete report.
    """
    identity = get_identity(key)
    if len(ranges) != identity.arity:
        raise ValueError(
            f"{key} needs {identity.arity} range(s), got {len(ranges)}"
        )
    axes = [range(lo, hi + 1) for lo, hi in ranges]
    report = VerificationReport(
        subject=key,
        grid={name: [lo, hi] for name, (lo, hi) in zip(identity.arg_names, ranges)},
    )
    start = time.perf_counter()
    for point in product(*axes):
        if identity.vanishing_factor(point) is not None:
            report.points_skipped += 1
            continue
        params = dict(zip(identity.arg_names, point))
        rhs = identity.rhs(point)
        try:
            lhs = identity.lhs(point)
        except IntegrityError as exc:
            report.points_checked += 1
            report.mismatches.append(
                {"params": params, "expected": str(rhs), "got": f"integrity error: {exc}"}
            )
            if fail_fast:
                break
            continue
        report.points_checked += 1
        if lhs != rhs:
            report.mismatches.append(
                {"params": params, "expected": str(rhs), "got": str(lhs)}
            )
            if fail_fast:
                break
    report.wall_time_s = time.perf_counter() - start
    return report

"""Exception types shared across the package."""


class IndexCapError(ValueError):
    """A sequence index exceeds the documented magnitude cap."""


class ZeroDenominatorError(ValueError):
    """A quotient identity was requested where a denominator factor vanishes.

    Carries the label of the vanishing factor, e.g. "F_{rn}".
    """

    def __init__(self, key, factor, args):
        self.key = key
        self.factor = factor
        self.args = tuple(args)
        super().__init__(
            f"{key}{self.args}: denominator factor {factor} is zero"
        )


class IntegrityError(ArithmeticError):
    """An exact-division certificate failed (nonzero remainder).

    This is never expected on valid inputs; it signals an implementation bug,
    not a user error.
    """

"""Exception types shared across the package."""


class WalcError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(WalcError):
    """Malformed user input (partition string, level fraction, flags)."""


class PoleError(WalcError, ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


class ZeroPolynomialError(WalcError):
    """Root extraction was requested for the zero polynomial."""


class DimensionError(WalcError):
    """A weight vector has the wrong number of coordinates for its rank."""


class CriticalLevelError(WalcError, ZeroDivisionError):
    """A Sugawara-type construction was requested at a critical level."""


class NotConformalError(WalcError):
    """A collapse analysis was requested at a level where the central charges differ."""

    def __init__(self, k, w_charge, coset_charge):
        self.k = k
        self.w_charge = w_charge
        self.coset_charge = coset_charge
        super().__init__(
            f"level {k} is not conformal: W-algebra central charge {w_charge} "
            f"!= affine coset central charge {coset_charge}"
        )


class HypothesisError(WalcError):
    """A precondition of a decomposition request does not hold."""


class UnsupportedFamilyError(WalcError):
    """The requested analysis is only available for hook or rectangular nilpotents."""

"""Exception hierarchy shared by every ncqosc subpackage."""

from typing import Optional


class NcqoscError(Exception):
    """Base class for all ncqosc errors."""


class ConfigError(NcqoscError, ValueError):
    """A scenario config could not be read or is malformed."""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        if path is not None:
            message = f"{path}: {message}"
        super().__init__(message)


class UnknownCase(NcqoscError, ValueError):
    """A case identifier does not name a catalog case."""


class ConstraintViolated(NcqoscError, ValueError):
    """An Ermakov-Pinney family constraint does not hold."""

    def __init__(self, equation: str, lhs: float, rhs: float, mismatch: float):
        self.equation = equation
        self.lhs = lhs
        self.rhs = rhs
        self.mismatch = mismatch
        super().__init__(
            f"constraint {equation} violated: lhs={lhs!r}, rhs={rhs!r}, "
            f"relative mismatch={mismatch:.3e}"
        )


class NonPositiveDamping(NcqoscError, ValueError):
    def __init__(self, t: float, value: float):
        self.t = t
        self.value = value
        super().__init__(f"damping factor f(t) = {value!r} <= 0 at t = {t!r}")


class SingularDenominator(NcqoscError, ValueError):
    def __init__(self, quantity: str, t: Optional[float] = None):
        self.quantity = quantity
        self.t = t
        where = "" if t is None else f" at t = {t!r}"
        super().__init__(f"{quantity} vanishes{where}")


class BlowUp(NcqoscError, RuntimeError):
    """Numerical integration could not be continued."""

    def __init__(self, last_valid_time: float, reason: str):
        self.last_valid_time = last_valid_time
        self.reason = reason
        super().__init__(f"{reason} (last valid time {last_valid_time!r})")


class NegativeRadicand(NcqoscError, ValueError):
    def __init__(self, t: float, value: float, radicand: str = "radicand"):
        self.t = t
        self.value = value
        self.radicand = radicand
        super().__init__(f"{radicand} = {value!r} < 0 at t = {t!r}")


class DegenerateQuadraticWarning(UserWarning):
    """The quadratic coefficient vanished and the linear root was used."""


class DegenerateQuadratic(NcqoscError, ValueError):
    """Both the quadratic and the linear coefficient vanished."""


class NotApplicableCase(NcqoscError, ValueError):
    pass


class OutOfCatalog(NcqoscError, ValueError):
    """No elementary closed form is implemented for this case."""


class DomainError(NcqoscError, ValueError):
    def __init__(self, subterm: str, detail: str = ""):
        self.subterm = subterm
        message = f"closed form leaves its real domain in {subterm}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class IntegrandSingular(NcqoscError, ValueError):
    def __init__(self, location: float, detail: str = ""):
        self.location = location
        message = f"phase integrand is not finite at t = {location!r}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class NegativeNormalization(NcqoscError, ValueError):
    pass


class QuadratureNotConverged(NcqoscError, RuntimeError):
    def __init__(self, estimate: complex, refined: complex):
        self.estimate = estimate
        self.refined = refined
        super().__init__(
            f"quadrature did not converge: {estimate!r} vs refined {refined!r}"
        )


class UnsupportedPair(NcqoscError, ValueError):
    def __init__(self, n: int, m: int, limit: int):
        self.n = n
        self.m = m
        super().__init__(
            f"quantum numbers (n={n}, m={m}) exceed the supported range 0..{limit}"
        )


class NodeTooCloseToZeroOfPhi(UserWarning):
    """A grid point was skipped because the eigenfunction nearly vanishes there."""


class OutsideRealityWindow(NcqoscError, ValueError):
    def __init__(self, window, t):
        self.window = window
        self.t = t
        super().__init__(
            f"t = {t!r} lies outside the reality window "
            f"[{window.lower!r}, {window.upper!r}] (bound by {window.source})"
        )

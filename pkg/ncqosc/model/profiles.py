from dataclasses import dataclass
from enum import Enum

import numpy as np

from ncqosc.errors import SingularDenominator


class ProfileKind(str, Enum):
    CONSTANT = "constant"
    EXPONENTIAL = "exponential"
    RATIONAL = "rational"


@dataclass(frozen=True)
class TimeProfile:
    """
    Scalar function of time with an analytic derivative.

    ``constant``: ``amplitude``;
    ``exponential``: ``amplitude * exp(rate * t)``;
    ``rational``: ``amplitude * (Gamma * t + chi) ** (-power)``.

    All methods accept scalars or numpy arrays.

    Examples
    --------
    >>> f = TimeProfile.exponential(1.0, -2.0)
    >>> float(f.value(0.0))
    1.0
    >>> float(f.eta(3.0))
    2.0
    """

    kind: ProfileKind
    amplitude: float = 1.0
    rate: float = 0.0
    Gamma: float = 0.0
    chi: float = 1.0
    power: float = 0.0

    @classmethod
    def constant(cls, amplitude: float) -> "TimeProfile":
        return cls(ProfileKind.CONSTANT, float(amplitude))

    @classmethod
    def exponential(cls, amplitude: float, rate: float) -> "TimeProfile":
        return cls(ProfileKind.EXPONENTIAL, float(amplitude), rate=float(rate))

    @classmethod
    def rational(cls, amplitude: float, Gamma: float, chi: float, power: float) -> "TimeProfile":
        return cls(ProfileKind.RATIONAL, float(amplitude), Gamma=float(Gamma),
                   chi=float(chi), power=float(power))

    def _offset(self, t):
        s = self.Gamma * np.asarray(t, dtype=float) + self.chi
        if np.any(s <= 0):
            bad = np.atleast_1d(t)[np.atleast_1d(s) <= 0][0]
            raise SingularDenominator("Gamma*t + chi", float(bad))
        return s

    def value(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind is ProfileKind.CONSTANT:
            return np.full_like(t, self.amplitude)
        if self.kind is ProfileKind.EXPONENTIAL:
            return self.amplitude * np.exp(self.rate * t)
        return self.amplitude * self._offset(t) ** (-self.power)

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind is ProfileKind.CONSTANT:
            return np.zeros_like(t)
        if self.kind is ProfileKind.EXPONENTIAL:
            return self.rate * self.amplitude * np.exp(self.rate * t)
        s = self._offset(t)
        return -self.power * self.Gamma * self.amplitude * s ** (-self.power - 1.0)

    def eta(self, t):
        """Friction coefficient ``-f'/f`` implied by a damping profile."""
        t = np.asarray(t, dtype=float)
        if self.kind is ProfileKind.CONSTANT:
            return np.zeros_like(t)
        if self.kind is ProfileKind.EXPONENTIAL:
            return np.full_like(t, -self.rate)
        return self.power * self.Gamma / self._offset(t)

    def __call__(self, t):
        return self.value(t)


def evaluate(profile, t):
    """Value of a profile, a plain callable or a constant (or array) at ``t`` as a float array."""
    if callable(profile):
        return np.asarray(profile(t), dtype=float)
    return np.asarray(profile, dtype=float) + np.zeros_like(np.asarray(t, dtype=float))

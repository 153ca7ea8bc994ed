import dataclasses
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ncqosc.errors import UnknownCase


class Family(str, Enum):
    """Ermakov-Pinney solution family a catalog case belongs to."""

    SET_I = "SetI"
    SET_II = "SetII"

    @classmethod
    def parse(cls, value) -> "Family":
        if isinstance(value, Family):
            return value
        key = str(value).strip().lower().replace("-", "").replace("_", "")
        aliases = {"seti": cls.SET_I, "set1": cls.SET_I, "i": cls.SET_I,
                   "setii": cls.SET_II, "set2": cls.SET_II, "ii": cls.SET_II}
        if key not in aliases:
            raise UnknownCase(f"unknown family {value!r}")
        return aliases[key]


class Case(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"

    @property
    def number(self) -> int:
        return ("I", "II", "III", "IV").index(self.value) + 1


_CASES_PER_FAMILY = {
    Family.SET_I: (Case.I, Case.II, Case.III, Case.IV),
    Family.SET_II: (Case.I, Case.II),
}


@dataclass(frozen=True)
class CaseId:
    """
    One of the six closed-form catalog cases.

    Parameters
    ----------
    family : Family
        ``Family.SET_I`` (exponential solutions) or ``Family.SET_II``
        (rational solutions).
    case : Case
        Case I..IV for Set-I, Case I..II for Set-II.

    Raises
    ------
    UnknownCase
        If the case does not exist in the family.

    Examples
    --------
    >>> CaseId.parse("set1-case2")
    CaseId(family=<Family.SET_I: 'SetI'>, case=<Case.II: 'II'>)
    >>> str(CaseId(Family.SET_II, Case.I))
    'set2-case1'
    """

    family: Family
    case: Case

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        if not isinstance(self.case, Case):
            object.__setattr__(self, "case", _parse_case(self.case))
        if self.case not in _CASES_PER_FAMILY[self.family]:
            raise UnknownCase(
                f"{self.family.value} has no case {self.case.value}"
            )

    @property
    def id(self) -> str:
        family = 1 if self.family is Family.SET_I else 2
        return f"set{family}-case{self.case.number}"

    def __str__(self) -> str:
        return self.id

    @classmethod
    def parse(cls, value, family=None) -> "CaseId":
        """
        Build a CaseId from ``"set1-case3"``-style ids or from a roman
        numeral together with an explicit family.
        """
        if isinstance(value, CaseId):
            return value
        text = str(value).strip().lower()
        if text.startswith("set") and "-case" in text:
            family_part, case_part = text.split("-case", 1)
            try:
                case_number = int(case_part)
            except ValueError:
                raise UnknownCase(f"unknown case id {value!r}") from None
            if not 1 <= case_number <= 4:
                raise UnknownCase(f"unknown case id {value!r}")
            return cls(Family.parse(family_part), tuple(Case)[case_number - 1])
        if family is None:
            raise UnknownCase(f"case {value!r} needs a family")
        return cls(Family.parse(family), _parse_case(value))


def _parse_case(value) -> Case:
    text = str(value).strip().upper()
    if text.startswith("CASE"):
        text = text[4:].strip(" -_")
    numerals = {"1": "I", "2": "II", "3": "III", "4": "IV"}
    text = numerals.get(text, text)
    try:
        return Case(text)
    except ValueError:
        raise UnknownCase(f"unknown case {value!r}") from None


def all_cases() -> Tuple[CaseId, ...]:
    """Every catalog case, Set-I first."""
    return tuple(
        CaseId(family, case)
        for family, cases in _CASES_PER_FAMILY.items()
        for case in cases
    )


@dataclass(frozen=True)
class ScenarioParams:
    """
    Physical and solution-family constants of a scenario, in natural units.

    Parameters
    ----------
    M, q : float
        Mass (> 0) and charge (any sign).
    omega0, B0 : float
        Base angular frequency (> 0) and field amplitude (>= 0).
    Gamma, delta, Lambda : float
        Damping rate, frequency decay rate (both >= 0) and field growth
        rate (any real).
    vartheta : float, optional
        Set-I decay rate of the EP solution. Defaults to ``Gamma``.
    sigma, Delta_c : float
        EP constants (> 0).
    mu : float, optional
        EP constant. When omitted it is derived from the family constraint.
    xi2 : float
        EP integration constant (> 0).
    chi : float
        Set-II offset of ``Gamma*t + chi`` (> 0).
    k : int
        Set-II exponent.
    n, m : int
        Quantum numbers, ``m >= 0`` and ``n >= 0``.

    Raises
    ------
    TypeError
        If a field has the wrong type.
    ValueError
        If a field is out of range.
    """

    M: float
    q: float
    omega0: float
    B0: float
    Gamma: float
    sigma: float
    Delta_c: float
    delta: float = 0.0
    Lambda: float = 0.0
    vartheta: Optional[float] = None
    mu: Optional[float] = None
    xi2: float = 1.0
    chi: float = 1.0
    k: int = 2
    n: int = 1
    m: int = 0

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if value is None:
                continue
            if field.name in ("k", "n", "m"):
                if isinstance(value, bool) or not isinstance(value, int):
                    if isinstance(value, float) and value.is_integer():
                        object.__setattr__(self, field.name, int(value))
                        continue
                    raise TypeError(f"{field.name} must be an integer, got {value!r}")
            elif isinstance(value, bool) or not isinstance(value, (int, float)):
                raise TypeError(f"{field.name} must be a real number, got {value!r}")
            else:
                object.__setattr__(self, field.name, float(value))

        positive = ("M", "omega0", "sigma", "Delta_c", "xi2", "chi")
        for name in positive:
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)!r}")
        for name in ("B0", "Gamma", "delta"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)!r}")
        if self.vartheta is not None and not self.vartheta >= 0:
            raise ValueError(f"vartheta must be >= 0, got {self.vartheta!r}")
        if self.mu is not None and not self.mu > 0:
            raise ValueError(f"mu must be > 0, got {self.mu!r}")
        if self.n < 0 or self.m < 0:
            raise ValueError(f"quantum numbers must satisfy n >= 0 and m >= 0, got n={self.n}, m={self.m}")

    @property
    def l(self) -> int:
        """Angular quantum number ``m - n``."""
        return self.m - self.n

    @property
    def theta_rate(self) -> float:
        return self.Gamma if self.vartheta is None else self.vartheta

    def replace(self, **changes) -> "ScenarioParams":
        return dataclasses.replace(self, **changes)

"""
Rate-region models.

LinearRateConstraint / RatePolytope describe 2-D regions
{(Rp, Rc) >= 0 : a*Rp + b*Rc <= v} in bits. HalfSpace / HPolyhedron
describe general-dimension systems fed to Fourier-Motzkin projection;
their coefficients are exact fractions, right-hand sides are floats.
"""

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from app.core.exceptions import PreconditionError

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class LinearRateConstraint:
    """
    One half-plane coeff_p*Rp + coeff_c*Rc <= rhs.

    `constant` is the explicit additive part of rhs (the k*log2(2) and
    log2(3) terms of the printed bounds), kept separate for gap accounting.
    """
    coeff_p: float
    coeff_c: float
    rhs: float
    label: Optional[str] = None
    constant: float = 0.0

    def __post_init__(self):
        if self.coeff_p < 0 or self.coeff_c < 0:
            raise PreconditionError(f"Negative rate coefficient in constraint {self.label}")
        if self.coeff_p == 0 and self.coeff_c == 0:
            raise PreconditionError(f"Constraint {self.label} has no rate coefficient")
        if not math.isfinite(self.rhs):
            raise PreconditionError(f"Constraint {self.label} has non-finite rhs {self.rhs}")

    @property
    def weights(self) -> Tuple[float, float]:
        return (self.coeff_p, self.coeff_c)

    @property
    def gain_part(self) -> float:
        """rhs without its additive constant."""
        return self.rhs - self.constant

    def value_at(self, point: Sequence[float]) -> float:
        return self.coeff_p * point[0] + self.coeff_c * point[1]

    def shifted(self, delta: float) -> "LinearRateConstraint":
        """Same constraint with rhs (and constant) moved by delta."""
        return replace(self, rhs=self.rhs + delta, constant=self.constant + delta)


@dataclass(frozen=True)
class RatePolytope:
    """A 2-D rate region with implicit Rp >= 0, Rc >= 0."""
    constraints: Tuple[LinearRateConstraint, ...]
    name: str = ""
    flags: FrozenSet[str] = frozenset()

    @classmethod
    def of(
        cls,
        constraints: Iterable[LinearRateConstraint],
        name: str = "",
        flags: Iterable[str] = (),
    ) -> "RatePolytope":
        return cls(constraints=tuple(constraints), name=name, flags=frozenset(flags))

    @property
    def labels(self) -> List[Optional[str]]:
        return [c.label for c in self.constraints]

    def by_label(self, label: str) -> LinearRateConstraint:
        for constraint in self.constraints:
            if constraint.label == label:
                return constraint
        raise KeyError(label)

    def rhs_of(self, label: str) -> float:
        return self.by_label(label).rhs

    def with_constraints(self, extra: Iterable[LinearRateConstraint]) -> "RatePolytope":
        return replace(self, constraints=self.constraints + tuple(extra))

    def shifted(self, delta: float) -> "RatePolytope":
        return replace(self, constraints=tuple(c.shifted(delta) for c in self.constraints))

    def as_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """(A, b) with one row per constraint."""
        A = np.array([c.weights for c in self.constraints], dtype=float).reshape(-1, 2)
        b = np.array([c.rhs for c in self.constraints], dtype=float)
        return A, b


def _as_fraction(value: Number) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10**9)
    return Fraction(value)


@dataclass(frozen=True)
class HalfSpace:
    """Row coeffs . x <= rhs."""
    coeffs: Tuple[Fraction, ...]
    rhs: float
    label: Optional[str] = None

    @classmethod
    def build(cls, coeffs: Sequence[Number], rhs: float, label: Optional[str] = None) -> "HalfSpace":
        return cls(coeffs=tuple(_as_fraction(c) for c in coeffs), rhs=float(rhs), label=label)

    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.coeffs)


@dataclass(frozen=True)
class HPolyhedron:
    """A half-space system over labelled variables."""
    variables: Tuple[str, ...]
    rows: Tuple[HalfSpace, ...]
    flags: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise PreconditionError(f"Duplicate variable labels: {self.variables}")
        for row in self.rows:
            if len(row.coeffs) != len(self.variables):
                raise PreconditionError(
                    f"Row {row.label} has {len(row.coeffs)} coefficients, expected {len(self.variables)}"
                )

    @classmethod
    def from_dicts(
        cls,
        variables: Sequence[str],
        rows: Iterable[Tuple[Mapping[str, Number], float, Optional[str]]],
    ) -> "HPolyhedron":
        """Build from sparse rows ({var: coeff}, rhs, label)."""
        variables = tuple(variables)
        built = []
        for terms, rhs, label in rows:
            unknown = set(terms) - set(variables)
            if unknown:
                raise PreconditionError(f"Row {label} uses unknown variables {sorted(unknown)}")
            built.append(HalfSpace.build([terms.get(v, 0) for v in variables], rhs, label))
        return cls(variables=variables, rows=tuple(built))

    @property
    def dimension(self) -> int:
        return len(self.variables)

    def index(self, variable: str) -> int:
        try:
            return self.variables.index(variable)
        except ValueError:
            raise PreconditionError(f"Unknown variable '{variable}'") from None

    def as_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        A = np.array([[float(c) for c in row.coeffs] for row in self.rows], dtype=float)
        A = A.reshape(len(self.rows), self.dimension)
        b = np.array([row.rhs for row in self.rows], dtype=float)
        return A, b

    def with_rows(self, extra: Iterable[HalfSpace]) -> "HPolyhedron":
        return replace(self, rows=self.rows + tuple(extra))

    def with_flags(self, *flags: str) -> "HPolyhedron":
        return replace(self, flags=self.flags | frozenset(flags))

    def substitute(
        self,
        variable: str,
        terms: Mapping[str, Number],
        constant: float = 0.0,
    ) -> "HPolyhedron":
        """
        Replace `variable` by sum(terms[v] * v) + constant.

        Variables named in `terms` that are not yet present are appended.
        The substituted variable disappears from the system.
        """
        j = self.index(variable)
        new_vars = [v for v in self.variables if v != variable]
        for v in terms:
            if v not in new_vars:
                if v == variable:
                    raise PreconditionError("A variable cannot be substituted by itself")
                new_vars.append(v)

        fterms: Dict[str, Fraction] = {v: _as_fraction(c) for v, c in terms.items()}
        rows = []
        for row in self.rows:
            a = row.coeffs[j]
            coeffs = dict(zip(self.variables, row.coeffs))
            coeffs.pop(variable)
            rhs = row.rhs
            if a != 0:
                for v, c in fterms.items():
                    coeffs[v] = coeffs.get(v, Fraction(0)) + a * c
                rhs -= float(a) * constant
            rows.append(HalfSpace(tuple(coeffs.get(v, Fraction(0)) for v in new_vars), rhs, row.label))
        return HPolyhedron(variables=tuple(new_vars), rows=tuple(rows), flags=self.flags)

    def fix(self, variable: str, value: float) -> "HPolyhedron":
        """Substitute a constant value for `variable`."""
        return self.substitute(variable, {}, value)

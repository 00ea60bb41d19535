"""
Gaussian signaling models for the achievable schemes.

Roles of the shares per scheme:
  E1: Xp = a1*U1 + b1*V1 + c1*T1            Xc = a2*U2 + b2*T2
  E2: Xp = a1*e^{j theta_c}*S1 + b1*V1 + c1*Z1 + d1*T1
      Xc = a2*S1 + b2*U2' + c2*T2'
"""

import math
from dataclasses import dataclass
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.exceptions import PreconditionError
from app.models.channel import Scheme

SHARE_SUM_TOLERANCE = 1e-12

SPLIT_RATE_VARIABLES: Tuple[str, ...] = (
    "r10c", "r11c", "r10n", "r11n", "r20n", "r22n", "r20n_prime", "r22n_prime",
)


class PowerSplit(BaseModel):
    """Squared-magnitude power shares of both transmitters."""

    model_config = ConfigDict(frozen=True)

    a1_sq: float = Field(default=0.0, ge=0.0, le=1.0)
    b1_sq: float = Field(default=0.0, ge=0.0, le=1.0)
    c1_sq: float = Field(default=0.0, ge=0.0, le=1.0)
    d1_sq: float = Field(default=0.0, ge=0.0, le=1.0)
    a2_sq: float = Field(default=0.0, ge=0.0, le=1.0)
    b2_sq: float = Field(default=0.0, ge=0.0, le=1.0)
    c2_sq: float = Field(default=0.0, ge=0.0, le=1.0)

    @model_validator(mode="after")
    def _shares_sum_to_one(self) -> "PowerSplit":
        primary = self.a1_sq + self.b1_sq + self.c1_sq + self.d1_sq
        cognitive = self.a2_sq + self.b2_sq + self.c2_sq
        if abs(primary - 1.0) > SHARE_SUM_TOLERANCE:
            raise ValueError(f"primary shares sum to {primary}, expected 1")
        if abs(cognitive - 1.0) > SHARE_SUM_TOLERANCE:
            raise ValueError(f"cognitive shares sum to {cognitive}, expected 1")
        return self

    def check_scheme(self, scheme: Scheme) -> None:
        """E1 has no d1 (T1 is the last primary codebook) and no c2."""
        if scheme == Scheme.E1 and (self.d1_sq > 0 or self.c2_sq > 0):
            raise PreconditionError("Scheme E1 uses no d1 or c2 share")

    # Amplitudes are taken real and nonnegative.
    @property
    def a1(self) -> float:
        return math.sqrt(self.a1_sq)

    @property
    def b1(self) -> float:
        return math.sqrt(self.b1_sq)

    @property
    def c1(self) -> float:
        return math.sqrt(self.c1_sq)

    @property
    def d1(self) -> float:
        return math.sqrt(self.d1_sq)

    @property
    def a2(self) -> float:
        return math.sqrt(self.a2_sq)

    @property
    def b2(self) -> float:
        return math.sqrt(self.b2_sq)

    @property
    def c2(self) -> float:
        return math.sqrt(self.c2_sq)


class InnerOptions(BaseModel):
    """Lower-bounding convention for the E2 closed form."""

    model_config = ConfigDict(frozen=True)

    k1: float = Field(default=0.0, ge=0.0)
    k2: float = Field(default=0.0, ge=0.0)
    exact_k: bool = Field(
        default=False,
        description="Evaluate k1 = I(Yc;V1) and k2 = I(Yp;S1|V1,U2) exactly instead of using k1/k2",
    )


@dataclass(frozen=True)
class DpcCoefficients:
    """Binning coefficients U2 = U2' + lambda_U*S1, T2 = T2' + lambda_T*S1."""
    lambda_U: complex
    lambda_T: complex



@dataclass(frozen=True)
class SplitRateVector:
    """Rate splits of both users plus the two binning rates."""
    r10c: float = 0.0
    r11c: float = 0.0
    r10n: float = 0.0
    r11n: float = 0.0
    r20n: float = 0.0
    r22n: float = 0.0
    r20n_prime: float = 0.0
    r22n_prime: float = 0.0

    @classmethod
    def from_values(cls, values) -> "SplitRateVector":
        return cls(**{name: float(v) for name, v in zip(SPLIT_RATE_VARIABLES, values)})

    @property
    def R1(self) -> float:
        return self.r10c + self.r11c + self.r10n + self.r11n

    @property
    def R2(self) -> float:
        return self.r20n + self.r22n

    def as_tuple(self) -> Tuple[float, ...]:
        return tuple(getattr(self, name) for name in SPLIT_RATE_VARIABLES)

"""
Channel parameter models.

ChannelParams carries the five link gains and two interference phases of
the Gaussian causal cognitive interference channel; SymmetricParams is the
(S, alpha, beta) exponent parameterization; Regime tags the parameter
regions over which the constant-gap results are stated.
"""

import cmath
import enum
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

RANK_DEFICIENT_FLAG = "rank_deficient"


class Regime(str, enum.Enum):
    """Parameter regimes of the symmetric channel."""

    GREEN_I = "GreenI"
    GREEN_II = "GreenII"
    RED = "Red"
    YELLOW = "Yellow"
    BLUE_STRONG_INTERFERENCE = "BlueStrongInterference"
    BLUE_STRONG_COOPERATION = "BlueStrongCooperation"

    @property
    def is_blue(self) -> bool:
        """Blue regimes are not certified by this toolkit."""
        return self in (Regime.BLUE_STRONG_INTERFERENCE, Regime.BLUE_STRONG_COOPERATION)

    @property
    def budget_bits(self) -> float:
        """Per-user gap budget claimed for the regime."""
        return _BUDGET_BITS[self]


_BUDGET_BITS = {
    Regime.GREEN_I: 5.0,
    Regime.GREEN_II: 5.0,
    Regime.RED: 5.0,
    Regime.YELLOW: 2.0,
    Regime.BLUE_STRONG_INTERFERENCE: 1.0,
    Regime.BLUE_STRONG_COOPERATION: 1.0,
}


class Scheme(str, enum.Enum):
    """Achievable schemes of the Gaussian evaluation."""

    E1 = "E1_noS1Z1"
    E2 = "E2_noU1"


class OuterBoundId(str, enum.Enum):
    """The eight constraints of the symmetric outer bound."""

    CUTSET_P_C = "11a"
    CUTSET_P_I = "11b"
    CUTSET_C = "11c"
    SUM_TUNI = "11d"
    SUM_TUNI_C = "11e"
    SUM_PV = "11f"
    TWO_PP_PC = "11g"
    PP_TWO_PC = "11h"


class ReferenceKind(str, enum.Enum):
    """Reference outer regions the symmetric bound is compared against."""

    NON_CAUSAL_CIC = "NonCausalCIC"
    CLASSICAL_IC = "ClassicalIC"


class ChannelParams(BaseModel):
    """Link gains (linear power) and interference phases (radians)."""

    model_config = ConfigDict(frozen=True)

    snr_p: float = Field(ge=0.0, allow_inf_nan=False)
    snr_c: float = Field(ge=0.0, allow_inf_nan=False)
    inr_p: float = Field(ge=0.0, allow_inf_nan=False)
    inr_c: float = Field(ge=0.0, allow_inf_nan=False)
    coop: float = Field(ge=0.0, allow_inf_nan=False, description="Gain of the overheard link C")
    theta_p: float = Field(default=0.0, allow_inf_nan=False)
    theta_c: float = Field(default=0.0, allow_inf_nan=False)

    def channel_matrix(self) -> np.ndarray:
        """2x2 matrix from (Xp, Xc) to (Yp, Yc)."""
        return np.array(
            [
                [math.sqrt(self.snr_p), math.sqrt(self.inr_c) * cmath.exp(1j * self.theta_c)],
                [math.sqrt(self.inr_p) * cmath.exp(1j * self.theta_p), math.sqrt(self.snr_c)],
            ],
            dtype=complex,
        )

    def is_full_rank(self, tol: float = 1e-12) -> bool:
        """Check the interference-channel matrix is invertible."""
        return bool(abs(np.linalg.det(self.channel_matrix())) > tol)


class SymmetricParams(BaseModel):
    """Symmetric parameterization: snr = S, inr = S^alpha, C = S^beta."""

    model_config = ConfigDict(frozen=True)

    S: float = Field(ge=0.0, allow_inf_nan=False)
    alpha: float = Field(ge=0.0, allow_inf_nan=False)
    beta: float = Field(ge=0.0, allow_inf_nan=False)

    @classmethod
    def from_db(cls, snr_db: float, alpha: float, beta: float) -> "SymmetricParams":
        """Build from an SNR given in dB."""
        return cls(S=10.0 ** (snr_db / 10.0), alpha=alpha, beta=beta)

    @property
    def inr(self) -> float:
        return self.S ** self.alpha

    @property
    def coop(self) -> float:
        return self.S ** self.beta

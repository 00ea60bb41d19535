"""
Toolkit configuration using Pydantic Settings.
Loads environment variables from .env file.
"""

from functools import lru_cache
from typing import List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Version string written into every emitted table header.
TOOLKIT_VERSION = "1.0.0"


def parse_float_list(raw: str) -> List[float]:
    """Parse a comma-separated list of floats ("100,110,120")."""
    return [float(part) for part in raw.split(",") if part.strip()]


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # -------------------------------------------------------------------------
    # Application
    # -------------------------------------------------------------------------
    log_level: str = Field(default="INFO", alias="LOG_LEVEL")

    # -------------------------------------------------------------------------
    # Channel defaults
    # -------------------------------------------------------------------------
    default_theta_p: float = Field(
        default=0.0,
        alias="DEFAULT_THETA_P",
        description="Phase of the primary-to-cognitive-receiver link (radians)",
    )
    default_theta_c: float = Field(
        default=0.0,
        alias="DEFAULT_THETA_C",
        description="Phase of the cognitive-to-primary-receiver link (radians)",
    )

    # -------------------------------------------------------------------------
    # Numerical tolerances (all in bits unless stated otherwise)
    # -------------------------------------------------------------------------
    gap_tolerance_bits: float = Field(
        default=1e-6,
        alias="GAP_TOLERANCE_BITS",
        description="Slack allowed when comparing a gap against its budget",
    )
    containment_tolerance_bits: float = Field(
        default=1e-9,
        alias="CONTAINMENT_TOLERANCE_BITS",
        description="Slack for vertex-in-region containment checks",
    )
    support_tolerance_bits: float = Field(
        default=1e-7,
        alias="SUPPORT_TOLERANCE_BITS",
        description="Slack for support-function set comparisons",
    )
    support_directions: int = Field(
        default=64,
        alias="SUPPORT_DIRECTIONS",
        description="Number of directions in the nonnegative quadrant used by set_equal",
    )
    vertex_tolerance: float = Field(default=1e-10, alias="VERTEX_TOLERANCE")
    box_bound_bits: float = Field(
        default=1e6,
        alias="BOX_BOUND_BITS",
        description="Synthetic box bound used when a system is unbounded",
    )
    max_vertex_dimension: int = Field(default=10, alias="MAX_VERTEX_DIMENSION")
    psd_tolerance: float = Field(default=1e-10, alias="PSD_TOLERANCE")
    mi_regularization: float = Field(
        default=1e-12,
        alias="MI_REGULARIZATION",
        description="Diagonal jitter applied to singular conditioning blocks when regularization is requested",
    )

    # -------------------------------------------------------------------------
    # Sweeps
    # -------------------------------------------------------------------------
    sweep_workers: int = Field(
        default=1,
        alias="SWEEP_WORKERS",
        description="Thread workers for gap sweeps (1 = sequential)",
    )
    default_snr_db_grid: str = Field(default="10:60:10", alias="DEFAULT_SNR_DB_GRID")
    default_alpha_grid: str = Field(default="0.1:0.9:0.1", alias="DEFAULT_ALPHA_GRID")
    default_beta_grid: str = Field(default="0.05:1.95:0.1", alias="DEFAULT_BETA_GRID")
    gdof_snr_db: str = Field(
        default="100,110,120",
        alias="GDOF_SNR_DB",
        description="Ascending SNR values (dB) for gDoF estimates",
    )

    @property
    def gdof_snr_db_list(self) -> List[float]:
        """Parse the gDoF SNR list."""
        return parse_float_list(self.gdof_snr_db)

    # -------------------------------------------------------------------------
    # Output & cross-checks
    # -------------------------------------------------------------------------
    csv_significant_digits: int = Field(default=12, alias="CSV_SIGNIFICANT_DIGITS")
    default_seed: int = Field(default=7, alias="DEFAULT_SEED")
    fme_fault_offset_bits: float = Field(
        default=0.5,
        alias="FME_FAULT_OFFSET_BITS",
        description="Offset subtracted from every closed-form rhs in fault-injection mode",
    )


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Note: Settings are cached! Call clear_settings_cache() after changing the environment.
    """
    return Settings()


def clear_settings_cache() -> None:
    """Clear the settings cache. Call this if you need to reload settings."""
    get_settings.cache_clear()

"""
Gaussian Statistics Service.

Conditional mutual information among jointly circularly-symmetric complex
Gaussian variables. Variables are declared as linear combinations of
independent unit-power sources (LinearGaussianModel); the covariance of the
resulting vector is the oracle used to check every closed-form log term.

Convention: complex model, MI = log2 det ratio (no 1/2 factor).
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from app.core.config import get_settings
from app.core.exceptions import (
    DegenerateCovarianceError,
    NotPositiveSemidefiniteError,
    PreconditionError,
)

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)


def log_term(x: float) -> float:
    """log2(1 + x) for a nonnegative gain ratio."""
    if x < 0:
        raise PreconditionError(f"log_term expects x >= 0, got {x}")
    return math.log2(1.0 + x)


@dataclass(frozen=True)
class CovSpec:
    """Labelled Hermitian PSD covariance matrix."""
    labels: Tuple[str, ...]
    cov: np.ndarray

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise PreconditionError(f"Duplicate labels in covariance spec: {self.labels}")
        cov = np.asarray(self.cov, dtype=complex)
        n = len(self.labels)
        if cov.shape != (n, n):
            raise PreconditionError(f"Covariance shape {cov.shape} does not match {n} labels")

        tol = get_settings().psd_tolerance
        scale = max(1.0, float(np.max(np.abs(cov)))) if n else 1.0
        if not np.allclose(cov, cov.conj().T, atol=tol * scale):
            raise NotPositiveSemidefiniteError("Covariance matrix is not Hermitian")
        if n and float(np.min(np.linalg.eigvalsh(cov))) < -tol * scale:
            raise NotPositiveSemidefiniteError("Covariance matrix has a negative eigenvalue")
        object.__setattr__(self, "cov", cov)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise PreconditionError(f"Label '{label}' not in covariance spec") from None

    def indices(self, labels: Iterable[str]) -> List[int]:
        return [self.index(label) for label in labels]


class LinearGaussianModel:
    """
    Builder for covariance specs of linear Gaussian signal models.

    Example:
        >>> model = LinearGaussianModel(["X", "Z"])
        >>> model.define("Y", {"X": 1.0, "Z": 1.0})
        >>> conditional_mi(model.spec(), ["X"], ["Y"], [])
        1.0
    """

    def __init__(self, sources: Sequence[str]):
        self.sources: Tuple[str, ...] = tuple(sources)
        if len(set(self.sources)) != len(self.sources):
            raise PreconditionError("Duplicate source labels")
        self._vectors: Dict[str, np.ndarray] = {}
        for i, name in enumerate(self.sources):
            unit = np.zeros(len(self.sources), dtype=complex)
            unit[i] = 1.0
            self._vectors[name] = unit
        self._order: List[str] = list(self.sources)

    def define(self, name: str, combination: Mapping[str, complex]) -> None:
        """Declare `name` as a linear combination of sources or earlier variables."""
        if name in self._vectors:
            raise PreconditionError(f"Variable '{name}' already defined")
        vector = np.zeros(len(self.sources), dtype=complex)
        for term, weight in combination.items():
            if term not in self._vectors:
                raise PreconditionError(f"Unknown term '{term}' in definition of '{name}'")
            vector = vector + complex(weight) * self._vectors[term]
        self._vectors[name] = vector
        self._order.append(name)

    def has(self, name: str) -> bool:
        return name in self._vectors

    def spec(self) -> CovSpec:
        L = np.array([self._vectors[name] for name in self._order], dtype=complex)
        return CovSpec(labels=tuple(self._order), cov=L @ L.conj().T)


@dataclass(frozen=True)
class MutualInformation:
    """MI value in bits plus whether a singular block had to be regularized."""
    bits: float
    regularized: bool = False


def _conditional_covariance(
    spec: CovSpec,
    observed: List[int],
    given: List[int],
    regularize: bool,
) -> Tuple[np.ndarray, bool]:
    cov = spec.cov
    s_oo = cov[np.ix_(observed, observed)]
    if not given:
        return s_oo, False

    s_gg = cov[np.ix_(given, given)]
    s_og = cov[np.ix_(observed, given)]
    regularized = False

    eigenvalues = np.linalg.eigvalsh(s_gg)
    scale = max(1.0, float(np.max(np.abs(eigenvalues))))
    if float(np.min(eigenvalues)) <= 1e-12 * scale:
        if not regularize:
            labels = [spec.labels[i] for i in given]
            raise DegenerateCovarianceError(f"Singular conditioning block on {labels}")
        s_gg = s_gg + get_settings().mi_regularization * np.eye(len(given))
        regularized = True

    return s_oo - s_og @ np.linalg.solve(s_gg, s_og.conj().T), regularized


def _log2_det(matrix: np.ndarray) -> float:
    if matrix.size == 0:
        return 0.0
    sign, logdet = np.linalg.slogdet(matrix)
    if abs(sign) == 0 or not np.isfinite(logdet):
        raise DegenerateCovarianceError("Observed block is singular given the conditioning set")
    return float(logdet) / LN2


def conditional_mi_detailed(
    spec: CovSpec,
    targets: Iterable[str],
    observed: Iterable[str],
    given: Iterable[str] = (),
    regularize: bool = False,
) -> MutualInformation:
    """
    I(targets; observed | given) in bits.

    Args:
        spec: Covariance specification
        targets: Labels whose information is measured
        observed: Labels of the observation
        given: Conditioning labels
        regularize: Add diagonal jitter to singular conditioning blocks instead of raising

    Returns:
        MutualInformation with the value and a regularization flag

    Raises:
        PreconditionError: overlapping or unknown label sets
        DegenerateCovarianceError: singular conditioning block without regularize
    """
    targets, observed, given = list(targets), list(observed), list(given)
    t_set, o_set, g_set = set(targets), set(observed), set(given)
    if t_set & o_set or o_set & g_set:
        raise PreconditionError("Observed labels must be disjoint from targets and given labels")

    # Conditioning on a target removes it from the measured set.
    targets = [t for t in targets if t not in g_set]
    if not targets or not observed:
        return MutualInformation(bits=0.0)

    o_idx = spec.indices(observed)
    g_idx = spec.indices(given)
    t_idx = spec.indices(targets)

    before, reg_a = _conditional_covariance(spec, o_idx, g_idx, regularize)
    after, reg_b = _conditional_covariance(spec, o_idx, g_idx + t_idx, regularize)
    bits = _log2_det(before) - _log2_det(after)

    if bits < 0:
        if bits < -1e-9:
            logger.warning(f"⚠️ Negative mutual information {bits:.3e} clamped to 0")
        bits = 0.0
    regularized = reg_a or reg_b
    if regularized:
        logger.warning(f"⚠️ Regularized singular block for I({targets}; {observed} | {given})")
    return MutualInformation(bits=bits, regularized=regularized)


def conditional_mi(
    spec: CovSpec,
    targets: Iterable[str],
    observed: Iterable[str],
    given: Iterable[str] = (),
    regularize: bool = False,
) -> float:
    """I(targets; observed | given) in bits. See conditional_mi_detailed."""
    return conditional_mi_detailed(spec, targets, observed, given, regularize).bits


def random_covariance(rng: np.random.Generator, labels: Sequence[str], rank: Optional[int] = None) -> CovSpec:
    """Random complex PSD covariance (full rank unless `rank` is given)."""
    n = len(labels)
    k = n if rank is None else rank
    L = rng.standard_normal((n, k)) + 1j * rng.standard_normal((n, k))
    return CovSpec(labels=tuple(labels), cov=L @ L.conj().T / k)

"""
Raw decoding constraints c1-c18 of the unified achievable scheme.

Each row is a sum of split rates (plus binning rates) bounded by a
conditional mutual information evaluated on the Gaussian signal model.
Rows decoded at the primary receiver that involve the cognitive common
message are credited with I(U2;S1), the binning rate they can ignore.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from app.core.exceptions import PreconditionError
from app.models.channel import RANK_DEFICIENT_FLAG, ChannelParams, Scheme
from app.models.region import HPolyhedron
from app.models.signaling import SPLIT_RATE_VARIABLES, PowerSplit
from app.services.gaussian_stats import CovSpec, conditional_mi
from app.services.inner_bounds.signal_model import absent_auxiliaries, build_signal_model

logger = logging.getLogger(__name__)

BIN_U = "r20n_prime"
BIN_T = "r22n_prime"

BINNING_MODES = ("equality", "inequality")


@dataclass(frozen=True)
class RawRow:
    """One decoding constraint: sum(rates) <= I(targets; output | given) [+ I(U2;S1)]."""
    label: str
    output: str
    targets: Tuple[str, ...]
    given: Tuple[str, ...]
    rates: Tuple[str, ...]
    binning: Tuple[str, ...] = ()
    credit: bool = False


RAW_ROWS: Tuple[RawRow, ...] = (
    # Cognitive transmitter decodes the cooperative messages from Tf.
    RawRow("c1", "Tf", ("Z1", "V1"), ("U2", "T2", "S1"), ("r10c", "r11c")),
    RawRow("c2", "Tf", ("Z1",), ("U2", "T2", "S1", "V1"), ("r11c",)),
    # Primary receiver, T2 treated as noise.
    RawRow("c3", "Yp", ("V1", "U1", "T1", "S1", "Z1", "U2"), (),
           ("r10c", "r10n", "r11n", "r20n", "r11c"), (BIN_U,), True),
    RawRow("c4", "Yp", ("U1", "T1", "S1", "Z1", "U2"), ("V1",),
           ("r10n", "r11n", "r20n", "r11c"), (BIN_U,), True),
    RawRow("c5", "Yp", ("U1", "T1", "S1", "Z1"), ("V1", "U2"), ("r10n", "r11n", "r11c")),
    RawRow("c6", "Yp", ("T1", "S1", "Z1", "U2"), ("V1", "U1"),
           ("r11n", "r20n", "r11c"), (BIN_U,), True),
    RawRow("c7", "Yp", ("U1", "T1", "U2"), ("S1", "Z1", "V1"),
           ("r10n", "r11n", "r20n"), (BIN_U,), True),
    RawRow("c8", "Yp", ("T1", "S1", "Z1"), ("V1", "U1", "U2"), ("r11n", "r11c")),
    RawRow("c9", "Yp", ("S1", "Z1", "U2"), ("V1", "U1", "T1"), ("r20n", "r11c"), (BIN_U,), True),
    RawRow("c10", "Yp", ("U1", "T1"), ("S1", "Z1", "V1", "U2"), ("r10n", "r11n")),
    RawRow("c11", "Yp", ("T1", "U2"), ("S1", "Z1", "V1", "U1"), ("r11n", "r20n"), (BIN_U,), True),
    RawRow("c12", "Yp", ("S1", "Z1"), ("V1", "U1", "T1", "U2"), ("r11c",)),
    RawRow("c13", "Yp", ("T1",), ("S1", "Z1", "V1", "U1", "U2"), ("r11n",)),
    # Cognitive receiver, Z1 and T1 treated as noise.
    RawRow("c14", "Yc", ("U2", "T2", "V1", "U1"), (),
           ("r10c", "r20n", "r22n", "r10n"), (BIN_U, BIN_T)),
    RawRow("c15", "Yc", ("U2", "T2", "U1"), ("V1",), ("r20n", "r22n", "r10n"), (BIN_U, BIN_T)),
    RawRow("c16", "Yc", ("U2", "T2"), ("V1", "U1"), ("r20n", "r22n"), (BIN_U, BIN_T)),
    RawRow("c17", "Yc", ("T2", "U1"), ("U2", "V1"), ("r22n", "r10n"), (BIN_T,)),
    RawRow("c18", "Yc", ("T2",), ("U2", "V1", "U1"), ("r22n",), (BIN_T,)),
)

# Split rate forced to zero by the auxiliary each scheme drops.
ABSENT_RATE = {
    Scheme.E1: "r11c",
    Scheme.E2: "r10n",
}


@dataclass(frozen=True)
class RawEvaluation:
    """Mutual-information values of one (channel, split, scheme) triple."""
    scheme: Scheme
    mi: Mapping[str, float]
    bin_u: float
    bin_t: float

    @property
    def bin_total(self) -> float:
        """I(U2,T2;S1) = I(U2;S1) + I(S1;T2|U2)."""
        return self.bin_u + self.bin_t

    def rhs(self, row: RawRow) -> float:
        """Printed rhs: MI plus the I(U2;S1) credit where it applies."""
        return self.mi[row.label] + (self.bin_u if row.credit else 0.0)

    def effective_rhs(self, label: str) -> float:
        """rhs with the binning rates fixed at equality, i.e. bound on the split rates alone."""
        row = RAW_ROWS_BY_LABEL[label]
        value = self.rhs(row)
        if BIN_U in row.binning:
            value -= self.bin_u
        if BIN_T in row.binning:
            value -= self.bin_t
        return value

    def effective(self) -> Dict[str, float]:
        return {row.label: self.effective_rhs(row.label) for row in RAW_ROWS}


RAW_ROWS_BY_LABEL = {row.label: row for row in RAW_ROWS}


def _present(labels: Tuple[str, ...], absent) -> List[str]:
    return [v for v in labels if v not in absent]


def evaluate_raw(p: ChannelParams, s: PowerSplit, scheme: Scheme, spec: Optional[CovSpec] = None) -> RawEvaluation:
    """
    Evaluate the mutual information of every raw row.

    Auxiliaries absent from the scheme are dropped from target and
    conditioning sets. Binning rates are I(U2;S1) and I(S1;T2|U2), both
    zero when S1 is absent.
    """
    scheme = Scheme(scheme)
    spec = build_signal_model(p, s, scheme) if spec is None else spec
    absent = absent_auxiliaries(scheme)

    mi = {
        row.label: conditional_mi(
            spec,
            _present(row.targets, absent),
            [row.output],
            _present(row.given, absent),
        )
        for row in RAW_ROWS
    }
    if "S1" in absent:
        bin_u = bin_t = 0.0
    else:
        bin_u = conditional_mi(spec, ["U2"], ["S1"])
        bin_t = conditional_mi(spec, ["T2"], ["S1"], ["U2"])
    return RawEvaluation(scheme=scheme, mi=mi, bin_u=bin_u, bin_t=bin_t)


def raw_constraint_system(
    p: ChannelParams,
    s: PowerSplit,
    scheme: Scheme,
    binning: str = "equality",
    evaluation: Optional[RawEvaluation] = None,
) -> HPolyhedron:
    """
    Linear system over the eight split and binning rates.

    Args:
        p: Channel parameters
        s: Power split
        scheme: E1 (S1 = Z1 = none) or E2 (U1 = none)
        binning: "equality" pins r20n' = I(U2;S1) and r22n' = I(S1;T2|U2);
            "inequality" only asks r20n' + r22n' >= I(U2,T2;S1) and r20n' >= I(U2;S1)
        evaluation: Precomputed RawEvaluation to reuse

    Returns:
        HPolyhedron with rows c1..c18, the binning rows, the absent-rate
        row and nonnegativity rows
    """
    scheme = Scheme(scheme)
    if binning not in BINNING_MODES:
        raise PreconditionError(f"binning must be one of {BINNING_MODES}, got '{binning}'")
    ev = evaluate_raw(p, s, scheme) if evaluation is None else evaluation

    rows = []
    for row in RAW_ROWS:
        terms = {v: 1 for v in row.rates}
        terms.update({v: 1 for v in row.binning})
        rows.append((terms, ev.rhs(row), row.label))

    if binning == "equality":
        rows += [
            ({BIN_U: 1}, ev.bin_u, "bin_u_upper"),
            ({BIN_U: -1}, -ev.bin_u, "bin_u_lower"),
            ({BIN_T: 1}, ev.bin_t, "bin_t_upper"),
            ({BIN_T: -1}, -ev.bin_t, "bin_t_lower"),
        ]
    else:
        rows += [
            ({BIN_U: -1, BIN_T: -1}, -ev.bin_total, "bin_total"),
            ({BIN_U: -1}, -ev.bin_u, "bin_u"),
        ]

    rows.append(({ABSENT_RATE[scheme]: 1}, 0.0, "absent"))
    rows += [({v: -1}, 0.0, f"nonneg_{v}") for v in SPLIT_RATE_VARIABLES]

    logger.debug(f"📊 Raw system {scheme.value}: {len(rows)} rows, binning={binning}")
    H = HPolyhedron.from_dicts(SPLIT_RATE_VARIABLES, rows)
    if not p.is_full_rank():
        logger.warning(f"⚠️ Rank-deficient channel matrix in raw system {scheme.value}")
        H = H.with_flags(RANK_DEFICIENT_FLAG)
    return H

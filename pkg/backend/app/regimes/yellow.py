"""
Yellow regime: weak interference, cooperation between S and the threshold.

The cooperative link is strong enough for the cognitive transmitter to
learn the whole common part; no power goes to the last primary layer T1.
"""

from typing import Tuple

from app.core.interfaces.regime import LedgerPair, RegimeProvider
from app.models.channel import Regime, Scheme
from app.models.region import RatePolytope
from app.models.signaling import PowerSplit
from app.regimes.terms import bound, lg


class YellowRegime(RegimeProvider):
    regime = Regime.YELLOW
    scheme = Scheme.E2
    ledger_constant = 2.0

    def inner_region(self, S: float, I: float, C: float) -> RatePolytope:
        tin = lg(1 + S / (1 + I))
        mac = lg(1 + S + I)
        p2p = lg(1 + S)
        relay = lg(1 + C / (1 + I))
        return RatePolytope.of(
            [
                bound("lowYellowA", 1, 0, lg(1 + C), -1),
                bound("lowYellowB", 1, 0, mac, -1),
                bound("lowYellowC", 0, 1, p2p, -1),
                bound("lowYellowD", 1, 1, lg(1 + C) + mac, -3),
                bound("lowYellowE", 1, 1, relay + p2p, -1),
                bound("lowYellowF", 1, 1, tin + p2p, -2),
                bound("lowYellowG", 1, 2, p2p + tin + mac, -4),
                bound("lowYellowH", 1, 2, relay + mac + p2p, -3),
                bound("lowYellowI", 1, 3, 2 * mac + p2p + tin, -6),
            ],
            name="lowYellow",
        )

    def outer_region(self, S: float, I: float, C: float) -> RatePolytope:
        return RatePolytope.of(
            [
                bound("outYellowA", 1, 0, lg(1 + C), 1),
                bound("outYellowB", 1, 0, lg(1 + S + I), 1),
                bound("outYellowC", 0, 1, lg(1 + S)),
                bound("outYellowE", 1, 1, lg(1 + S / (1 + I)) + lg(1 + S + I), 1),
            ],
            name="outYellow",
        )

    def power_split(self, S: float, I: float, C: float) -> PowerSplit:
        half = I / (2 * (1 + I))
        return PowerSplit(
            a1_sq=half,
            b1_sq=half,
            c1_sq=1 / (1 + I),
            d1_sq=0.0,
            a2_sq=0.0,
            b2_sq=I / (1 + I),
            c2_sq=1 / (1 + I),
        )

    @property
    def ledger_pairs(self) -> Tuple[LedgerPair, ...]:
        return (
            ("lowYellowA", ("outYellowA",)),
            ("lowYellowB", ("outYellowB",)),
            ("lowYellowC", ("outYellowC",)),
            ("lowYellowD", ("outYellowA", "outYellowC")),
            ("lowYellowE", ("outYellowE",)),
            ("lowYellowF", ("outYellowE",)),
            ("lowYellowG", ("outYellowC", "outYellowE")),
            ("lowYellowH", ("outYellowC", "outYellowE")),
            ("lowYellowI", ("outYellowC", "outYellowC", "outYellowE")),
        )

"""
GreenII regime: weak interference, cooperation up to max{I, S/(1+I)}.

The primary transmitter spends part of its power on a cooperative
codeword V1 that the cognitive transmitter decodes causally.
"""

from typing import Tuple

from app.core.interfaces.regime import LedgerPair, RegimeProvider
from app.models.channel import Regime, Scheme
from app.models.region import RatePolytope
from app.models.signaling import PowerSplit
from app.regimes.terms import bound, lg


class GreenIIRegime(RegimeProvider):
    regime = Regime.GREEN_II
    scheme = Scheme.E1
    ledger_constant = 5.0

    def inner_region(self, S: float, I: float, C: float) -> RatePolytope:
        m = min(I, C)
        tin = lg(1 + S / (1 + I))
        mac = lg(1 + S + I)
        hk = lg(1 + I + S / (1 + I))
        return RatePolytope.of(
            [
                bound("lowGreeniiA", 1, 0, lg(1 + S), -4),
                bound("lowGreeniiB", 0, 1, lg(1 + S), -1),
                bound("lowGreeniiC", 1, 1, mac + tin, -3),
                bound("lowGreeniiD", 1, 1, hk + tin + lg(1 + m), -5),
                bound("lowGreeniiE", 2, 1, 2 * tin + mac + lg(1 + m), -6),
                bound("lowGreeniiF", 2, 1, 2 * tin + lg(1 + I + S / (1 + m)) + 2 * lg(1 + m), -9),
                bound("lowGreeniiG", 1, 2, hk + tin + mac, -4),
            ],
            name="lowGreenii",
        )

    def outer_region(self, S: float, I: float, C: float) -> RatePolytope:
        tin = lg(1 + S / (1 + I))
        mac = lg(1 + S + I)
        hk = lg(1 + I + S / (1 + I))
        coop = lg(1 + I + S * (1 + C) / (1 + I + C))
        return RatePolytope.of(
            [
                bound("outGreeniiA", 1, 0, lg(1 + S), 1),
                bound("outGreeniiB", 0, 1, lg(1 + S)),
                bound("outGreeniiC", 1, 1, mac + tin, 1),
                bound("outGreeniiD", 1, 1, hk + coop, 3),
                bound("outGreeniiE", 2, 1, tin + mac + coop, 3),
                bound("outGreeniiF", 1, 2, hk + tin + mac, 3),
            ],
            name="outGreenii",
        )

    def power_split(self, S: float, I: float, C: float) -> PowerSplit:
        a1_sq = 1 / (2 * (1 + min(C, I)))
        c1_sq = 1 / (2 * (1 + I))
        return PowerSplit(
            a1_sq=a1_sq,
            b1_sq=max(0.0, 1 - a1_sq - c1_sq),
            c1_sq=c1_sq,
            a2_sq=I / (1 + I),
            b2_sq=1 / (1 + I),
        )

    @property
    def ledger_pairs(self) -> Tuple[LedgerPair, ...]:
        return (
            ("lowGreeniiA", ("outGreeniiA",)),
            ("lowGreeniiB", ("outGreeniiB",)),
            ("lowGreeniiC", ("outGreeniiC",)),
            ("lowGreeniiD", ("outGreeniiD",)),
            ("lowGreeniiE", ("outGreeniiE",)),
            ("lowGreeniiF", ("outGreeniiE",)),
            ("lowGreeniiG", ("outGreeniiF",)),
        )

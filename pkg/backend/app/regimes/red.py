"""
Red regime: weak interference, cooperation between max{I, S/(1+I)} and S.

The cognitive transmitter learns part of the primary message and
dirty-paper codes its own message against it.
"""

from typing import Tuple

from app.core.interfaces.regime import LedgerPair, RegimeProvider
from app.models.channel import Regime, Scheme
from app.models.region import RatePolytope
from app.models.signaling import PowerSplit
from app.regimes.terms import LOG3, bound, lg


class RedRegime(RegimeProvider):
    regime = Regime.RED
    scheme = Scheme.E2
    ledger_constant = 5.0

    def inner_region(self, S: float, I: float, C: float) -> RatePolytope:
        tin = lg(1 + S / (1 + I))
        mac = lg(1 + S + I)
        p2p = lg(1 + S)
        return RatePolytope.of(
            [
                bound("lowRedA", 1, 0, lg(1 + C + S), -5),
                bound("lowRedB", 1, 0, mac, -1),
                bound("lowRedC", 0, 1, p2p, -LOG3),
                bound("lowRedD", 1, 1, lg(1 + C) + lg(1 + S / (1 + C) + I) + tin, -5 - LOG3),
                bound("lowRedE", 1, 1, mac + tin, -1 - LOG3),
                bound("lowRedF", 1, 1, lg(1 + C / (1 + I)) + lg(1 + S / (1 + C)) + p2p, -4 - LOG3),
                bound("lowRedG", 1, 1, p2p + lg(1 + S / (1 + I) + S / (1 + C)), -2 - LOG3),
                bound("lowRedH", 1, 2, mac + tin + p2p, -3 - 2 * LOG3),
                bound(
                    "lowRedI", 1, 2,
                    p2p + tin + lg(1 + I + S / (1 + C)) + lg(1 + C / (1 + I)),
                    -4 - 2 * LOG3,
                ),
                bound(
                    "lowRedL", 1, 3,
                    mac + 2 * tin + lg(1 + I + S / (1 + C)) + p2p,
                    -5 - 3 * LOG3,
                ),
            ],
            name="lowRed",
        )

    def outer_region(self, S: float, I: float, C: float) -> RatePolytope:
        tin = lg(1 + S / (1 + I))
        mac = lg(1 + S + I)
        return RatePolytope.of(
            [
                bound("outRedA", 1, 0, lg(1 + C + S)),
                bound("outRedB", 1, 0, mac, 1),
                bound("outRedC", 0, 1, lg(1 + S)),
                bound("outRedD", 1, 1, tin + mac, 1),
                bound("outRedE", 1, 2, mac + tin + lg(1 + C), 2 + LOG3),
            ],
            name="outRed",
        )

    def power_split(self, S: float, I: float, C: float) -> PowerSplit:
        common = (I + C + 2 * I * C) / (4 * (1 + I) * (1 + C))
        return PowerSplit(
            a1_sq=common,
            b1_sq=common,
            c1_sq=1 / (2 * (1 + I)),
            d1_sq=1 / (2 * (1 + C)),
            a2_sq=0.0,
            b2_sq=I / (1 + I),
            c2_sq=1 / (1 + I),
        )

    @property
    def ledger_pairs(self) -> Tuple[LedgerPair, ...]:
        return (
            ("lowRedA", ("outRedA",)),
            ("lowRedB", ("outRedB",)),
            ("lowRedC", ("outRedC",)),
            ("lowRedD", ("outRedD",)),
            ("lowRedE", ("outRedD",)),
            ("lowRedF", ("outRedD",)),
            ("lowRedG", ("outRedD",)),
            ("lowRedH", ("outRedC", "outRedD")),
            ("lowRedI", ("outRedE",)),
            ("lowRedL", ("outRedC", "outRedE")),
        )

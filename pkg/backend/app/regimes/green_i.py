"""
GreenI regime: weak interference, weak cooperation (C <= I(1+I)/(1+S)).

The cooperation link is ignored; the cognitive private message sits below
the noise floor at the primary receiver.
"""

from typing import Tuple

from app.core.interfaces.regime import LedgerPair, RegimeProvider
from app.models.channel import Regime, Scheme
from app.models.region import RatePolytope
from app.models.signaling import PowerSplit
from app.regimes.terms import bound, lg


class GreenIRegime(RegimeProvider):
    regime = Regime.GREEN_I
    scheme = Scheme.E1
    ledger_constant = 3.0

    def inner_region(self, S: float, I: float, C: float) -> RatePolytope:
        tin = lg(1 + S / (1 + I))
        mac = lg(1 + S + I)
        hk = lg(1 + I + S / (1 + I))
        return RatePolytope.of(
            [
                bound("lowGreeniA", 1, 0, lg(1 + S), -1),
                bound("lowGreeniB", 0, 1, lg(1 + S), -1),
                bound("lowGreeniC", 1, 1, mac + tin, -2),
                bound("lowGreeniD", 1, 1, 2 * hk, -2),
                bound("lowGreeniE", 2, 1, tin + mac + hk, -3),
                bound("lowGreeniF", 1, 2, tin + mac + hk, -3),
            ],
            name="lowGreeni",
        )

    def outer_region(self, S: float, I: float, C: float) -> RatePolytope:
        tin = lg(1 + S / (1 + I))
        mac = lg(1 + S + I)
        hk = lg(1 + I + S / (1 + I))
        return RatePolytope.of(
            [
                bound("outGreeniA", 1, 0, lg(1 + S), 1),
                bound("outGreeniB", 0, 1, lg(1 + S)),
                bound("outGreeniC", 1, 1, tin + mac, 1),
                bound("outGreeniD", 1, 1, 2 * hk, 4),
                bound("outGreeniE", 2, 1, mac + tin + hk, 4),
                bound("outGreeniF", 1, 2, mac + tin + hk, 3),
            ],
            name="outGreeni",
        )

    def power_split(self, S: float, I: float, C: float) -> PowerSplit:
        # No cooperative codeword; private shares received at noise level.
        return PowerSplit(
            a1_sq=I / (1 + I),
            b1_sq=0.0,
            c1_sq=1 / (1 + I),
            a2_sq=I / (1 + I),
            b2_sq=1 / (1 + I),
        )

    @property
    def ledger_pairs(self) -> Tuple[LedgerPair, ...]:
        return tuple((f"lowGreeni{x}", (f"outGreeni{x}",)) for x in "ABCDEF")

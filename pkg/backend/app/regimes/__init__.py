# Regime providers
from .green_i import GreenIRegime
from .green_ii import GreenIIRegime
from .red import RedRegime
from .yellow import YellowRegime

__all__ = [
    "GreenIRegime",
    "GreenIIRegime",
    "RedRegime",
    "YellowRegime",
]

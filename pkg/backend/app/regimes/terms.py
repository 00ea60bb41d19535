"""
Shared building blocks for the printed regime regions.

All logarithms are base 2, so a "log(2)" constant is one bit.
"""

import math

from app.models.region import LinearRateConstraint

LOG3 = math.log2(3.0)


def lg(x: float) -> float:
    """log2 of a positive gain expression."""
    return math.log2(x)


def bound(label: str, coeff_p: float, coeff_c: float, gain: float, constant: float = 0.0) -> LinearRateConstraint:
    """coeff_p*Rp + coeff_c*Rc <= gain + constant, keeping the constant separate."""
    return LinearRateConstraint(
        coeff_p=coeff_p,
        coeff_c=coeff_c,
        rhs=gain + constant,
        label=label,
        constant=constant,
    )

"""
Abstract provider contracts.
"""

from .regime import LedgerPair, RegimeProvider

__all__ = ["LedgerPair", "RegimeProvider"]

"""Mode solutions of the scalar wave equation in Kasner spacetimes.

Closed forms (Bessel / biconfluent Heun), adaptive numerics, small- and
large-time asymptotic fits, and lightlike-geodesic redshift.
"""

from .core import (
    FrequencyLimit,
    KasnerClass,
    KasnerExponents,
    LimitKind,
    Momentum,
    frequency_f,
    frequency_limit,
    make_exponents,
    potential_K,
)
from .specfun import SeriesResult, bessel_j, bessel_y, heun_b, log_gamma

__all__ = [
    "FrequencyLimit",
    "KasnerClass",
    "KasnerExponents",
    "LimitKind",
    "Momentum",
    "frequency_f",
    "frequency_limit",
    "make_exponents",
    "potential_K",
    "SeriesResult",
    "bessel_j",
    "bessel_y",
    "heun_b",
    "log_gamma",
]

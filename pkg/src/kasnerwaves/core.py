"""Kasner exponent triples and the scalar fields built from them.

A Kasner spacetime is fixed by a triple (p1, p2, p3) obeying the two sum
rules sum(p_j) = 1 and sum(p_j^2) = 1.  The triple is either *flat* (one
exponent equals 1, the others 0) or *non-flat* (all exponents nonzero,
exactly one negative).  The non-flat triples with a repeated exponent are
permutations of (-1/3, 2/3, 2/3).

Two scalar fields drive everything downstream, for a momentum w:

    K_w(s) = 4 pi^2 sum_j w_j^2 exp((2 - 2 p_j) s)      (log-time potential)
    f_w(t) = (sum_j w_j^2 t^(-2 p_j))^(1/2)             (large-time frequency)

They are related by K_w(ln t) = 4 pi^2 t^2 f_w(t)^2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import ConstraintViolation, NonPositiveTime

__all__ = [
    "KasnerClass",
    "KasnerExponents",
    "Momentum",
    "FrequencyLimit",
    "make_exponents",
    "potential_K",
    "frequency_f",
    "frequency_limit",
]

_AXISYM_TARGET = (-1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0)


class KasnerClass(enum.Enum):
    FLAT = "flat"
    NONFLAT_AXISYMMETRIC = "nonflat-axisymmetric"
    NONFLAT_GENERIC = "nonflat-generic"


@dataclass(frozen=True)
class KasnerExponents:
    """Validated Kasner exponent triple with classification metadata.

    ``axis`` is 1-based: for FLAT it names the exponent equal to 1, for
    NONFLAT_AXISYMMETRIC the exponent equal to -1/3, and it is None for
    the generic class.  Instances are immutable; build them through
    :func:`make_exponents`.
    """

    p1: float
    p2: float
    p3: float
    kind: KasnerClass
    axis: int | None
    tol: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.p1, self.p2, self.p3)


@dataclass(frozen=True)
class Momentum:
    """Fourier momentum vector, in cycles per unit comoving length."""

    w1: float
    w2: float
    w3: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.w1, self.w2, self.w3)

    def is_zero(self) -> bool:
        return self.w1 == 0.0 and self.w2 == 0.0 and self.w3 == 0.0


class LimitKind(enum.Enum):
    CONSTANT = "constant"
    INFINITE = "infinite"
    ZERO = "zero"


@dataclass(frozen=True)
class FrequencyLimit:
    """Limit of f_w(t) as t -> infinity: a constant, 0, or +infinity."""

    kind: LimitKind
    value: float | None = None


def make_exponents(p1: float, p2: float, p3: float, tol: float = 1e-12) -> KasnerExponents:
    """Validate and classify a Kasner exponent triple.

    Raises ConstraintViolation if either sum rule is violated beyond
    ``tol``.  Inputs are never repaired: a slightly inconsistent triple
    is rejected rather than projected, because the asymptotic exponents
    downstream depend on the raw values.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    p = (p1, p2, p3)
    if not all(math.isfinite(x) for x in p):
        raise ConstraintViolation("exponents must be finite")
    lin = p1 + p2 + p3 - 1.0
    quad = p1 * p1 + p2 * p2 + p3 * p3 - 1.0
    if abs(lin) > tol or abs(quad) > tol:
        raise ConstraintViolation(
            f"Kasner sum rules violated: sum-1={lin:.3e}, sumsq-1={quad:.3e}, tol={tol:.1e}"
        )

    flat_axes = [j for j, pj in enumerate(p) if abs(pj - 1.0) <= tol]
    if flat_axes:
        return KasnerExponents(p1, p2, p3, KasnerClass.FLAT, flat_axes[0] + 1, tol)

    # Axisymmetric detection against the exact target values, not pairwise
    # equality: near-degenerate generic triples must stay generic.
    by_value = sorted(range(3), key=lambda j: p[j])
    sorted_p = [p[j] for j in by_value]
    if all(abs(sorted_p[i] - _AXISYM_TARGET[i]) <= tol for i in range(3)):
        return KasnerExponents(
            p1, p2, p3, KasnerClass.NONFLAT_AXISYMMETRIC, by_value[0] + 1, tol
        )
    return KasnerExponents(p1, p2, p3, KasnerClass.NONFLAT_GENERIC, None, tol)


def potential_K(k: KasnerExponents, w: Momentum, s: float) -> float:
    """Log-time potential K_w(s) = 4 pi^2 sum_j w_j^2 exp((2-2p_j) s)."""
    total = 0.0
    for pj, wj in zip(k.as_tuple(), w.as_tuple()):
        if wj != 0.0:
            total += wj * wj * math.exp((2.0 - 2.0 * pj) * s)
    return 4.0 * math.pi * math.pi * total


def frequency_f(k: KasnerExponents, w: Momentum, t: float) -> float:
    """Large-time frequency f_w(t) = (sum_j w_j^2 t^(-2p_j))^(1/2), t > 0."""
    if not t > 0.0:
        raise NonPositiveTime(f"frequency_f requires t > 0, got {t}")
    total = 0.0
    for pj, wj in zip(k.as_tuple(), w.as_tuple()):
        if wj != 0.0:
            total += wj * wj * t ** (-2.0 * pj)
    return math.sqrt(total)


def frequency_limit(k: KasnerExponents, w: Momentum) -> FrequencyLimit:
    """Behaviour of f_w(t) as t -> infinity.

    Flat with p_axis = 1: the t^-2 term dies, leaving the constant
    sqrt(w_k^2 + w_l^2) over the two transverse components.  Non-flat:
    f diverges iff the momentum component on the negative exponent is
    nonzero, otherwise every term decays to zero.
    """
    p = k.as_tuple()
    ws = w.as_tuple()
    if k.kind is KasnerClass.FLAT:
        j = k.axis - 1
        transverse = [ws[i] for i in range(3) if i != j]
        return FrequencyLimit(LimitKind.CONSTANT, math.hypot(*transverse))
    neg = min(range(3), key=lambda i: p[i])
    if ws[neg] != 0.0:
        return FrequencyLimit(LimitKind.INFINITE)
    return FrequencyLimit(LimitKind.ZERO)

"""Special functions needed by the explicit mode solutions.

Everything here is evaluated from scratch: principal-branch complex
log-gamma, Bessel J/Y of complex order via the ascending power series,
and the biconfluent Heun function in the specialization

    x y'' + (1 - 2 x^2) y' - (2 x + delta/2) y = 0,   y(0)=1, y'(0)=delta/2,

whose Taylor coefficients obey (m+1)^2 a_{m+1} = (delta/2) a_m + 2 m a_{m-1}
(re-derived from the ODE; the test suite checks the series against direct
numerical integration of the ODE).

The ascending series are alternating with terms that grow before they
decay, so for large arguments the double-precision sum loses digits to
cancellation.  When the tracked cancellation ratio says the result would
miss the requested tolerance, the same term recurrence is re-run in
gmpy2 wide floats at a precision chosen from that ratio.  No asymptotic
large-argument expansions are used anywhere.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import gmpy2

from .errors import IntegerOrderUnsupported, NoConvergence, PoleError

__all__ = ["SeriesResult", "log_gamma", "bessel_j", "bessel_y", "heun_b"]

EULER_GAMMA = 0.5772156649015328606065120900824024

_BESSEL_TERM_CAP = 10_000
_HEUN_TERM_CAP = 100_000
_TINY = 1e-300


@dataclass(frozen=True)
class SeriesResult:
    """Value/derivative pair from a power-series evaluation.

    ``truncation_estimate`` is the magnitude of the last retained terms
    relative to the sum; on success it is at most the requested tol.
    """

    value: complex
    derivative: complex
    terms_used: int
    truncation_estimate: float


# ---------------------------------------------------------------------------
# log-gamma: Lanczos (g=7, 9 terms) on Re z >= 0.5, upward recurrence below.

_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _lanczos_right(z: complex) -> complex:
    a = _LANCZOS_C[0]
    for k in range(1, 9):
        a += _LANCZOS_C[k] / (z - 1.0 + k)
    t = z - 0.5 + _LANCZOS_G
    return _HALF_LOG_2PI + (z - 0.5) * cmath.log(t) - t + cmath.log(a)


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma(z).

    Uses the Lanczos approximation for Re z >= 0.5 and the recurrence
    log Gamma(z) = log Gamma(z+n) - sum_k Log(z+k) below; the upward
    shift with principal logs reproduces the principal branch on both
    half-planes (checked against an arbitrary-precision oracle).
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"log_gamma pole at z={z.real}")
    if z.real >= 0.5:
        return _lanczos_right(z)
    n = math.ceil(0.5 - z.real)
    acc = 0.0 + 0.0j
    for k in range(n):
        acc += cmath.log(z + k)
    return _lanczos_right(z + n) - acc


# ---------------------------------------------------------------------------
# Series kernels.  Each kernel works on whatever number type it is handed
# (complex, or gmpy2.mpc inside a precision context) and returns
# (partial sums, terms_used, truncation_estimate, cancellation ratio).


def _kernel_bessel_j(nu, x, tol, cap):
    one = 1 + (x - x)
    c = one
    s_val = c
    s_der = c * nu
    q = -(x * x) / 4
    prev = abs(c)
    maxmag = prev
    m = 1
    while m <= cap:
        c = c * q / (m * (m + nu))
        s_val += c
        s_der += c * (2 * m + nu)
        mag = abs(c)
        if mag > maxmag:
            maxmag = mag
        sref = abs(s_val)
        if mag <= tol * sref and prev <= tol * sref:
            trunc = float(max(mag, prev) / max(sref, _TINY))
            return (s_val, s_der), m + 1, trunc, float(maxmag / max(sref, _TINY))
        prev = mag
        m += 1
    raise NoConvergence(f"bessel series: {cap} terms without convergence")


def _kernel_y0(x, tol, cap):
    # Joint loop for the J0 sums and the harmonic-weighted log-series sums.
    one = 1 + (x - x)
    term = one
    h = one * 0
    sj = term
    sjd = one * 0
    st = one * 0
    std = one * 0
    q2 = (x * x) / 4
    prev = abs(term)
    maxmag = prev
    m = 1
    while m <= cap:
        term = -term * q2 / (m * m)
        h = h + one / m
        sj += term
        sjd += term * (2 * m)
        st += -h * term
        std += -h * term * (2 * m)
        mag = abs(term) * (1 + float(h))
        if mag > maxmag:
            maxmag = mag
        sref = max(abs(sj), abs(st))
        if mag <= tol * sref and prev <= tol * sref:
            trunc = float(max(mag, prev) / max(sref, _TINY))
            lo = min(abs(sj), abs(st))
            return (sj, sjd, st, std), m + 1, trunc, float(maxmag / max(lo, _TINY))
        prev = mag
        m += 1
    raise NoConvergence(f"Y0 series: {cap} terms without convergence")


def _kernel_heun(delta, x, tol, cap):
    one = 1 + (x - x)
    half_delta = delta / 2
    t_prev = one
    t_cur = half_delta * x
    s_val = t_prev + t_cur
    s_mder = t_cur  # sum of m * t_m
    prev = abs(t_cur)
    maxmag = max(abs(t_prev), prev)
    m = 1
    while m <= cap:
        t_next = (half_delta * t_cur * x + (2 * m) * t_prev * (x * x)) / ((m + 1) * (m + 1))
        s_val += t_next
        s_mder += (m + 1) * t_next
        mag = abs(t_next)
        if mag > maxmag:
            maxmag = mag
        sref = abs(s_val)
        if mag <= tol * sref and prev <= tol * sref:
            trunc = float(max(mag, prev) / max(sref, _TINY))
            return (s_val, s_mder), m + 2, trunc, float(maxmag / max(sref, _TINY))
        prev = mag
        t_prev, t_cur = t_cur, t_next
        m += 1
    raise NoConvergence(f"heun series: {cap} terms without convergence")


def _run_series(kernel, args, tol, cap):
    """Run a kernel in doubles, escalating to wide floats on cancellation.

    The double pass is kept when its rounding noise (cancellation ratio
    times machine epsilon) sits safely below tol; otherwise the kernel
    is re-run under a gmpy2 precision wide enough to absorb the digits
    lost to cancellation, with one verification retry.
    """
    sums, terms, trunc, cancel = kernel(*(complex(a) for a in args), tol, cap)
    if cancel * 1e-15 <= 0.1 * tol:
        return tuple(complex(v) for v in sums), terms, trunc
    bits = 80 + max(0, math.ceil(math.log2(cancel))) + max(0, math.ceil(-math.log2(tol)))
    for _ in range(3):
        with gmpy2.context(precision=bits):
            hp_args = [gmpy2.mpc(complex(a).real, complex(a).imag) for a in args]
            sums, terms, trunc, cancel = kernel(*hp_args, tol, cap)
        if cancel * 2.0 ** (10 - bits) <= 0.1 * tol:
            return tuple(complex(v) for v in sums), terms, trunc
        bits = 40 + max(1, math.ceil(math.log2(cancel))) + max(0, math.ceil(-math.log2(tol)))
    raise NoConvergence("series precision escalation failed to stabilize")


# ---------------------------------------------------------------------------
# Public evaluators.


def bessel_j(nu: complex, x: float, tol: float = 1e-12) -> SeriesResult:
    """Bessel J_nu(x) for complex order, x > 0, by the ascending series.

    J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_m c_m with
    c_m = c_{m-1} * (-x^2/4) / (m (m + nu)); the derivative is summed
    alongside from the same terms.
    """
    if not x > 0.0:
        raise ValueError(f"bessel_j requires x > 0, got {x}")
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    nu = complex(nu)
    if nu.imag == 0.0 and nu.real == math.floor(nu.real) and nu.real < 0.0:
        # J_{-n} = (-1)^n J_n; the series recurrence would divide by zero.
        n = int(-nu.real)
        base = bessel_j(complex(-nu.real), x, tol)
        sign = -1.0 if n % 2 else 1.0
        return SeriesResult(
            sign * base.value, sign * base.derivative, base.terms_used, base.truncation_estimate
        )
    (s_val, s_der), terms, trunc = _run_series(_kernel_bessel_j, (nu, x), tol, _BESSEL_TERM_CAP)
    pref = cmath.exp(nu * cmath.log(x / 2.0) - log_gamma(nu + 1.0))
    return SeriesResult(pref * s_val, pref * s_der / x, terms, trunc)


def _bessel_y0(x: float, tol: float) -> SeriesResult:
    (sj, sjd, st, std), terms, trunc = _run_series(_kernel_y0, (x,), tol, _BESSEL_TERM_CAP)
    lg = math.log(x / 2.0) + EULER_GAMMA
    two_over_pi = 2.0 / math.pi
    value = two_over_pi * (lg * sj + st)
    deriv = two_over_pi * (sj + lg * sjd + std) / x
    return SeriesResult(value, deriv, terms, trunc)


def bessel_y(nu: complex, x: float, tol: float = 1e-12) -> SeriesResult:
    """Bessel Y_nu(x) for x > 0.

    Order zero uses the logarithmic series directly; non-integer orders
    use the connection formula (J_nu cos(pi nu) - J_{-nu}) / sin(pi nu).
    Nonzero integer orders are rejected: the mode solutions only ever
    need nu = 0 or purely imaginary nu.
    """
    if not x > 0.0:
        raise ValueError(f"bessel_y requires x > 0, got {x}")
    nu = complex(nu)
    if nu.imag == 0.0 and nu.real == math.floor(nu.real):
        if nu.real == 0.0:
            return _bessel_y0(x, tol)
        raise IntegerOrderUnsupported(f"bessel_y at integer order {nu.real}")
    jp = bessel_j(nu, x, tol)
    jm = bessel_j(-nu, x, tol)
    cs = cmath.cos(math.pi * nu)
    sn = cmath.sin(math.pi * nu)
    value = (jp.value * cs - jm.value) / sn
    deriv = (jp.derivative * cs - jm.derivative) / sn
    return SeriesResult(
        value,
        deriv,
        jp.terms_used + jm.terms_used,
        max(jp.truncation_estimate, jm.truncation_estimate),
    )


def heun_b(delta: complex, x: complex, tol: float = 1e-12) -> SeriesResult:
    """Biconfluent Heun function HeunB(0, 0, 0, delta, x) and its derivative.

    Entire function; the series always converges, so the term cap only
    guards runaway inputs.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    delta = complex(delta)
    x = complex(x)
    if x == 0.0:
        return SeriesResult(1.0 + 0.0j, delta / 2.0, 2, 0.0)
    (s_val, s_mder), terms, trunc = _run_series(_kernel_heun, (delta, x), tol, _HEUN_TERM_CAP)
    return SeriesResult(s_val, s_mder / x, terms, trunc)

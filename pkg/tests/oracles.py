"""Independent high-precision oracles used to freeze expected test values.

The Bessel oracle is a direct power-series summation in mpmath arbitrary
precision (never mpmath's own besselj), so it shares no code path with the
double-precision implementation under test.
"""

from __future__ import annotations

import mpmath as mp


def mp_bessel_j(nu, x, extra_dps: int = 30):
    """J_nu(x) by brute-force series summation at >= 50 terms, high precision.

    Working precision grows with x so that the alternating-series
    cancellation (roughly 0.43 * x digits) never touches the result.
    """
    with mp.workdps(50 + extra_dps + int(0.6 * float(x))):
        nu = mp.mpf(nu)
        x = mp.mpf(x)
        if x == 0:
            return mp.mpf(1 if nu == 0 else 0)
        half = x / 2
        q = half * half
        term = mp.mpf(1)
        total = mp.mpf(1)
        k = 0
        while True:
            k += 1
            term *= -q / (k * (nu + k))
            total += term
            if k >= 50 and abs(term) < mp.mpf(10) ** (-(mp.mp.dps + 5)) * abs(total):
                break
        value = mp.exp(nu * mp.log(half) - mp.loggamma(nu + 1)) * total
    return value


def mp_bessel_zero(nu, n, digits: int = 30):
    """n-th positive zero of J_nu by scan plus bisection on the series oracle."""
    nu_f = float(nu)
    step = 0.5
    x = nu_f + 0.5
    f_prev = mp_bessel_j(nu, x)
    found = 0
    while True:
        x_next = x + step
        f_next = mp_bessel_j(nu, x_next)
        if mp.sign(f_prev) != mp.sign(f_next):
            found += 1
            if found == n:
                lo, hi = mp.mpf(x), mp.mpf(x_next)
                f_lo = f_prev
                for _ in range(int(digits * 3.5) + 10):
                    mid = (lo + hi) / 2
                    f_mid = mp_bessel_j(nu, mid)
                    if mp.sign(f_mid) == mp.sign(f_lo):
                        lo, f_lo = mid, f_mid
                    else:
                        hi = mid
                return (lo + hi) / 2
        x, f_prev = x_next, f_next

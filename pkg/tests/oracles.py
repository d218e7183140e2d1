"""Independent numeric oracles built on mpmath's Klein j-function."""

import mpmath

from singmod.quadforms import reduced_forms


def cm_points(d):
    return [(-b + mpmath.sqrt(-d)) / (2 * a) for a, b, c in reduced_forms(d)]


def j_values(d, dps=80):
    with mpmath.workdps(dps):
        return [1728 * mpmath.kleinj(t) for t in cm_points(d)]


def hilbert_poly(d, dps=120):
    """Ascending integer coefficients of prod (x - j(tau_Q)), rounded."""
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpc(1)]
        for j in j_values(d, dps):
            nxt = [mpmath.mpc(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] += c
                nxt[i] -= j * c
            coeffs = nxt
        out = []
        for c in coeffs:
            r = int(mpmath.nint(c.real))
            assert abs(c - r) < mpmath.mpf(10) ** (-dps // 3)
            out.append(r)
        return out


def gz_numeric(d1, d2, dps=120):
    """prod |j(tau1) - j(tau2)| over all CM points, rounded to an integer."""
    with mpmath.workdps(dps):
        prod = mpmath.mpf(1)
        for a in j_values(d1, dps):
            for b in j_values(d2, dps):
                prod *= abs(a - b)
        r = int(mpmath.nint(prod))
        assert abs(prod - r) < mpmath.mpf(10) ** (-dps // 3) * (1 + r)
        return r

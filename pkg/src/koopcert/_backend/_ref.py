"""Pure-NumPy reference kernels for the built-in system time steppers.

The compiled extension ``koopcert._backend._core`` implements the same
functions with the same floating-point operation order, so the two
backends produce identical state sequences (the extension is compiled
with ``-ffp-contract=off`` to rule out fused multiply-adds).  Any change
to an update formula here must be mirrored in ``_core.pyx``.

Shapes
------
Scalar systems (OU family): ``x0 (B,)``, ``noise (B, n)``, ``out (B, n+1)``.
Duffing: ``x0 (B, 2)``, ``out (B, n+1, 2)``.
Controls ``u (B, K)`` are held constant for ``substeps`` integrator steps
each, ``n = K * substeps``.

Every kernel returns an int64 array of length B holding the index of the
first state that violated the overflow guard (|x| > 1e12 or non-finite),
or -1.  Stepping continues past a violation; the caller decides whether
to raise or truncate.
"""

import math

import numpy as np

GUARD = 1.0e12


def _mark_bad(bad, x, idx):
    flat = np.abs(np.atleast_2d(x.T).T).reshape(bad.shape[0], -1)
    viol = ~(flat <= GUARD).all(axis=1)  # NaN compares false, so it violates
    new = viol & (bad < 0)
    if new.any():
        bad[new] = idx


def em_paths_ou(x0, h, noise, out):
    """dX = -X dt + dW, Euler-Maruyama."""
    B, n = noise.shape
    bad = np.full(B, -1, dtype=np.int64)
    sqrt_h = math.sqrt(h)
    if B == 1:
        x = float(x0[0])
        out[0, 0] = x
        w = noise[0]
        b = -1
        for k in range(n):
            ns = sqrt_h * float(w[k])
            dr = -x
            x = x + dr * h + 1.0 * ns
            out[0, k + 1] = x
            if b < 0 and not (abs(x) <= GUARD):
                b = k + 1
        bad[0] = b
        return bad
    x = x0.astype(np.float64, copy=True)
    out[:, 0] = x
    with np.errstate(all="ignore"):
        for k in range(n):
            ns = sqrt_h * noise[:, k]
            dr = -x
            x = x + dr * h + 1.0 * ns
            out[:, k + 1] = x
            _mark_bad(bad, x, k + 1)
    return bad


def em_paths_ou_controlled(alpha, beta, x0, u, substeps, h, noise, out):
    """dX = -alpha u X dt + sqrt(2/beta) dW, piecewise-constant u."""
    B, K = u.shape
    bad = np.full(B, -1, dtype=np.int64)
    sqrt_h = math.sqrt(h)
    sig = math.sqrt(2.0 / beta)
    if B == 1:
        x = float(x0[0])
        out[0, 0] = x
        w = noise[0]
        b = -1
        k = 0
        for j in range(K):
            c = float(u[0, j])
            for _ in range(substeps):
                ns = sqrt_h * float(w[k])
                g = -(alpha * x)
                dr = g * c
                x = x + dr * h + sig * ns
                out[0, k + 1] = x
                if b < 0 and not (abs(x) <= GUARD):
                    b = k + 1
                k += 1
        bad[0] = b
        return bad
    x = x0.astype(np.float64, copy=True)
    out[:, 0] = x
    with np.errstate(all="ignore"):
        k = 0
        for j in range(K):
            c = u[:, j]
            for _ in range(substeps):
                ns = sqrt_h * noise[:, k]
                g = -(alpha * x)
                dr = g * c
                x = x + dr * h + sig * ns
                out[:, k + 1] = x
                _mark_bad(bad, x, k + 1)
                k += 1
    return bad


def _duffing_field(alpha, beta, delta, x1, x2, c):
    cub = (x1 * x1) * x1
    g2 = -((2.0 * beta) * cub)
    f1 = x2
    f2 = (-(delta * x2) - alpha * x1) + g2 * c
    return f1, f2


def em_paths_duffing(alpha, beta, delta, x0, u, substeps, h, out):
    """Duffing drift, explicit Euler (sigma = 0, so EM has no noise term)."""
    B, K = u.shape
    bad = np.full(B, -1, dtype=np.int64)
    if B == 1:
        x1, x2 = float(x0[0, 0]), float(x0[0, 1])
        out[0, 0, 0] = x1
        out[0, 0, 1] = x2
        b = -1
        k = 0
        for j in range(K):
            c = float(u[0, j])
            for _ in range(substeps):
                f1, f2 = _duffing_field(alpha, beta, delta, x1, x2, c)
                x1 = x1 + f1 * h
                x2 = x2 + f2 * h
                out[0, k + 1, 0] = x1
                out[0, k + 1, 1] = x2
                if b < 0 and not (abs(x1) <= GUARD and abs(x2) <= GUARD):
                    b = k + 1
                k += 1
        bad[0] = b
        return bad
    x1 = x0[:, 0].astype(np.float64, copy=True)
    x2 = x0[:, 1].astype(np.float64, copy=True)
    out[:, 0, 0] = x1
    out[:, 0, 1] = x2
    with np.errstate(all="ignore"):
        k = 0
        for j in range(K):
            c = u[:, j]
            for _ in range(substeps):
                f1, f2 = _duffing_field(alpha, beta, delta, x1, x2, c)
                x1 = x1 + f1 * h
                x2 = x2 + f2 * h
                out[:, k + 1, 0] = x1
                out[:, k + 1, 1] = x2
                _mark_bad(bad, np.stack([x1, x2], axis=1), k + 1)
                k += 1
    return bad


def rk4_paths_duffing(alpha, beta, delta, x0, u, substeps, h, out):
    """Classical fourth-order Runge-Kutta on the Duffing field."""
    B, K = u.shape
    bad = np.full(B, -1, dtype=np.int64)
    hh = h * 0.5
    h6 = h / 6.0

    def step(x1, x2, c):
        k11, k12 = _duffing_field(alpha, beta, delta, x1, x2, c)
        k21, k22 = _duffing_field(alpha, beta, delta, x1 + hh * k11, x2 + hh * k12, c)
        k31, k32 = _duffing_field(alpha, beta, delta, x1 + hh * k21, x2 + hh * k22, c)
        k41, k42 = _duffing_field(alpha, beta, delta, x1 + h * k31, x2 + h * k32, c)
        s1 = ((k11 + 2.0 * k21) + 2.0 * k31) + k41
        s2 = ((k12 + 2.0 * k22) + 2.0 * k32) + k42
        return x1 + h6 * s1, x2 + h6 * s2

    if B == 1:
        x1, x2 = float(x0[0, 0]), float(x0[0, 1])
        out[0, 0, 0] = x1
        out[0, 0, 1] = x2
        b = -1
        k = 0
        for j in range(K):
            c = float(u[0, j])
            for _ in range(substeps):
                x1, x2 = step(x1, x2, c)
                out[0, k + 1, 0] = x1
                out[0, k + 1, 1] = x2
                if b < 0 and not (abs(x1) <= GUARD and abs(x2) <= GUARD):
                    b = k + 1
                k += 1
        bad[0] = b
        return bad
    x1 = x0[:, 0].astype(np.float64, copy=True)
    x2 = x0[:, 1].astype(np.float64, copy=True)
    out[:, 0, 0] = x1
    out[:, 0, 1] = x2
    with np.errstate(all="ignore"):
        k = 0
        for j in range(K):
            c = u[:, j]
            for _ in range(substeps):
                x1, x2 = step(x1, x2, c)
                out[:, k + 1, 0] = x1
                out[:, k + 1, 1] = x2
                _mark_bad(bad, np.stack([x1, x2], axis=1), k + 1)
                k += 1
    return bad

"""Hot loops of the candidate-threshold sweep.

Two interchangeable backends evaluate the weighted partial entropies for a
block of candidate thresholds against the occupied histogram bins:

* ``numba`` -- an ``@njit``-compiled scalar loop nest (the default whenever
  numba imports cleanly), and
* ``numpy`` -- a vectorized broadcast over the candidates x bins grid.

Setting the environment variable ``NEUTROSEG_NO_NUMBA=1`` before import
disables the numba backend; a ``backend=`` argument overrides the default
per call. The scalar math must stay in sync with ``core`` -- the test suite
pins the backends to the scalar reference at 1e-12.
"""

from __future__ import annotations

import os

import numpy as np

# weight mass below this yields a zero partial entropy
ZERO_MASS = 1e-12

ENV_FLAG = "NEUTROSEG_NO_NUMBA"

_LN2 = 0.6931471805599453


def _sweep_loops(values, counts, ts, v1s, v2s, e_t, e_i, e_f):
    # compiled by numba when that backend is active; keep njit-compatible
    for j in range(ts.shape[0]):
        t = ts[j]
        v1 = v1s[j]
        v2 = v2s[j]
        num_t = 0.0
        den_t = 0.0
        num_i = 0.0
        den_i = 0.0
        num_f = 0.0
        den_f = 0.0
        for k in range(values.shape[0]):
            x = values[k]
            c = counts[k]
            ax = abs(x - 0.5)
            d1 = 2.0 * abs(x - v1) / (1.0 + ax + abs(v1 - 0.5))
            d2 = 2.0 * abs(x - v2) / (1.0 + ax + abs(v2 - 0.5))
            dt = 2.0 * abs(x - t) / (1.0 + ax + abs(t - 0.5))
            dv = d1 if d1 < d2 else d2
            prod = d1 * d2
            den = (d1 + d2) - prod
            if den <= 0.0:
                tt = 0.5
                ff = 0.5
            else:
                tt = (d2 - prod) / den
                ff = (d1 - prod) / den
            prod_v = dt * dv
            den_v = (dt + dv) - prod_v
            if den_v <= 0.0:
                ii = 1.0
            else:
                ii = (dv - prod_v) / den_v
            s = tt + ff
            u = max(0.0, 1.0 - s)
            cc = max(0.0, s - 1.0)
            den_p = 1.0 + ii + u + cc
            half_i = 0.5 * ii
            p_t = (tt + u + half_i) / den_p
            p_f = (ff + u + half_i) / den_p
            h = 0.0
            if p_t > 0.0:
                h += p_t * np.log(p_t)
            if p_f > 0.0:
                h += p_f * np.log(p_f)
            e = -h / _LN2
            e = min(1.0, max(0.0, e))
            w = c * tt
            num_t += w * e
            den_t += w
            w = c * ii
            num_i += w * e
            den_i += w
            w = c * ff
            num_f += w * e
            den_f += w
        e_t[j] = num_t / den_t if den_t >= ZERO_MASS else 0.0
        e_i[j] = num_i / den_i if den_i >= ZERO_MASS else 0.0
        e_f[j] = num_f / den_f if den_f >= ZERO_MASS else 0.0


def _load_numba_kernel():
    if os.environ.get(ENV_FLAG, "").strip().lower() not in ("", "0", "false", "no"):
        return None
    try:
        from numba import njit
    except ImportError:
        return None
    return njit(cache=True)(_sweep_loops)


_sweep_numba = _load_numba_kernel()


def _xlogx(p):
    out = np.zeros_like(p)
    mask = p > 0.0
    out[mask] = p[mask] * np.log(p[mask])
    return out


def _weighted_mean(w, e, out):
    num = np.sum(w * e, axis=0)
    den = np.sum(w, axis=0)
    live = den >= ZERO_MASS
    out[:] = np.where(live, num / np.where(live, den, 1.0), 0.0)


def _sweep_numpy(values, counts, ts, v1s, v2s, e_t, e_i, e_f):
    x = values[:, None]
    c = counts[:, None]
    ax = np.abs(x - 0.5)
    d1 = 2.0 * np.abs(x - v1s) / (1.0 + ax + np.abs(v1s - 0.5))
    d2 = 2.0 * np.abs(x - v2s) / (1.0 + ax + np.abs(v2s - 0.5))
    dt = 2.0 * np.abs(x - ts) / (1.0 + ax + np.abs(ts - 0.5))
    dv = np.minimum(d1, d2)
    prod = d1 * d2
    den = (d1 + d2) - prod
    live = den > 0.0
    safe = np.where(live, den, 1.0)
    tt = np.where(live, (d2 - prod) / safe, 0.5)
    ff = np.where(live, (d1 - prod) / safe, 0.5)
    prod_v = dt * dv
    den_v = (dt + dv) - prod_v
    live_v = den_v > 0.0
    safe_v = np.where(live_v, den_v, 1.0)
    ii = np.where(live_v, (dv - prod_v) / safe_v, 1.0)
    s = tt + ff
    u = np.maximum(0.0, 1.0 - s)
    cc = np.maximum(0.0, s - 1.0)
    den_p = 1.0 + ii + u + cc
    half_i = 0.5 * ii
    p_t = (tt + u + half_i) / den_p
    p_f = (ff + u + half_i) / den_p
    e = -(_xlogx(p_t) + _xlogx(p_f)) / _LN2
    np.clip(e, 0.0, 1.0, out=e)
    e += 0.0  # normalize -0.0
    _weighted_mean(c * tt, e, e_t)
    _weighted_mean(c * ii, e, e_i)
    _weighted_mean(c * ff, e, e_f)


def default_backend() -> str:
    """Backend used when none is requested explicitly."""
    return "numba" if _sweep_numba is not None else "numpy"


def available_backends() -> tuple[str, ...]:
    if _sweep_numba is not None:
        return ("numba", "numpy")
    return ("numpy",)


def sweep_partial_entropies(values, counts, ts, v1s, v2s, backend=None):
    """Partial entropies (e_T, e_I, e_F) for each candidate threshold.

    ``values``/``counts`` describe the occupied histogram bins; ``ts``,
    ``v1s``, ``v2s`` give each candidate threshold with its low/high class
    means. Returns three float64 arrays aligned with ``ts``.
    """
    if backend is None:
        backend = default_backend()
    if backend == "numba":
        if _sweep_numba is None:
            raise ValueError(
                f"numba backend unavailable (not installed, or disabled via {ENV_FLAG})"
            )
        kernel = _sweep_numba
    elif backend == "numpy":
        kernel = _sweep_numpy
    else:
        raise ValueError(f"unknown backend {backend!r}")

    values = np.ascontiguousarray(values, dtype=np.float64)
    counts = np.ascontiguousarray(counts, dtype=np.float64)
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    v1s = np.ascontiguousarray(v1s, dtype=np.float64)
    v2s = np.ascontiguousarray(v2s, dtype=np.float64)
    e_t = np.empty(ts.size)
    e_i = np.empty(ts.size)
    e_f = np.empty(ts.size)
    kernel(values, counts, ts, v1s, v2s, e_t, e_i, e_f)
    return e_t, e_i, e_f

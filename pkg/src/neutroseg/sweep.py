"""Histogram construction, candidate enumeration, entropy sweep and minima.

The image's gray multiset is represented by a histogram over the quantized
grid {0, 1/q, ..., q/q}. For every candidate threshold on that grid strictly
inside the occupied range, the per-level entropies are averaged with the
truth/neutrality/falsity degrees as weights, and the segmentation thresholds
are read off the local minima of the resulting total-entropy curve.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .core import neutro_components, neutro_entropy
from .errors import ConstantImage, EmptyImage, NoCandidates, ThresholdOutOfRange
from .image import GrayImage

ZERO_MASS = _kernels.ZERO_MASS


@dataclass(frozen=True, eq=False)
class Histogram:
    """Pixel counts over the quantized gray grid; bin k holds value k / q."""

    q: int
    counts: np.ndarray = field(repr=False)
    total: int

    def values(self) -> np.ndarray:
        """Gray value of every bin, ascending."""
        return np.arange(self.q + 1, dtype=np.float64) / self.q

    def occupied(self) -> np.ndarray:
        """Indices of nonempty bins, ascending."""
        return np.flatnonzero(self.counts)


@dataclass(frozen=True, eq=False)
class ClassStats:
    """Means and populations of the two classes split by threshold ``t``.

    A bin whose value equals ``t`` exactly belongs to both classes.
    """

    t: float
    v1: float
    v2: float
    n1: int
    n2: int


@dataclass(frozen=True, eq=False)
class EntropyCurve:
    """Sampled entropy rows (t, e_t, e_i, e_f, total) over the candidate grid."""

    q: int
    t: np.ndarray
    e_t: np.ndarray
    e_i: np.ndarray
    e_f: np.ndarray
    total: np.ndarray

    def __len__(self) -> int:
        return self.t.size


@dataclass(frozen=True, eq=False)
class ThresholdSet:
    """Selected thresholds, ascending; flagged when no interior minimum existed."""

    thresholds: np.ndarray
    fallback_used: bool


def build_histogram(image: GrayImage, q: int = 255) -> Histogram:
    """Histogram of ``image`` quantized to the grid {0, 1/q, ..., 1}.

    A pixel with integer level L lands in bin round(L * q / (depth - 1)),
    rounding halves away from zero.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if image.pixel_count == 0:
        raise EmptyImage("cannot build a histogram from an empty image")
    scaled = image.levels.astype(np.int64) * q / (image.depth - 1)
    bins = np.floor(scaled + 0.5).astype(np.int64)
    counts = np.bincount(bins, minlength=q + 1)
    return Histogram(q=q, counts=counts, total=int(counts.sum()))


def class_stats(hist: Histogram, t: float) -> ClassStats:
    """Class means/populations on both sides of ``t`` (interior to the range)."""
    occ = hist.occupied()
    vals = hist.values()
    if occ.size == 0:
        raise ThresholdOutOfRange("histogram is empty")
    lo = vals[occ[0]]
    hi = vals[occ[-1]]
    if not lo < t < hi:
        raise ThresholdOutOfRange(
            f"threshold {t} is not strictly inside the occupied range ({lo}, {hi})"
        )
    low = vals <= t
    high = vals >= t
    bins = np.arange(hist.q + 1, dtype=np.int64)
    n1 = int(hist.counts[low].sum())
    n2 = int(hist.counts[high].sum())
    # integer numerators keep the means exactly rounded, so every evaluation
    # order produces the same double
    v1 = float((hist.counts[low] * bins[low]).sum() / (n1 * hist.q))
    v2 = float((hist.counts[high] * bins[high]).sum() / (n2 * hist.q))
    return ClassStats(t=float(t), v1=v1, v2=v2, n1=n1, n2=n2)


def _candidate_indices(hist: Histogram) -> np.ndarray:
    occ = hist.occupied()
    if occ.size < 2:
        raise ConstantImage("constant image: fewer than two distinct gray levels")
    return np.arange(occ[0] + 1, occ[-1], dtype=np.int64)


def candidate_thresholds(hist: Histogram) -> np.ndarray:
    """Grid points k/q strictly between the occupied extremes, ascending.

    May be empty (adjacent occupied bins leave no grid point in between).
    """
    return _candidate_indices(hist).astype(np.float64) / hist.q


def partial_entropies(hist: Histogram, t: float) -> tuple[float, float, float]:
    """Truth-, neutrality- and falsity-weighted mean entropies at threshold ``t``.

    Scalar reference path; the sweep in :func:`entropy_curve` must agree with
    it at every candidate. A weight mass below ``ZERO_MASS`` yields 0 for
    that partial entropy.
    """
    stats = class_stats(hist, t)
    occ = hist.occupied()
    vals = hist.values()[occ]
    cnts = hist.counts[occ]
    sums = [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]
    for x, c in zip(vals, cnts):
        triple = neutro_components(x, stats.v1, stats.v2, t)
        e = neutro_entropy(*triple)
        for acc, w in zip(sums, triple):
            cw = c * w
            acc[0] += cw * e
            acc[1] += cw
    return tuple(num / den if den >= ZERO_MASS else 0.0 for num, den in sums)


def entropy_curve(hist: Histogram, backend: str | None = None) -> EntropyCurve:
    """Evaluate the entropy sweep at every candidate threshold.

    ``backend`` selects the kernel ("numba" or "numpy"); by default the
    compiled kernel is used when available.
    """
    ks = _candidate_indices(hist)
    if ks.size == 0:
        raise NoCandidates(
            "no quantized threshold lies strictly between the occupied extremes"
        )
    vals = hist.values()
    bins = np.arange(hist.q + 1, dtype=np.int64)
    # prefix sums stay in int64 so each class mean is a single exact
    # integer ratio rounded once
    cum_n = np.cumsum(hist.counts)
    cum_k = np.cumsum(hist.counts * bins)
    n1 = cum_n[ks]
    k1 = cum_k[ks]
    n2 = cum_n[-1] - cum_n[ks - 1]
    k2 = cum_k[-1] - cum_k[ks - 1]
    v1s = k1 / (n1 * hist.q)
    v2s = k2 / (n2 * hist.q)
    ts = vals[ks]
    occ = hist.occupied()
    c = hist.counts.astype(np.float64)
    e_t, e_i, e_f = _kernels.sweep_partial_entropies(
        vals[occ], c[occ], ts, v1s, v2s, backend=backend
    )
    total = (e_t + e_i + e_f) / 3.0
    return EntropyCurve(q=hist.q, t=ts, e_t=e_t, e_i=e_i, e_f=e_f, total=total)


def _plateau_runs(values: np.ndarray) -> list[tuple[int, int]]:
    """Maximal runs [a, b] of consecutive exactly-equal values."""
    breaks = np.flatnonzero(np.diff(values) != 0.0)
    starts = np.concatenate(([0], breaks + 1))
    ends = np.concatenate((breaks, [values.size - 1]))
    return list(zip(starts.tolist(), ends.tolist()))


def find_thresholds(curve: EntropyCurve, max_thresholds: int = 8) -> ThresholdSet:
    """Thresholds at the interior local minima of the total-entropy curve.

    A run of equal values strictly below both neighbors counts as one
    minimum at its center sample (lower median); curve endpoints never
    qualify. With more minima than ``max_thresholds``, the ones with the
    smallest entropy are kept (ties to the smaller threshold). When no
    interior minimum exists at all, the center of the first plateau
    attaining the global minimum is returned with ``fallback_used`` set.
    """
    if len(curve) == 0:
        raise ValueError("entropy curve is empty")
    if max_thresholds < 1:
        raise ValueError("max_thresholds must be at least 1")
    e = curve.total
    last = e.size - 1
    runs = _plateau_runs(e)
    minima = []
    for a, b in runs:
        if a == 0 or b == last:
            continue
        if e[a - 1] > e[a] and e[b + 1] > e[b]:
            center = (a + b) // 2
            minima.append((float(e[center]), float(curve.t[center])))
    if not minima:
        lowest = e.min()
        for a, b in runs:
            if e[a] == lowest:
                center = (a + b) // 2
                return ThresholdSet(
                    thresholds=np.array([curve.t[center]]), fallback_used=True
                )
    minima.sort()
    kept = sorted(t for _, t in minima[:max_thresholds])
    return ThresholdSet(thresholds=np.array(kept), fallback_used=False)

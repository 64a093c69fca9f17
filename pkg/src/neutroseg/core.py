"""Scalar building blocks for threshold-relative gray-level uncertainty.

Gray levels, class means and candidate thresholds all live on [0, 1]. A
bounded dissimilarity metric compares two levels; from the dissimilarities
of a level to the two class means and to the threshold we derive a
(truth, neutrality, falsity) triple, collapse it to an escort probability
pair, and score that pair with base-2 Shannon entropy.

Everything here is a pure function of its arguments and safe to call from
any number of threads. Array-shaped fast paths live in ``_kernels``; the
scalar forms below are the readable reference, and the test suite pins the
two implementations together.
"""

from __future__ import annotations

import math
from typing import NamedTuple

_LN2 = math.log(2.0)


class NeutroTriple(NamedTuple):
    """Degrees of truth, neutrality and falsity, each in [0, 1]."""

    truth: float
    neutrality: float
    falsity: float


class BifuzzyPair(NamedTuple):
    """Deficit and excess of truth + falsity relative to a partition of unity."""

    undefinedness: float
    contradiction: float


class EscortPair(NamedTuple):
    """Complementary two-outcome distribution distilled from a triple."""

    p_truth: float
    p_falsity: float


def dissimilarity(x: float, y: float) -> float:
    """Bounded dissimilarity between two gray levels in [0, 1].

    Symmetric, zero exactly when ``x == y``, and at most 1 (attained by the
    extreme pair (0, 1)). Levels near mid-gray are compared more strictly
    than levels near the ends of the range.
    """
    return 2.0 * abs(x - y) / (1.0 + abs(x - 0.5) + abs(y - 0.5))


def _contest(a: float, b: float, tie: float) -> float:
    """Membership won against dissimilarity ``a`` by its rival ``b``.

    Returns (b - a*b) / (a + b - a*b): 1 when a == 0 < b, 0 when b == 0 < a,
    and ``tie`` at the degenerate a == b == 0.
    """
    den = (a + b) - a * b
    if den <= 0.0:
        return tie
    return (b - a * b) / den


def neutro_components(x: float, v1: float, v2: float, t: float) -> NeutroTriple:
    """Truth/neutrality/falsity of gray level ``x`` given class means and threshold.

    Truth grows as ``x`` sits nearer the low-class mean ``v1`` than the
    high-class mean ``v2``; falsity mirrors it; neutrality grows as ``x``
    approaches the threshold ``t`` relative to the nearer class mean.
    Degenerate cases resolve by continuity: truth = falsity = 1/2 when ``x``
    coincides with both means, neutrality = 1 when it coincides with the
    threshold and the nearer mean.
    """
    d1 = dissimilarity(x, v1)
    d2 = dissimilarity(x, v2)
    dt = dissimilarity(x, t)
    dv = d1 if d1 < d2 else d2
    return NeutroTriple(
        truth=_contest(d1, d2, 0.5),
        neutrality=_contest(dt, dv, 1.0),
        falsity=_contest(d2, d1, 0.5),
    )


def bifuzzy(truth: float, falsity: float) -> BifuzzyPair:
    """Undefinedness max(0, 1-T-F) and contradiction max(0, T+F-1).

    At most one of the two is nonzero, and their sum equals |T + F - 1|.
    """
    s = truth + falsity
    return BifuzzyPair(max(0.0, 1.0 - s), max(0.0, s - 1.0))


def escort(truth: float, neutrality: float, falsity: float) -> EscortPair:
    """Collapse a triple into complementary probabilities with p_T + p_F = 1.

    Undefined mass is granted to both sides, neutrality is split evenly,
    and the total is renormalized by 1 + I + U + C.
    """
    u, c = bifuzzy(truth, falsity)
    den = 1.0 + neutrality + u + c
    half_i = 0.5 * neutrality
    return EscortPair((truth + u + half_i) / den, (falsity + u + half_i) / den)


def neutro_entropy(truth: float, neutrality: float, falsity: float) -> float:
    """Base-2 Shannon entropy of the escort pair, clipped to [0, 1].

    Zero at full certainty, (T, I, F) = (1, 0, 0) or (0, 0, 1); one whenever
    the escort pair is balanced, in particular whenever truth equals
    falsity. Uses the 0 * log(0) = 0 convention.
    """
    p_t, p_f = escort(truth, neutrality, falsity)
    h = 0.0
    if p_t > 0.0:
        h += p_t * math.log(p_t)
    if p_f > 0.0:
        h += p_f * math.log(p_f)
    e = -h / _LN2
    return min(1.0, max(0.0, e))

"""Sampled verification of the properties the entropy construction promises.

Each check draws a seeded sample set, evaluates one property of the scalar
reference functions and reports the worst deviation seen. The suite backs
the ``axioms`` CLI subcommand and the acceptance tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import bifuzzy, escort, neutro_components, neutro_entropy

DEFAULT_SAMPLES = 10_000
DEFAULT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one property check over a sample set."""

    name: str
    description: str
    samples: int
    worst: float
    tolerance: float
    passed: bool


def _certainty_corners() -> AxiomCheck:
    worst = max(
        abs(neutro_entropy(1.0, 0.0, 0.0)), abs(neutro_entropy(0.0, 0.0, 1.0))
    )
    return AxiomCheck(
        name="certainty-corners",
        description="e(1,0,0) = e(0,0,1) = 0 exactly",
        samples=2,
        worst=worst,
        tolerance=0.0,
        passed=worst == 0.0,
    )


def _balanced_entropy(rng: np.random.Generator, samples: int, tol: float) -> AxiomCheck:
    vs = rng.random(samples).tolist()
    is_ = rng.random(samples).tolist()
    worst = max(abs(neutro_entropy(v, i, v) - 1.0) for v, i in zip(vs, is_))
    return AxiomCheck(
        name="balanced-entropy",
        description="e(T,I,T) = e(F,I,F) = 1",
        samples=samples,
        worst=worst,
        tolerance=tol,
        passed=worst <= tol,
    )


def _symmetry(rng: np.random.Generator, samples: int) -> AxiomCheck:
    triples = rng.random((samples, 3)).tolist()
    worst = max(
        abs(neutro_entropy(t, i, f) - neutro_entropy(f, i, t)) for t, i, f in triples
    )
    return AxiomCheck(
        name="truth-falsity-symmetry",
        description="e(T,I,F) = e(F,I,T) exactly",
        samples=samples,
        worst=worst,
        tolerance=0.0,
        passed=worst == 0.0,
    )


def _precondition_pairs(
    rng: np.random.Generator, samples: int
) -> tuple[np.ndarray, np.ndarray]:
    """Rejection-sample triple pairs satisfying the monotonicity precondition."""
    left = np.empty((samples, 3))
    right = np.empty((samples, 3))
    got = 0
    while got < samples:
        n = max(4096, 8 * (samples - got))
        a = rng.random((n, 3))
        b = rng.random((n, 3))
        keep = (
            (np.abs(a[:, 0] - a[:, 2]) >= np.abs(b[:, 0] - b[:, 2]))
            & (np.abs(a[:, 0] + a[:, 2] - 1.0) <= np.abs(b[:, 0] + b[:, 2] - 1.0))
            & (a[:, 1] <= b[:, 1])
        )
        take = min(samples - got, int(keep.sum()))
        left[got : got + take] = a[keep][:take]
        right[got : got + take] = b[keep][:take]
        got += take
    return left, right


def _monotonicity(rng: np.random.Generator, samples: int, tol: float) -> AxiomCheck:
    left, right = _precondition_pairs(rng, samples)
    worst = max(
        neutro_entropy(*lo) - neutro_entropy(*hi)
        for lo, hi in zip(left.tolist(), right.tolist())
    )
    return AxiomCheck(
        name="uncertainty-monotonicity",
        description="sharper and less indeterminate triples have lower entropy",
        samples=samples,
        worst=worst,
        tolerance=tol,
        passed=worst <= tol,
    )


def _escort_normalization(
    rng: np.random.Generator, samples: int, tol: float
) -> AxiomCheck:
    triples = rng.random((samples, 3)).tolist()
    worst = max(abs(sum(escort(t, i, f)) - 1.0) for t, i, f in triples)
    return AxiomCheck(
        name="escort-normalization",
        description="p_T + p_F = 1",
        samples=samples,
        worst=worst,
        tolerance=tol,
        passed=worst <= tol,
    )


def _no_contradiction(rng: np.random.Generator, samples: int, tol: float) -> AxiomCheck:
    quads = rng.random((samples, 4)).tolist()
    worst = 0.0
    for x, v1, v2, t in quads:
        triple = neutro_components(x, v1, v2, t)
        worst = max(worst, bifuzzy(triple.truth, triple.falsity).contradiction)
    return AxiomCheck(
        name="no-contradiction",
        description="component triples satisfy T + F <= 1",
        samples=samples,
        worst=worst,
        tolerance=tol,
        passed=worst <= tol,
    )


def run_axiom_checks(
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    tolerance: float = DEFAULT_TOLERANCE,
) -> list[AxiomCheck]:
    """Run the six property checks with a seeded sample set.

    The corner and symmetry checks demand exact equality; the rest allow
    ``tolerance``. Identical arguments produce identical results.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    return [
        _certainty_corners(),
        _balanced_entropy(rng, samples, tolerance),
        _symmetry(rng, samples),
        _monotonicity(rng, samples, tolerance),
        _escort_normalization(rng, samples, tolerance),
        _no_contradiction(rng, samples, tolerance),
    ]

"""Shared synthetic-image builders for the test suite."""

from __future__ import annotations

import numpy as np

from neutroseg import GrayImage


def image_from_unit(values, depth: int = 256, width: int | None = None) -> GrayImage:
    """Quantize unit-interval grays into an image, rounding half away from zero."""
    u = np.asarray(values, dtype=np.float64).reshape(-1)
    levels = np.floor(u * (depth - 1) + 0.5).astype(np.int64)
    w = u.size if width is None else width
    return GrayImage(width=w, height=u.size // w, levels=levels, depth=depth)


def mixture_image(
    seed: int,
    means,
    sigmas,
    weights,
    pixels: int = 10_000,
    width: int = 100,
    depth: int = 256,
) -> GrayImage:
    """Image sampled from a clamped Gaussian mixture, one block per mode."""
    rng = np.random.default_rng(seed)
    counts = (np.asarray(weights, dtype=np.float64) * pixels).astype(int)
    counts[0] += pixels - counts.sum()
    parts = [
        np.clip(rng.normal(m, s, c), 0.0, 1.0)
        for m, s, c in zip(means, sigmas, counts)
    ]
    return image_from_unit(np.concatenate(parts), depth=depth, width=width)


def random_image(seed: int, width: int, height: int, depth: int = 256) -> GrayImage:
    rng = np.random.default_rng(seed)
    levels = rng.integers(0, depth, width * height)
    return GrayImage(width=width, height=height, levels=levels, depth=depth)

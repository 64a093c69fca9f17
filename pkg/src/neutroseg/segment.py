"""Assign pixels to threshold regions and render the segmented image."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyImage,
    ThresholdOutOfRange,
    UnsortedThresholds,
)
from .image import GrayImage


@dataclass(frozen=True, eq=False)
class Segmentation:
    """Region labels plus the replacement gray chosen for each region.

    Region 0 is [0, t1]; region j is (t_j, t_{j+1}]; the last region is
    (t_k, 1]. A region's value is the mean unit gray of its pixels, or the
    midpoint of its interval when it holds no pixels.
    """

    thresholds: np.ndarray
    labels: np.ndarray = field(repr=False)
    region_values: np.ndarray
    region_counts: np.ndarray


def _check_thresholds(thresholds: np.ndarray) -> np.ndarray:
    ts = np.asarray(thresholds, dtype=np.float64).reshape(-1)
    if np.any(ts <= 0.0) or np.any(ts >= 1.0):
        raise ThresholdOutOfRange("thresholds must lie strictly inside (0, 1)")
    if np.any(np.diff(ts) <= 0.0):
        raise UnsortedThresholds("thresholds must be strictly increasing")
    return ts


def segment(image: GrayImage, thresholds: np.ndarray) -> Segmentation:
    """Partition ``image`` by ``thresholds`` (strictly increasing, in (0, 1)).

    An empty threshold list is allowed and yields a single region covering
    the whole gray range.
    """
    ts = _check_thresholds(thresholds)
    if image.pixel_count == 0:
        raise EmptyImage("cannot segment an image with no pixels")
    g = image.unit_levels()
    labels = np.searchsorted(ts, g, side="left")
    regions = ts.size + 1
    counts = np.bincount(labels, minlength=regions)
    sums = np.bincount(labels, weights=g, minlength=regions)
    bounds = np.concatenate(([0.0], ts, [1.0]))
    mids = (bounds[:-1] + bounds[1:]) / 2.0
    values = np.where(counts > 0, sums / np.maximum(counts, 1), mids)
    return Segmentation(
        thresholds=ts,
        labels=labels,
        region_values=values,
        region_counts=counts,
    )


def render(seg: Segmentation, image: GrayImage) -> GrayImage:
    """Replace every pixel with its region's gray, requantized to the depth."""
    if seg.labels.size != image.pixel_count:
        raise DimensionMismatch("segmentation does not match the image size")
    unit = seg.region_values[seg.labels]
    levels = np.floor(unit * (image.depth - 1) + 0.5).astype(np.int64)
    return GrayImage(
        width=image.width, height=image.height, levels=levels, depth=image.depth
    )

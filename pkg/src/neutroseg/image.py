"""In-memory grayscale raster."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Flat, row-major raster of integer gray levels.

    ``levels`` holds one integer per pixel in ``[0, depth)``; ``depth`` is the
    source quantization (256 for 8-bit data). Gray values used by the math
    live on the unit interval and are obtained via :meth:`unit_levels`.
    """

    width: int
    height: int
    levels: np.ndarray = field(repr=False)
    depth: int = 256

    def __post_init__(self):
        levels = np.asarray(self.levels)
        if not np.issubdtype(levels.dtype, np.integer):
            raise ValueError("levels must be an integer array")
        levels = levels.reshape(-1)
        object.__setattr__(self, "levels", levels)
        if self.depth < 2:
            raise ValueError("depth must be at least 2")
        if self.width < 0 or self.height < 0:
            raise ValueError("dimensions must be nonnegative")
        if levels.size != self.width * self.height:
            raise ValueError(
                f"levels has {levels.size} entries for a "
                f"{self.width}x{self.height} raster"
            )
        if levels.size and (int(levels.min()) < 0 or int(levels.max()) >= self.depth):
            raise ValueError(f"levels must lie in [0, {self.depth})")

    @property
    def pixel_count(self) -> int:
        return self.width * self.height

    def unit_levels(self) -> np.ndarray:
        """Gray values mapped to [0, 1] as float64 (level / (depth - 1))."""
        return self.levels.astype(np.float64) / (self.depth - 1)

"""Benchmark the entropy sweep kernels.

Times the full candidate sweep (histogram already built) once per available
backend on a synthetic two-mode image and reports per-call statistics,
the numpy/numba speedup, and the worst cross-backend disagreement.

Run:
    python3 benchmarks/bench_sweep.py --side 512 --repeats 20
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from neutroseg import GrayImage, available_backends, build_histogram, entropy_curve


def mixture_image(side: int, seed: int, depth: int = 256) -> GrayImage:
    rng = np.random.default_rng(seed)
    n = side * side
    parts = (
        rng.normal(0.30, 0.08, size=n // 2),
        rng.normal(0.72, 0.06, size=n - n // 2),
    )
    unit = np.clip(np.concatenate(parts), 0.0, 1.0)
    levels = np.floor(unit * (depth - 1) + 0.5).astype(np.uint16)
    return GrayImage(
        levels=levels.reshape(side, side), depth=depth, width=side, height=side
    )


def time_backend(hist, backend: str, repeats: int):
    curve = entropy_curve(hist, backend=backend)  # warm up (JIT compile)
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        curve = entropy_curve(hist, backend=backend)
        samples.append((time.perf_counter() - start) * 1e3)
    return samples, curve


def main() -> None:
    parser = argparse.ArgumentParser(description="Benchmark the entropy sweep kernels.")
    parser.add_argument("--side", type=int, default=512, help="image side length")
    parser.add_argument("--q", type=int, default=255, help="threshold grid steps")
    parser.add_argument("--repeats", type=int, default=20, help="timed calls per backend")
    parser.add_argument("--seed", type=int, default=0, help="image sample seed")
    args = parser.parse_args()

    image = mixture_image(args.side, args.seed)
    hist = build_histogram(image, args.q)

    results: dict[str, tuple[list[float], object]] = {}
    for backend in available_backends():
        results[backend] = time_backend(hist, backend, args.repeats)

    rows = len(next(iter(results.values()))[1].t)
    print(
        f"image {args.side}x{args.side}, q={args.q}, "
        f"{rows} candidate thresholds, {args.repeats} repeats"
    )
    means = {}
    for backend, (samples, _) in results.items():
        means[backend] = statistics.fmean(samples)
        spread = statistics.stdev(samples) if len(samples) > 1 else 0.0
        print(f"  {backend:<6} {means[backend]:8.3f} ms +/- {spread:.3f} ms per sweep")

    if "numba" in results and "numpy" in results:
        print(f"  speedup numpy/numba: {means['numpy'] / means['numba']:.2f}x")
        a, b = results["numba"][1], results["numpy"][1]
        worst = max(
            float(np.abs(getattr(a, col) - getattr(b, col)).max())
            for col in ("e_t", "e_i", "e_f", "total")
        )
        print(f"  worst backend disagreement: {worst:.3g}")


if __name__ == "__main__":
    main()

"""Command-line front end.

Subcommands: ``curve`` writes the entropy sweep as text, ``threshold``
prints the selected thresholds, ``segment`` writes the repainted image,
``axioms`` runs the built-in property suite. Diagnostics go to stderr;
data goes to ``--out`` or stdout. Exit codes: 0 success, 1 usage error,
2 input or domain error, 3 violated internal invariant.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import axioms as axioms_mod
from . import imgio
from .errors import NeutrosegError
from .image import GrayImage
from .segment import Segmentation, render, segment
from .sweep import EntropyCurve, ThresholdSet, build_histogram, entropy_curve, find_thresholds

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3

_LOW_CONFIDENCE_SAMPLES = 1000


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by the image subcommands."""

    command: str
    input_path: Optional[str]
    q: int = 255
    max_thresholds: int = 8
    out: Optional[str] = None
    curve_out: Optional[str] = None
    seed: int = 0
    samples: int = axioms_mod.DEFAULT_SAMPLES


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse hook
        raise _UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="neutroseg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def image_command(name: str, help_: str) -> _Parser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="input PGM image (P2 or P5)")
        p.add_argument("--q", type=int, default=255, help="threshold grid steps")
        p.add_argument(
            "--max-thresholds", type=int, default=8, help="cap on reported minima"
        )
        p.add_argument("--out", help="output path (default: stdout)")
        return p

    image_command("curve", "write the entropy curve as comma-separated text")
    thr = image_command("threshold", "print thresholds at entropy minima")
    seg = image_command("segment", "write the image repainted with region means")
    for p in (thr, seg):
        p.add_argument("--curve-out", help="also write the entropy curve here")

    ax = sub.add_parser("axioms", help="run the entropy property suite")
    ax.add_argument("--seed", type=int, default=0, help="sample seed")
    ax.add_argument(
        "--samples",
        type=int,
        default=axioms_mod.DEFAULT_SAMPLES,
        help="draws per property check",
    )
    return parser


def _config(parser: _Parser, args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        q=getattr(args, "q", 255),
        max_thresholds=getattr(args, "max_thresholds", 8),
        out=getattr(args, "out", None),
        curve_out=getattr(args, "curve_out", None),
        seed=getattr(args, "seed", 0),
        samples=getattr(args, "samples", axioms_mod.DEFAULT_SAMPLES),
    )
    if cfg.q < 2:
        parser.error("--q must be at least 2")
    if cfg.max_thresholds < 1:
        parser.error("--max-thresholds must be at least 1")
    if cfg.samples < 1:
        parser.error("--samples must be positive")
    return cfg


def _emit(data: bytes, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _pipeline(cfg: RunConfig) -> tuple[GrayImage, EntropyCurve, ThresholdSet]:
    image = imgio.load_pgm(cfg.input_path)
    curve = entropy_curve(build_histogram(image, q=cfg.q))
    found = find_thresholds(curve, max_thresholds=cfg.max_thresholds)
    if found.fallback_used:
        print(
            "warning: no interior entropy minimum; reporting the center of the"
            " lowest plateau",
            file=sys.stderr,
        )
    return image, curve, found


def _threshold_line(t: float, depth: int) -> str:
    level = math.floor(t * (depth - 1) + 0.5)
    return f"{t:.6f} {level}"


def cmd_curve(cfg: RunConfig) -> int:
    image = imgio.load_pgm(cfg.input_path)
    curve = entropy_curve(build_histogram(image, q=cfg.q))
    print(f"candidates: {len(curve)}", file=sys.stderr)
    _emit(imgio.write_curve(curve), cfg.out)
    return EXIT_OK


def cmd_threshold(cfg: RunConfig) -> int:
    image, curve, found = _pipeline(cfg)
    if cfg.curve_out:
        imgio.save_curve(cfg.curve_out, curve)
    lines = [_threshold_line(t, image.depth) for t in found.thresholds]
    _emit(("\n".join(lines) + "\n").encode("utf-8"), cfg.out)
    return EXIT_OK


def _report_segmentation(seg: Segmentation, depth: int) -> None:
    for t in seg.thresholds:
        print(f"threshold {_threshold_line(t, depth)}", file=sys.stderr)
    for v, n in zip(seg.region_values, seg.region_counts):
        print(f"region {v:.6f} {n}", file=sys.stderr)


def cmd_segment(cfg: RunConfig) -> int:
    image, curve, found = _pipeline(cfg)
    if cfg.curve_out:
        imgio.save_curve(cfg.curve_out, curve)
    seg = segment(image, found.thresholds)
    _report_segmentation(seg, image.depth)
    _emit(imgio.write_pgm(render(seg, image)), cfg.out)
    return EXIT_OK


def cmd_axioms(cfg: RunConfig) -> int:
    if cfg.samples < _LOW_CONFIDENCE_SAMPLES:
        print(
            f"note: {cfg.samples} samples per check gives reduced confidence",
            file=sys.stderr,
        )
    checks = axioms_mod.run_axiom_checks(samples=cfg.samples, seed=cfg.seed)
    for c in checks:
        verdict = "PASS" if c.passed else "FAIL"
        print(
            f"{verdict} {c.name}: worst deviation {c.worst:.3g}"
            f" (tolerance {c.tolerance:g}, samples {c.samples})"
        )
    if all(c.passed for c in checks):
        return EXIT_OK
    print("error: entropy property violated", file=sys.stderr)
    return EXIT_INVARIANT


_HANDLERS = {
    "curve": cmd_curve,
    "threshold": cmd_threshold,
    "segment": cmd_segment,
    "axioms": cmd_axioms,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv`` and run one subcommand, returning the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config(parser, args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _HANDLERS[cfg.command](cfg)
    except (NeutrosegError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    """Console-script hook."""
    sys.exit(main())

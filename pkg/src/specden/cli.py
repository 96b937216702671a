"""Command-line interface.

Each subcommand is a thin wrapper over one library call chain, so CLI
results are bit-identical to calling the library directly. Exit codes:
0 success, 1 runtime or I/O failure, 2 flag validation failure (argparse
prints the offending flag's name). Randomness always requires an explicit
--seed; there is no time-based default.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import metrics
from .edge import CannyParams, canny
from .imagecore import ImageIOError, NoiseSpec, add_noise, load_image, save_image
from .pipeline import PipelineParams, denoise, sweep, sweep_to_csv
from .spectral import MaskSpec, decompose, fft2

__all__ = ["main", "entry"]


def _ranged_float(lo, hi, lo_open=False, hi_open=False):
    def parse(text):
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
        ok_lo = value > lo if lo_open else value >= lo
        ok_hi = value < hi if hi_open else value <= hi
        if not (ok_lo and ok_hi and np.isfinite(value)):
            lb = "(" if lo_open else "["
            rb = ")" if hi_open else "]"
            raise argparse.ArgumentTypeError(
                f"value must be in {lb}{lo}, {hi}{rb}, got {text}"
            )
        return value

    return parse


def _uint64(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {text}")
    return value


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"value must be >= 1, got {text}")
    return value


def _float_list(parse_item):
    def parse(text):
        items = [s for s in text.split(",") if s.strip()]
        if not items:
            raise argparse.ArgumentTypeError("expected a comma-separated list of numbers")
        return [parse_item(s.strip()) for s in items]

    return parse


def _add_canny_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--canny-sigma", type=_ranged_float(0.0, 50.0, lo_open=True),
                   default=1.4, help="blur std-dev in pixels (default 1.4)")
    p.add_argument("--canny-low", type=_ranged_float(0.0, 1.0, lo_open=True, hi_open=True),
                   default=0.1, help="weak threshold as a fraction of max gradient")
    p.add_argument("--canny-high", type=_ranged_float(0.0, 1.0, lo_open=True),
                   default=0.3, help="strong threshold as a fraction of max gradient")


def _add_mask_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cutoff", type=_ranged_float(0.0, 1.0, lo_open=True),
                   default=0.3, help="mask cutoff radius fraction (default 0.3)")
    p.add_argument("--mask-kind", choices=("ideal", "gaussian", "butterworth"),
                   default="ideal", help="low-pass profile (default ideal)")
    p.add_argument("--order", type=_positive_int, default=2,
                   help="butterworth order (default 2)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specden",
        description="Edge-enhanced spectral image denoising toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("denoise", help="denoise an image")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--alpha", type=_ranged_float(0.0, 1.0), default=0.1,
                   help="edge blend weight in [0, 1] (default 0.1)")
    p.add_argument("--lambda", dest="lam", type=_ranged_float(0.0, 1.0, lo_open=True),
                   default=1.0, help="amplitude scale in (0, 1] (default 1.0)")
    _add_mask_flags(p)
    _add_canny_flags(p)
    p.add_argument("--preserve-dc", action="store_true",
                   help="keep the DC amplitude through the filter")
    p.add_argument("--reference", metavar="CLEAN",
                   help="clean image; prints a metrics JSON line to stdout")

    p = sub.add_parser("add-noise", help="corrupt an image reproducibly")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--kind", choices=("gaussian", "salt_pepper"), required=True)
    p.add_argument("--sigma", type=_ranged_float(0.0, 10.0), default=0.1,
                   help="gaussian std-dev in intensity units (default 0.1)")
    p.add_argument("--density", type=_ranged_float(0.0, 1.0), default=0.05,
                   help="fraction of corrupted pixels (default 0.05)")
    p.add_argument("--seed", type=_uint64, required=True,
                   help="64-bit generator seed (required)")

    p = sub.add_parser("edges", help="write the detected edge map as an image")
    p.add_argument("input")
    p.add_argument("output")
    _add_canny_flags(p)

    p = sub.add_parser("spectrum", help="write log-amplitude and phase images")
    p.add_argument("input")
    p.add_argument("amplitude_output")
    p.add_argument("phase_output")

    p = sub.add_parser("sweep", help="grid-search parameters, write CSV")
    p.add_argument("noisy")
    p.add_argument("clean")
    p.add_argument("output_csv")
    p.add_argument("--alphas", type=_float_list(_ranged_float(0.0, 1.0)),
                   required=True, help="comma-separated alpha values")
    p.add_argument("--lambdas", type=_float_list(_ranged_float(0.0, 1.0, lo_open=True)),
                   required=True, help="comma-separated lambda values")
    p.add_argument("--cutoffs", type=_float_list(_ranged_float(0.0, 1.0, lo_open=True)),
                   required=True, help="comma-separated cutoff fractions")
    p.add_argument("--mask-kind", choices=("ideal", "gaussian", "butterworth"),
                   default="ideal")
    p.add_argument("--order", type=_positive_int, default=2)
    _add_canny_flags(p)
    p.add_argument("--preserve-dc", action="store_true")

    p = sub.add_parser("metrics", help="print a metrics JSON line for two images")
    p.add_argument("image")
    p.add_argument("reference")

    return parser


def _canny_params(args) -> CannyParams:
    return CannyParams(sigma=args.canny_sigma, low_ratio=args.canny_low,
                       high_ratio=args.canny_high)


def _run(args) -> int:
    if args.command == "denoise":
        params = PipelineParams(
            alpha=args.alpha,
            lam=args.lam,
            mask=MaskSpec(kind=args.mask_kind, cutoff_fraction=args.cutoff,
                          order=args.order),
            canny=_canny_params(args),
            preserve_dc=args.preserve_dc,
        )
        img = load_image(args.input)
        out = denoise(img, params)
        save_image(out, args.output)
        if args.reference is not None:
            clean = load_image(args.reference)
            print(metrics.compare(out, clean).to_json())
        return 0

    if args.command == "add-noise":
        spec = NoiseSpec(kind=args.kind, seed=args.seed, sigma=args.sigma,
                         density=args.density)
        save_image(add_noise(load_image(args.input), spec), args.output)
        return 0

    if args.command == "edges":
        edges = canny(load_image(args.input), _canny_params(args))
        save_image(edges.astype(np.float64), args.output)
        return 0

    if args.command == "spectrum":
        spec = decompose(fft2(load_image(args.input)))
        log_amp = np.log1p(spec.amplitude)
        peak = log_amp.max()
        save_image(log_amp / peak if peak > 0 else log_amp, args.amplitude_output)
        save_image((spec.phase + np.pi) / (2.0 * np.pi), args.phase_output)
        return 0

    if args.command == "sweep":
        base = PipelineParams(
            mask=MaskSpec(kind=args.mask_kind, order=args.order),
            canny=_canny_params(args),
            preserve_dc=args.preserve_dc,
        )
        noisy = load_image(args.noisy)
        clean = load_image(args.clean)
        results = sweep(noisy, clean, args.alphas, args.lambdas, args.cutoffs, base)
        sweep_to_csv(results, args.output_csv)
        return 0

    if args.command == "metrics":
        print(metrics.compare(load_image(args.image), load_image(args.reference)).to_json())
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")  # pragma: no cover


def main(argv=None) -> int:
    """Parse ``argv`` and run; returns the process exit code."""
    args = _build_parser().parse_args(argv)
    try:
        return _run(args)
    except (ImageIOError, OSError, ValueError) as exc:
        print(f"specden: error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:  # console_scripts hook
    sys.exit(main())


if __name__ == "__main__":
    entry()

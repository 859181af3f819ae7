"""Command-line interface.

Commands print a single JSON document to stdout (or write an SVG file) and
send diagnostics to stderr.  Exit codes are stable across commands:
0 success / completely positive, 2 well-formed input that fails the
positivity gate, 1 malformed input or system error.
"""

import argparse
import json
import sys

import numpy as np

from .canonical import decompose_channel, reconstruction_residual
from .channel import AffineChannel
from .classify import NotCompletelyPositiveError, classify, sample_cp_channels
from .cp import is_cp
from .render import disk_figure_svg, region_figure_svg
from .verify import run_verify

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_CP = 2


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _load_channel(path: str) -> AffineChannel:
    with open(path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    return AffineChannel.from_json_dict(doc)


def _print_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _write_file(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(content)


def cmd_check(args) -> int:
    try:
        channel = _load_channel(args.channel)
    except (OSError, ValueError) as exc:
        return _fail(str(exc))
    report = is_cp(channel)
    _print_json(report.to_json_dict())
    return EXIT_OK if report.is_cp else EXIT_NOT_CP


def cmd_decompose(args) -> int:
    try:
        channel = _load_channel(args.channel)
    except (OSError, ValueError) as exc:
        return _fail(str(exc))
    form = decompose_channel(channel)
    doc = form.to_json_dict()
    doc["residual"] = reconstruction_residual(channel, form)
    _print_json(doc)
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        channel = _load_channel(args.channel)
    except (OSError, ValueError) as exc:
        return _fail(str(exc))
    try:
        family = classify(channel)
    except NotCompletelyPositiveError as exc:
        _print_json(exc.report.to_json_dict())
        return EXIT_NOT_CP
    doc = family.to_json_dict()
    doc["kraus_rank"] = is_cp(channel).kraus_rank
    _print_json(doc)
    return EXIT_OK


def cmd_image(args) -> int:
    try:
        channel = _load_channel(args.channel)
    except (OSError, ValueError) as exc:
        return _fail(str(exc))
    try:
        _write_file(args.output, disk_figure_svg(channel))
    except OSError as exc:
        return _fail(str(exc))
    return EXIT_OK


def cmd_region(args) -> int:
    try:
        _write_file(args.output, region_figure_svg())
    except OSError as exc:
        return _fail(str(exc))
    return EXIT_OK


def cmd_sample(args) -> int:
    rng = np.random.default_rng(args.seed)
    for channel in sample_cp_channels(rng, args.count, unital=args.unital):
        print(json.dumps(channel.to_json_dict()))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = run_verify(grid_step=args.grid_step, samples=args.samples, seed=args.seed)
    except ValueError as exc:
        return _fail(str(exc))
    _print_json(report.to_json_dict())
    return EXIT_OK if report.mismatches == 0 else EXIT_NOT_CP


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rebit",
        description="Classify rebit channels: positivity checks, canonical "
        "factorization, taxonomy and Bloch-disk figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="complete-positivity report for a channel file")
    p.add_argument("channel", help="path to a channel JSON document")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="canonical rotation-diagonal-rotation form")
    p.add_argument("channel")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("classify", help="taxonomy family and Kraus rank (CP channels only)")
    p.add_argument("channel")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("image", help="render the image of the Bloch disk as SVG")
    p.add_argument("channel")
    p.add_argument("-o", "--output", required=True, help="output SVG path")
    p.set_defaults(func=cmd_image)

    p = sub.add_parser("region", help="render the admissibility pentagon as SVG")
    p.add_argument("-o", "--output", required=True, help="output SVG path")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("sample", help="emit random CP channels as JSON lines")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--unital", action="store_true", help="sample zero-shift channels")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="closed-form vs oracle verification sweeps")
    p.add_argument("--grid-step", type=float, default=0.01)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "count", 1) < 1:
        return _fail("count must be at least 1")
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

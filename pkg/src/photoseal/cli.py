"""Command-line frontend.

Subcommands: embed, verify, metrics, attack, bench, serve, gen-images.

Exit codes are a stable contract:

    0  success / authentic
    1  tampered or unknown device
    2  I/O error (unreadable input, empty bench directory)
    3  image too small for embedding
    4  lossy output extension (stego output must be PNG or BMP)
    5  usage error (bad flags, unknown scenario, bad region)
    6  verification server unreachable
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .attacks import AttackSpec, apply_attack, zone_rect
from .errors import (
    DecodeError,
    ImageTooSmall,
    InvalidCameraId,
    InvalidScenario,
    RegionError,
)
from .frequency import embed_frequency
from .image import LOSSLESS_EXTENSIONS, load_image, save_image
from .metrics import compare
from .scenarios import ALL_NAMES, FREQUENCY_NAMES, SPATIAL_NAMES, parse_scenario
from .spatial import embed_spatial
from .synth import standard_test_images
from .verify import verify

EXIT_OK = 0
EXIT_TAMPERED = 1
EXIT_IO = 2
EXIT_TOO_SMALL = 3
EXIT_LOSSY = 4
EXIT_USAGE = 5
EXIT_SERVER = 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the CLI contract says 5."""

    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _embed_fn(scenario):
    return embed_spatial if scenario.domain == "spatial" else embed_frequency


def _print_quality(report, fmt: str) -> None:
    if fmt == "json":
        print(report.to_json())
    elif fmt == "csv":
        print(",".join(report.CSV_FIELDS))
        print(",".join(report.csv_row()))
    else:
        for name in report.CSV_FIELDS:
            print(f"{name:>6}: {getattr(report, name):.6f}")


def cmd_embed(args) -> int:
    if Path(args.output).suffix.lower() not in LOSSLESS_EXTENSIONS:
        print(
            f"error: output {args.output!r} is not lossless; the watermark does "
            f"not survive recompression -- use one of {LOSSLESS_EXTENSIONS}",
            file=sys.stderr,
        )
        return EXIT_LOSSY
    scenario = parse_scenario(args.scenario)
    original = load_image(args.input)
    stego = _embed_fn(scenario)(original, args.camera_id, scenario)
    save_image(args.output, stego)
    print(f"wrote {args.output} (scenario {args.scenario})")
    _print_quality(compare(original, stego), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    if (args.camera_id is None) == (args.server is None):
        raise UsageError("exactly one of --camera-id or --server is required")
    scenario = parse_scenario(args.scenario)
    if args.server is not None:
        import requests

        try:
            with open(args.input, "rb") as fh:
                resp = requests.post(
                    args.server.rstrip("/") + "/verify",
                    files={"image": (Path(args.input).name, fh)},
                    data={
                        "scenario": args.scenario,
                        "mode": args.mode,
                        **({"tolerance": str(args.tolerance)} if args.tolerance is not None else {}),
                    },
                    timeout=30,
                )
        except requests.RequestException as exc:
            print(f"error: server unreachable: {exc}", file=sys.stderr)
            return EXIT_SERVER
        body = resp.json()
        print(json.dumps(body, indent=2))
        if resp.status_code != 200:
            return EXIT_TAMPERED
        return EXIT_OK if body.get("authentic") else EXIT_TAMPERED
    image = load_image(args.input)
    report = verify(image, args.camera_id, scenario, tolerance=args.tolerance)
    print(report.to_json(indent=2))
    return EXIT_OK if report.authentic else EXIT_TAMPERED


def cmd_metrics(args) -> int:
    report = compare(load_image(args.original), load_image(args.processed))
    _print_quality(report, args.format)
    return EXIT_OK


def _parse_rect(text: str) -> tuple[int, int, int, int]:
    try:
        x, y, w, h = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"bad rectangle {text!r}; expected X,Y,W,H") from None
    return (x, y, w, h)


def cmd_attack(args) -> int:
    if (args.zone is None) == (args.rect is None) and args.mode != "channel-swap":
        raise UsageError("exactly one of --zone or --rect is required")
    image = load_image(args.input)
    spec = AttackSpec(
        mode=args.mode.replace("-", "_"),
        region=_parse_rect(args.rect) if args.rect else None,
        zone=args.zone,
        value=args.value,
        src=_parse_rect(args.src) if args.src else None,
        seed=args.seed,
    )
    attacked = apply_attack(image, spec)
    save_image(args.output, attacked)
    print(f"wrote {args.output} ({spec.describe()})")
    return EXIT_OK


def cmd_bench(args) -> int:
    images: list[tuple[str, np.ndarray]] = []
    src = Path(args.images)
    if not src.is_dir():
        print(f"error: {src} is not a directory", file=sys.stderr)
        return EXIT_IO
    for path in sorted(src.iterdir()):
        if path.suffix.lower() in (".png", ".bmp", ".jpg", ".jpeg"):
            try:
                images.append((path.name, load_image(path)))
            except DecodeError:
                pass
    if not images:
        print(f"error: no decodable images in {src}", file=sys.stderr)
        return EXIT_IO
    names = list(ALL_NAMES) if args.scenarios == "all" else args.scenarios.split(",")
    rows = []
    psnr_by_scenario: dict[str, list[float]] = {n: [] for n in names}
    for image_name, image in images:
        for name in names:
            scenario = parse_scenario(name)
            stego = _embed_fn(scenario)(image, args.camera_id, scenario)
            q = compare(image, stego)
            rows.append([image_name, name] + q.csv_row())
            psnr_by_scenario[name].append(q.psnr)
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["image", "scenario", "mae", "mse", "psnr", "ssim", "uiqi"])
        writer.writerows(rows)
    print(f"wrote {args.out} ({len(rows)} rows)")

    mean = {n: float(np.mean(v)) for n, v in psnr_by_scenario.items() if v}
    for label, order in (
        ("spatial PSNR s2 > s1 > s3", ("s2", "s1", "s3")),
        ("frequency PSNR f4 > f1 > f3 > f2", ("f4", "f1", "f3", "f2")),
        ("frequency PSNR f5 > f1", ("f5", "f1")),
    ):
        if all(n in mean for n in order):
            ok = all(mean[a] > mean[b] for a, b in zip(order, order[1:]))
            print(f"ordering {label}: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK


def cmd_gen_images(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, image in standard_test_images().items():
        save_image(out / f"{name}.png", image)
        print(f"wrote {out / f'{name}.png'}")
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import load_config, serve_from_config

    config = load_config(args.config)
    if args.listen:
        config["listen"] = args.listen
    serve_from_config(config)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="photoseal", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"photoseal {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    scen_help = f"scenario name, one of {', '.join(ALL_NAMES)} " \
                f"(spatial {SPATIAL_NAMES}, frequency {FREQUENCY_NAMES})"

    p = sub.add_parser("embed", help="implant an originality identifier")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True, help="stego output path (.png or .bmp)")
    p.add_argument("--camera-id", required=True)
    p.add_argument("--scenario", required=True, help=scen_help)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(fn=cmd_embed)

    p = sub.add_parser("verify", help="test an image for originality")
    p.add_argument("--input", required=True)
    p.add_argument("--camera-id", help="offline verification against this device secret")
    p.add_argument("--server", help="verification service base URL")
    p.add_argument("--scenario", default="s2", help=scen_help + " (default s2)")
    p.add_argument("--mode", choices=("public", "private", "hybrid"), default="public",
                   help="authentication mode when using --server")
    p.add_argument("--tolerance", type=float, help="frequency-domain coefficient tolerance")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("metrics", help="quality metrics between two images")
    p.add_argument("--original", required=True)
    p.add_argument("--processed", required=True)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(fn=cmd_metrics)

    p = sub.add_parser("attack", help="apply a simulated active attack")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--zone", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--rect", help="X,Y,W,H")
    p.add_argument("--mode", default="blackout",
                   choices=("blackout", "constant", "copy", "channel-swap"))
    p.add_argument("--value", type=int, default=128, help="fill value for constant mode")
    p.add_argument("--src", help="X,Y,W,H source for copy mode")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_attack)

    p = sub.add_parser("bench", help="quality benchmark over an image directory")
    p.add_argument("--images", required=True)
    p.add_argument("--scenarios", default="all")
    p.add_argument("--out", required=True, help="CSV report path")
    p.add_argument("--camera-id", default="bench-camera")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("gen-images", help="write the synthetic benchmark images")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_gen_images)

    p = sub.add_parser("serve", help="run the authentication service")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--listen", help="host:port override")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidScenario, RegionError, InvalidCameraId, ValueError) as exc:
        if "lossless" in str(exc):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_LOSSY
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ImageTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_SMALL
    except (DecodeError, FileNotFoundError, PermissionError, IsADirectoryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

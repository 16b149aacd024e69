"""Reproducible active attacks for vulnerability assessment.

Rectangles are (x, y, w, h) with x = column, y = row, origin at the top
left.  Zones 1..4 are the four image quadrants in figure order: upper
left, upper right, lower right, lower left; each quadrant is
floor(h/2) x floor(w/2), so odd dimensions leave a one-pixel strip
between zones uncovered.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import RegionError
from .image import BLOCK, validate_image
from .scenarios import parse_scenario

MODES = ("blackout", "constant", "copy", "channel_swap")


def zone_rect(shape: tuple[int, int], zone: int) -> tuple[int, int, int, int]:
    """Quadrant rectangle for zone 1..4 of an image of (height, width)."""
    if zone not in (1, 2, 3, 4):
        raise RegionError(f"zone must be 1..4, got {zone}")
    h, w = int(shape[0]), int(shape[1])
    qh, qw = h // 2, w // 2
    x = qw if zone in (2, 3) else 0
    y = qh if zone in (3, 4) else 0
    return (x, y, qw, qh)


def _check_rect(rect, shape, what="region") -> tuple[int, int, int, int]:
    x, y, w, h = (int(v) for v in rect)
    ih, iw = shape
    if w < 1 or h < 1 or x < 0 or y < 0 or x + w > iw or y + h > ih:
        raise RegionError(f"{what} {rect} outside image bounds {iw}x{ih}")
    return (x, y, w, h)


@dataclass(frozen=True)
class AttackSpec:
    """One attack: a region (or zone) and how its content changes.

    ``seed`` keys any randomized content; the four shipped modes are fully
    deterministic, so it only participates in the attack's identity.
    ``channel_swap`` always declares the whole image as its region.
    """

    mode: str
    region: tuple[int, int, int, int] | None = None
    zone: int | None = None
    value: int = 128
    src: tuple[int, int, int, int] | None = None
    channels: tuple[int, int] = (0, 2)
    seed: int = 0

    def __post_init__(self):
        if self.mode not in MODES:
            raise RegionError(f"unknown attack mode {self.mode!r}; expected one of {MODES}")
        if self.mode == "copy" and self.src is None:
            raise RegionError("copy attack needs a src rectangle")

    def resolve(self, shape: tuple[int, int]) -> tuple[int, int, int, int]:
        """Concrete rectangle for an image of (height, width)."""
        if self.mode == "channel_swap":
            return (0, 0, shape[1], shape[0])
        if self.zone is not None:
            return zone_rect(shape, self.zone)
        if self.region is None:
            raise RegionError("attack needs a region or a zone")
        return _check_rect(self.region, shape)

    def describe(self) -> str:
        where = f"zone{self.zone}" if self.zone is not None else str(self.region)
        if self.mode == "constant":
            return f"constant({self.value})@{where}"
        if self.mode == "copy":
            return f"copy({self.src})@{where}"
        if self.mode == "channel_swap":
            return f"channel_swap{self.channels}"
        return f"{self.mode}@{where}"


def apply_attack(image: np.ndarray, spec: AttackSpec) -> np.ndarray:
    """Apply one attack; only samples inside the resolved region change."""
    arr = validate_image(image).copy()
    x, y, w, h = spec.resolve(arr.shape[:2])
    if spec.mode == "blackout":
        arr[y : y + h, x : x + w, :] = 0
    elif spec.mode == "constant":
        arr[y : y + h, x : x + w, :] = np.uint8(spec.value)
    elif spec.mode == "copy":
        sx, sy, sw, sh = _check_rect(spec.src, arr.shape[:2], "src")
        if (sw, sh) != (w, h):
            raise RegionError(f"src {spec.src} and region sizes differ")
        arr[y : y + h, x : x + w, :] = image[sy : sy + sh, sx : sx + sw, :]
    else:  # channel_swap
        a, b = spec.channels
        arr[:, :, [a, b]] = arr[:, :, [b, a]]
    return arr


@dataclass
class DetectionReport:
    """Campaign results: one row per (scenario, attack) pair."""

    rows: list[dict] = field(default_factory=list)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.rows, **kwargs)

    def to_csv(self) -> str:
        buf = io.StringIO()
        fields = [
            "scenario", "attack", "detected", "authentic",
            "mismatch_count", "mismatch_ratio", "photo_id_ok", "overlap",
        ]
        writer = csv.DictWriter(buf, fieldnames=fields)
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: row[k] for k in fields})
        return buf.getvalue()


def _map_overlaps_region(report, rect: tuple[int, int, int, int]) -> bool:
    """Whether any mismatch cell lies inside the attacked rectangle."""
    x, y, w, h = rect
    grid = report.tamper_map.grid
    if report.tamper_map.granularity == "pixel":
        return bool(grid[y : y + h, x : x + w].any())
    by0, by1 = y // BLOCK, -(-(y + h) // BLOCK)
    bx0, bx1 = x // BLOCK, -(-(x + w) // BLOCK)
    return bool(grid[by0 : min(by1, grid.shape[0]), bx0 : min(bx1, grid.shape[1])].any())


def load_campaign_config(path) -> tuple[list[str], list[AttackSpec]]:
    """Read a declarative campaign file for reproducible runs.

    JSON schema::

        {
          "scenarios": ["s2", "f4", ...],          // or "all"
          "attacks": [
            {"mode": "blackout", "region": [x, y, w, h]},
            {"mode": "constant", "zone": 1, "value": 128},
            {"mode": "copy", "region": [...], "src": [x, y, w, h]},
            {"mode": "channel_swap", "channels": [0, 2]},
            ...                                     // optional "seed": int
          ]
        }
    """
    import json
    from pathlib import Path

    from .scenarios import ALL_NAMES

    cfg = json.loads(Path(path).read_text(encoding="utf-8"))
    scenarios = cfg.get("scenarios", "all")
    names = list(ALL_NAMES) if scenarios == "all" else list(scenarios)
    specs = []
    for entry in cfg.get("attacks", []):
        specs.append(
            AttackSpec(
                mode=entry["mode"],
                region=tuple(entry["region"]) if "region" in entry else None,
                zone=entry.get("zone"),
                value=entry.get("value", 128),
                src=tuple(entry["src"]) if "src" in entry else None,
                channels=tuple(entry.get("channels", (0, 2))),
                seed=entry.get("seed", 0),
            )
        )
    return names, specs


def run_campaign(
    image: np.ndarray,
    camera_id: str | bytes,
    scenario_names: list[str],
    attack_specs: list[AttackSpec],
    tolerance: float | None = None,
) -> DetectionReport:
    """Embed once per scenario, apply every attack, verify, tabulate."""
    from .spatial import embed_spatial
    from .frequency import embed_frequency
    from .verify import verify

    arr = validate_image(image)
    report = DetectionReport()
    for name in scenario_names:
        scenario = parse_scenario(name)
        embed = embed_spatial if scenario.domain == "spatial" else embed_frequency
        stego = embed(arr, camera_id, scenario)
        clean = verify(stego, camera_id, scenario, tolerance=tolerance)
        report.rows.append({
            "scenario": name,
            "attack": "none",
            "detected": not clean.authentic,
            "authentic": clean.authentic,
            "mismatch_count": clean.mismatch_count,
            "mismatch_ratio": clean.mismatch_ratio,
            "photo_id_ok": clean.photo_id_ok,
            "overlap": False,
            "rects": clean.rects,
        })
        for spec in attack_specs:
            attacked = apply_attack(stego, spec)
            res = verify(attacked, camera_id, scenario, tolerance=tolerance)
            report.rows.append({
                "scenario": name,
                "attack": spec.describe(),
                "detected": not res.authentic,
                "authentic": res.authentic,
                "mismatch_count": res.mismatch_count,
                "mismatch_ratio": res.mismatch_ratio,
                "photo_id_ok": res.photo_id_ok,
                "overlap": _map_overlaps_region(res, spec.resolve(arr.shape[:2])),
                "rects": res.rects,
            })
    return report

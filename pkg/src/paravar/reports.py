"""Report emission: RFC 4180 CSV, JSON with a reproducibility header,
and a small SVG bar chart for the indel histogram.

Reports never embed timestamps, so repeated runs over identical inputs
produce byte-identical files.  Each JSON report carries a ``meta``
block with the configuration hash and SHA-256 checksums of the input
resources; ``run_meta.json`` aggregates the same for the whole run.
"""

from __future__ import annotations

import csv
import hashlib
import json
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence


def file_checksum(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def config_hash(config: Mapping) -> str:
    canonical = json.dumps(config, sort_keys=True, ensure_ascii=False, default=str)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def build_meta(config: Mapping, resources: Mapping[str, "str | Path | None"]) -> dict:
    checksums = {
        name: file_checksum(path)
        for name, path in sorted(resources.items())
        if path is not None and Path(path).is_file()
    }
    return {"config_hash": config_hash(config), "resource_checksums": checksums}


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)


def write_json(path: str | Path, payload: Mapping) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, ensure_ascii=False, indent=2, sort_keys=True)
        handle.write("\n")


def format_ratio(value: float, places: int = 4) -> str:
    return f"{value:.{places}f}"


def histogram_svg(
    histogram: Mapping[int, int],
    width: int = 640,
    height: int = 360,
    title: str = "Lemma indel distribution",
) -> str:
    """Render a count-to-frequency histogram as a standalone SVG bar chart."""
    margin = 48
    buckets = sorted(histogram)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<text x="{width / 2:.1f}" y="20" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{title}</text>',
    ]
    if buckets:
        max_count = max(histogram.values()) or 1
        span = max(buckets) - min(buckets) + 1
        plot_w = width - 2 * margin
        plot_h = height - 2 * margin
        bar_w = plot_w / span
        x0 = margin
        y0 = height - margin
        for bucket in buckets:
            count = histogram[bucket]
            bar_h = plot_h * count / max_count
            x = x0 + (bucket - min(buckets)) * bar_w
            parts.append(
                f'<rect x="{x:.2f}" y="{y0 - bar_h:.2f}" width="{max(bar_w - 1, 1):.2f}" '
                f'height="{bar_h:.2f}" fill="#4878a8"/>'
            )
            if span <= 40:
                parts.append(
                    f'<text x="{x + bar_w / 2:.2f}" y="{y0 + 16}" text-anchor="middle" '
                    f'font-family="sans-serif" font-size="10">{bucket}</text>'
                )
        parts.append(
            f'<line x1="{margin}" y1="{y0}" x2="{width - margin}" y2="{y0}" '
            f'stroke="#333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{margin}" y="{margin - 8}" font-family="sans-serif" '
            f'font-size="10">max {max_count}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_histogram_svg(path: str | Path, histogram: Mapping[int, int], title: Optional[str] = None) -> None:
    svg = histogram_svg(histogram, title=title) if title else histogram_svg(histogram)
    Path(path).write_text(svg, encoding="utf-8")

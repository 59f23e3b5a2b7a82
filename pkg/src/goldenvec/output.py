"""Deterministic CSV, JSON, and SVG emission for the command-line tool.

All numbers are rendered at a configurable count of significant digits
with a period decimal separator, independent of locale.  Identical inputs
always produce byte-identical text.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass

import numpy as np

FORMATS = ("csv", "json", "svg")
MIN_PRECISION = 6
MAX_PRECISION = 17
DEFAULT_PRECISION = 12

_PALETTE = (
    "#1b6ca8", "#c0392b", "#1e8449", "#7d3c98",
    "#b7950b", "#2874a6", "#884ea0", "#117864",
)


@dataclass(frozen=True)
class OutputSpec:
    """Where and how to emit: format, destination path (None = stdout), digits."""

    fmt: str = "csv"
    path: str | None = None
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if not MIN_PRECISION <= self.precision <= MAX_PRECISION:
            raise ValueError(
                f"precision must lie in [{MIN_PRECISION}, {MAX_PRECISION}], "
                f"got {self.precision!r}"
            )


def format_number(x, precision: int) -> str:
    """Significant-digit rendering; empty string for None, negative zero dropped."""
    if x is None:
        return ""
    x = float(x)
    if x == 0.0:
        x = 0.0
    return f"{x:.{precision}g}"


def _rounded(x, precision: int):
    if x is None or isinstance(x, (str, bool)):
        return x
    if isinstance(x, (list, tuple)):
        return [_rounded(item, precision) for item in x]
    if isinstance(x, (int, np.integer)):
        return int(x)
    return float(format_number(x, precision))


def csv_text(header: list[str], rows, precision: int) -> str:
    """One header line plus one comma-joined line per row."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(
            ",".join(
                cell if isinstance(cell, str) else format_number(cell, precision)
                for cell in row
            )
        )
    return "\n".join(lines) + "\n"


def json_text(command: str, parameters: dict, header: list[str], rows, precision: int) -> str:
    """A {command, parameters, rows} record with fixed key order."""
    record = {
        "command": command,
        "parameters": {k: _rounded(v, precision) for k, v in parameters.items()},
        "rows": [
            {name: _rounded(cell, precision) for name, cell in zip(header, row)}
            for row in rows
        ],
    }
    return json.dumps(record, ensure_ascii=True, indent=2) + "\n"


def svg_text(elements, precision: int) -> str:
    """Data-only SVG from [(kind, points)] with kind polyline or polygon.

    Points are (n, 2) arrays in mathematical orientation (y up); the
    viewport is fitted to all points with a 5% margin per axis.
    """
    flipped = []
    for kind, pts in elements:
        if kind not in ("polyline", "polygon"):
            raise ValueError(f"unsupported element kind {kind!r}")
        pts = np.asarray(pts, dtype=float)
        flipped.append((kind, np.column_stack([pts[:, 0], -pts[:, 1]])))

    stacked = np.concatenate([pts for _, pts in flipped])
    lo = stacked.min(axis=0)
    hi = stacked.max(axis=0)
    span = hi - lo
    pad = np.where(span > 0, 0.05 * span, 0.5)
    lo -= pad
    span += 2 * pad

    fmt = lambda v: format_number(v, precision)
    width = 800
    height = max(1, round(width * span[1] / span[0]))
    stroke_width = fmt(0.0025 * float(span.max()))

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width}" height="{height}" '
        f'viewBox="{fmt(lo[0])} {fmt(lo[1])} {fmt(span[0])} {fmt(span[1])}">'
    ]
    for i, (kind, pts) in enumerate(flipped):
        coords = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in pts)
        color = _PALETTE[i % len(_PALETTE)]
        lines.append(
            f'<{kind} points="{coords}" fill="none" '
            f'stroke="{color}" stroke-width="{stroke_width}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_text(text: str, path: str | None) -> None:
    """Write to stdout or to a file, always with newline-only line endings."""
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)

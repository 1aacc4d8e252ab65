"""Point-file parsing and run-record serialization.

Points travel as CSV (one point per line, comma-separated decimals,
'#' lines ignored) or JSON (array of arrays). Selection runs are
recorded as versioned JSON documents that replay bit-identically from
the stored spec and seed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .selection import SelectionResult, SelectionSpec

__all__ = [
    "SCHEMA_VERSION",
    "InputFormatError",
    "RunRecord",
    "read_points",
    "write_points",
    "write_result",
    "read_result",
]

SCHEMA_VERSION = 1


class InputFormatError(ValueError):
    """A point file failed to parse or carried invalid values."""


def _validate_rows(rows: list[list[float]], origin: str) -> np.ndarray:
    if not rows:
        raise InputFormatError(f"{origin}: no points found")
    width = len(rows[0])
    if width < 2:
        raise InputFormatError(f"{origin}: points need at least 2 objectives, got {width}")
    for i, row in enumerate(rows):
        if len(row) != width:
            raise InputFormatError(
                f"{origin}: ragged row {i + 1} has {len(row)} values, expected {width}"
            )
        for v in row:
            if not math.isfinite(v):
                raise InputFormatError(f"{origin}: non-finite value in row {i + 1}")
    return np.asarray(rows, dtype=float)


def _parse_csv(text: str, origin: str) -> np.ndarray:
    rows = []
    linenos = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            row = [float(tok) for tok in stripped.split(",")]
        except ValueError as exc:
            raise InputFormatError(f"{origin}: line {lineno}: {exc}") from None
        rows.append(row)
        linenos.append(lineno)
    if not rows:
        raise InputFormatError(f"{origin}: no points found")
    width = len(rows[0])
    for row, lineno in zip(rows, linenos):
        if len(row) != width:
            raise InputFormatError(
                f"{origin}: line {lineno}: {len(row)} values, expected {width}"
            )
        for v in row:
            if not math.isfinite(v):
                raise InputFormatError(f"{origin}: line {lineno}: non-finite value")
    if width < 2:
        raise InputFormatError(f"{origin}: points need at least 2 objectives, got {width}")
    return np.asarray(rows, dtype=float)


def read_points(path, format: str = "csv", maximize: bool = False) -> np.ndarray:
    """Load a point set; with maximize=True objectives are negated on
    ingestion so all internal math stays minimization."""
    path = Path(path)
    origin = str(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputFormatError(f"{origin}: {exc}") from None
    if format == "csv":
        pts = _parse_csv(text, origin)
    elif format == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"{origin}: {exc}") from None
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise InputFormatError(f"{origin}: expected a JSON array of arrays")
        try:
            rows = [[float(v) for v in r] for r in data]
        except (TypeError, ValueError):
            raise InputFormatError(f"{origin}: non-numeric entry") from None
        pts = _validate_rows(rows, origin)
    else:
        raise ValueError(f"unknown format '{format}' (csv or json)")
    return -pts if maximize else pts


def write_points(points, path) -> None:
    """Write points as CSV with full round-trip precision."""
    pts = np.asarray(points, dtype=float)
    lines = [",".join(repr(v) for v in row) for row in pts.tolist()]
    Path(path).write_text("\n".join(lines) + "\n")


@dataclass
class RunRecord:
    """One selection run plus enough provenance to replay it."""

    spec: SelectionSpec
    result: SelectionResult
    points: np.ndarray
    wall_time: float
    provenance: dict = field(default_factory=dict)
    maximize: bool = False


def write_result(record: RunRecord, path) -> None:
    """Serialize a run record as versioned JSON.

    The mask is stored as a sorted index list; selected points are
    written in the original orientation (negation undone for
    maximization inputs).
    """
    selected = record.points[record.result.mask]
    if record.maximize:
        selected = -selected
    doc = {
        "version": SCHEMA_VERSION,
        "spec": record.spec.to_dict(),
        "seed": record.result.seed,
        "mask": record.result.indices,
        "value": record.result.indicator_value,
        "history": record.result.history,
        "points": selected.tolist(),
        "wall_time": record.wall_time,
        "provenance": record.provenance,
        "maximize": record.maximize,
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def read_result(path) -> dict:
    """Load a run-record document, checking the schema version."""
    with open(path) as fh:
        doc = json.load(fh)
    version = doc.get("version")
    if version != SCHEMA_VERSION:
        raise InputFormatError(f"{path}: unsupported record version {version}")
    return doc

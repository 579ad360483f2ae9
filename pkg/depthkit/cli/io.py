"""CSV/JSON readers and writers and the small text formats used on the command line."""

from __future__ import annotations

import io
import json
import math
import sys
from collections.abc import Mapping
from pathlib import Path

import numpy as np
import pandas as pd
import yaml

from depthkit.errors import InputError
from depthkit.geometry import Dataset, FloatArray


def _is_number(cell: object) -> bool:
    try:
        float(str(cell))
    except ValueError:
        return False
    return True


def read_dataset_csv(path: Path) -> Dataset:
    """Read an all-numeric CSV; a non-numeric first row is taken as the header.

    Raises:
        FileNotFoundError: If the file does not exist.
        InputError: On an empty file, a non-numeric cell or a non-finite value.

    """
    if not path.exists():
        msg = f"input file not found: {path}"
        raise FileNotFoundError(msg)
    try:
        raw = pd.read_csv(path, header=None, dtype=str, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        msg = f"input file is empty: {path}"
        raise InputError(msg) from None
    except pd.errors.ParserError as e:
        msg = f"cannot parse {path} as CSV: {e}"
        raise InputError(msg) from None
    labels: tuple[str, ...] = ()
    if not all(_is_number(c) for c in raw.iloc[0]):
        labels = tuple(str(c).strip() for c in raw.iloc[0])
        raw = raw.iloc[1:]
    if raw.empty:
        msg = f"input file has a header but no observations: {path}"
        raise InputError(msg)
    try:
        values = raw.apply(pd.to_numeric, errors="raise").to_numpy(dtype=np.float64)
    except (TypeError, ValueError) as e:
        msg = f"non-numeric value in {path}: {e}"
        raise InputError(msg) from None
    return Dataset.from_array(values, labels or None)


def write_dataset_csv(data: Dataset, out: Path | None) -> None:
    """Write observations with their column labels."""
    write_frame(pd.DataFrame(data.values, columns=list(data.labels)), out)


def frame_to_csv(frame: pd.DataFrame, *, index: bool = False) -> str:
    """CSV text with '\\n' line endings and round-trip float formatting."""
    buffer = io.StringIO()
    frame.to_csv(buffer, index=index, lineterminator="\n")
    return buffer.getvalue()


def write_text(text: str, out: Path | None) -> None:
    """Write to ``out`` or, when None, to stdout."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8", newline="\n")


def write_frame(frame: pd.DataFrame, out: Path | None, *, index: bool = False, preamble: str = "") -> None:
    """Write one CSV table, optionally after a preamble line."""
    write_text(preamble + frame_to_csv(frame, index=index), out)


def json_text(document: Mapping[str, object]) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, indent=2, sort_keys=True, allow_nan=False) + "\n"


def write_json(document: Mapping[str, object], out: Path) -> None:
    """Write a JSON document."""
    write_text(json_text(document), out)


def write_yaml(document: Mapping[str, object], out: Path) -> None:
    """Write a YAML document with sorted keys."""
    write_text(yaml.safe_dump(dict(document), sort_keys=True, default_flow_style=False), out)


def sidecar(out: Path, suffix: str) -> Path:
    """``out.csv`` → ``out<suffix>``, e.g. ``out.manifest.json``."""
    return out.with_name(out.stem + suffix)


def parse_floats(text: str, what: str, count: int | None = None) -> tuple[float, ...]:
    """Parse ``"1,2.5,-3"``.

    Raises:
        InputError: On non-numeric or non-finite entries, or a wrong count.

    """
    try:
        values = tuple(float(p) for p in text.split(","))
    except ValueError:
        msg = f"{what} must be comma-separated numbers, got {text!r}"
        raise InputError(msg) from None
    if not all(math.isfinite(v) for v in values):
        msg = f"{what} must be finite, got {text!r}"
        raise InputError(msg)
    if count is not None and len(values) != count:
        msg = f"{what} needs {count} values, got {len(values)}"
        raise InputError(msg)
    return values


def parse_ints(text: str, what: str, count: int) -> tuple[int, ...]:
    """Parse ``"50,40"`` into exactly ``count`` integers."""
    try:
        values = tuple(int(p) for p in text.split(","))
    except ValueError:
        msg = f"{what} must be comma-separated integers, got {text!r}"
        raise InputError(msg) from None
    if len(values) != count:
        msg = f"{what} needs {count} values, got {len(values)}"
        raise InputError(msg)
    return values


def parse_points(texts: list[str], d: int, what: str) -> FloatArray:
    """One point per ``"x1,...,xd"`` string; several may be joined with ``;``."""
    rows = [parse_floats(part, what, d) for text in texts for part in text.split(";") if part.strip()]
    if not rows:
        msg = f"{what} needs at least one point"
        raise InputError(msg)
    return np.asarray(rows, dtype=np.float64)

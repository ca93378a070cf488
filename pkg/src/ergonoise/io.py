"""CSV and JSON-sidecar serialization for sweep results.

Numbers are written with Python's shortest round-trip float repr, the
separator is a comma with '.' decimal point, files are UTF-8 with LF
endings, and sidecar keys are sorted - so a fixed configuration always
produces byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .experiments import SweepResult


def _format_value(v) -> str:
    if isinstance(v, (np.floating, float)):
        return repr(float(v))
    if isinstance(v, (np.integer, int)):
        return str(int(v))
    return str(v)


def write_csv(path, result: SweepResult) -> Path:
    """Write the result's columns as CSV and its metadata as a sidecar.

    The sidecar lands next to the CSV with a ``.meta.json`` suffix and
    echoes the fully resolved configuration.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    names = list(result.columns)
    lines = [",".join(names)]
    for i in range(len(result)):
        lines.append(",".join(_format_value(result.columns[k][i]) for k in names))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    write_sidecar(path.with_suffix(".meta.json"), result.metadata)
    return path


def _jsonable(value):
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def write_sidecar(path, metadata: dict) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = json.dumps(_jsonable(metadata), sort_keys=True, indent=2)
    path.write_text(payload + "\n", encoding="utf-8", newline="\n")
    return path


def read_csv(path) -> dict[str, np.ndarray]:
    """Round-trip reader for the files written by ``write_csv``."""
    lines = Path(path).read_text(encoding="utf-8").strip().split("\n")
    names = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    out = {}
    for i, name in enumerate(names):
        col = [row[i] for row in rows]
        try:
            out[name] = np.array([float(v) for v in col])
        except ValueError:
            out[name] = np.array(col)
    return out

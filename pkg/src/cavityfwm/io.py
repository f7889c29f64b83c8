"""Plain-text serialization of result tables.

Tables are ordered mappings of column name to equal-length sequences.
Numbers are written with ``repr`` so identical runs give identical files.
"""

import csv
import json
from pathlib import Path

import numpy as np


def _cell(x):
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return str(x)


def _plain(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (np.floating, float)):
        return float(x)
    if isinstance(x, (np.integer, int)):
        return int(x)
    if isinstance(x, np.ndarray):
        return [_plain(v) for v in x.tolist()]
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def write_csv(path, columns):
    path = Path(path)
    names = list(columns)
    rows = zip(*(columns[n] for n in names))
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(names)
        for row in rows:
            writer.writerow([_cell(v) for v in row])
    return path


def read_csv(path):
    """Read a table written by :func:`write_csv`; numeric columns become arrays."""
    with Path(path).open(newline="") as fh:
        reader = csv.reader(fh)
        names = next(reader)
        raw = list(zip(*reader)) or [()] * len(names)
    out = {}
    for name, values in zip(names, raw):
        try:
            out[name] = np.array([float(v) for v in values])
        except ValueError:
            out[name] = list(values)
    return out


def write_json(path, obj):
    path = Path(path)
    path.write_text(json.dumps(_plain(obj), indent=2, sort_keys=True) + "\n")
    return path


def records(columns):
    """Row-wise list of dicts, the JSON counterpart of a CSV table."""
    names = list(columns)
    return [{n: _plain(v) for n, v in zip(names, row)}
            for row in zip(*(columns[n] for n in names))]


def write_table(path_stem, columns, fmt="csv", meta=None):
    """Write ``columns`` as ``<stem>.csv`` or ``<stem>.json``; returns the path.

    In JSON form the table goes under ``"records"`` next to optional ``meta``.
    """
    path_stem = Path(path_stem)
    if fmt == "csv":
        return write_csv(path_stem.with_suffix(".csv"), columns)
    if fmt == "json":
        doc = {"records": records(columns)}
        if meta is not None:
            doc["meta"] = meta
        return write_json(path_stem.with_suffix(".json"), doc)
    raise ValueError(f"unknown format {fmt!r}")

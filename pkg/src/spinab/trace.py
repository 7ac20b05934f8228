"""Sampled traces over the applied field and their CSV form."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import NonUniformGrid

TRACE_COLUMNS = ("transmission", "resistance_ohm")


@dataclass
class Trace:
    b: np.ndarray
    columns: dict = field(default_factory=dict)

    def __post_init__(self):
        self.b = np.asarray(self.b, dtype=float)
        for name, col in self.columns.items():
            col = np.asarray(col, dtype=float)
            if col.shape != self.b.shape:
                raise ValueError(f"column {name!r} has length {col.size}, grid has {self.b.size}")
            self.columns[name] = col

    def __len__(self):
        return self.b.size

    def __getitem__(self, name: str) -> np.ndarray:
        return self.columns[name]

    @property
    def spacing(self) -> float:
        return check_uniform(self.b)


def check_uniform(b: np.ndarray, rtol: float = 1e-9) -> float:
    """Return the grid step, raising :class:`NonUniformGrid` if it varies."""
    b = np.asarray(b, dtype=float)
    if b.size < 2:
        raise NonUniformGrid("grid needs at least two samples")
    steps = np.diff(b)
    step = (b[-1] - b[0]) / (b.size - 1)
    # allow float rounding of the sample values themselves
    tol = rtol * abs(step) + 8 * np.finfo(float).eps * np.max(np.abs(b))
    if step <= 0 or np.any(np.abs(steps - step) > tol):
        raise NonUniformGrid("samples are not uniformly spaced in increasing order")
    return float(step)


def write_csv(path, header, rows) -> None:
    """Write rows of floats/strings using shortest round-trip float repr."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(float(v)) if not isinstance(v, str) else v for v in row])


def read_csv(path) -> dict:
    """Read a CSV of named columns. Non-numeric columns stay as lists of str."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [r for r in reader if r]
    out = {}
    for j, name in enumerate(header):
        col = [r[j] for r in rows]
        try:
            out[name] = np.array([float(v) for v in col])
        except ValueError:
            out[name] = col
    return out


def write_trace(trace: Trace, path) -> None:
    names = list(trace.columns)
    rows = zip(trace.b, *(trace.columns[n] for n in names))
    write_csv(path, ["b_tesla", *names], rows)


def read_trace(path) -> Trace:
    data = read_csv(Path(path))
    if "b_tesla" not in data:
        raise ValueError(f"{path}: missing b_tesla column")
    b = data.pop("b_tesla")
    return Trace(b, {k: v for k, v in data.items() if isinstance(v, np.ndarray)})

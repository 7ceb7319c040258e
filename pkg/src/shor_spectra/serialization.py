"""Binary matrix dumps and the CSV writers used by the experiment driver.

Dump layout: u64 little-endian dim, then dim*dim little-endian f64 (re, im)
pairs in row-major order. A JSON sidecar ``<path>.json`` carries the label
and any of theta / n1.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

from .operators import UnitaryMatrix


def write_matrix(path, M: UnitaryMatrix) -> tuple[Path, Path]:
    path = Path(path)
    e = np.ascontiguousarray(M.entries, dtype="<c16")
    with open(path, "wb") as fh:
        fh.write(struct.pack("<Q", M.dim))
        fh.write(e.tobytes(order="C"))
    side = {"label": M.label, "dim": M.dim}
    for key in ("theta", "n1"):
        if key in M.meta:
            side[key] = M.meta[key]
    sidecar = path.with_name(path.name + ".json")
    sidecar.write_text(json.dumps(side, indent=2, sort_keys=True) + "\n")
    return path, sidecar


def read_matrix(path) -> UnitaryMatrix:
    path = Path(path)
    raw = path.read_bytes()
    (dim,) = struct.unpack_from("<Q", raw, 0)
    expected = 8 + 16 * dim * dim
    if len(raw) != expected:
        raise ValueError(f"{path}: expected {expected} bytes, found {len(raw)}")
    e = np.frombuffer(raw, dtype="<c16", offset=8).reshape(dim, dim).astype(complex)
    meta, label = {}, ""
    sidecar = path.with_name(path.name + ".json")
    if sidecar.exists():
        side = json.loads(sidecar.read_text())
        label = side.get("label", "")
        meta = {k: side[k] for k in ("theta", "n1") if k in side}
    return UnitaryMatrix(e, label, meta)


def fmt(v) -> str:
    # fixed significant digits keep CSVs stable against last-bit solver noise
    return format(float(v), ".12g")


def write_csv(path, header: list[str], rows) -> Path:
    path = Path(path)
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(c if isinstance(c, str) else fmt(c) if isinstance(c, float) else str(c) for c in row) + "\n")
    return path

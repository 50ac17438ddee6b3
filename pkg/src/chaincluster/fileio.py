"""Matrix and partition file I/O.

Matrices travel as MatrixMarket (``.mtx``/``.mm``, array or coordinate
format) or dense CSV (``.csv``, one row per line); both round-trip float64
losslessly (17 significant digits). Partitions serialize as JSON with
1-based state indices: ``{"n": int, "blocks": [[...]]}``.
"""

import json
from pathlib import Path

import numpy as np
from scipy.io import mmread, mmwrite
from scipy.sparse import issparse

from .core import ClusterPartition, as_matrix
from .errors import ConfigError

_MM_SUFFIXES = {".mtx", ".mm"}


def _format_of(path):
    suffix = Path(path).suffix.lower()
    if suffix in _MM_SUFFIXES:
        return "matrixmarket"
    if suffix == ".csv":
        return "csv"
    raise ConfigError(
        f"cannot infer matrix format from '{path}' (use .mtx, .mm, or .csv)"
    )


def write_matrix(path, m, fmt=None):
    """Write a dense matrix; format inferred from the extension unless given."""
    m = as_matrix(m)
    fmt = fmt or _format_of(path)
    if fmt == "matrixmarket":
        mmwrite(str(path), m, precision=17)
    elif fmt == "csv":
        np.savetxt(path, m, delimiter=",", fmt="%.17g")
    else:
        raise ConfigError(f"unknown matrix format '{fmt}'")


def read_matrix(path, fmt=None):
    """Read a dense matrix written by :func:`write_matrix` (or compatible)."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"matrix file not found: {path}")
    fmt = fmt or _format_of(path)
    if fmt == "matrixmarket":
        m = mmread(str(path))
        if issparse(m):
            m = m.toarray()
        return as_matrix(np.asarray(m, dtype=float))
    if fmt == "csv":
        try:
            m = np.loadtxt(path, delimiter=",", ndmin=2)
        except ValueError as exc:
            raise ConfigError(f"malformed CSV matrix in {path}: {exc}") from exc
        return as_matrix(m)
    raise ConfigError(f"unknown matrix format '{fmt}'")


def write_partition(path, partition):
    Path(path).write_text(json.dumps(partition.to_json()) + "\n")


def read_partition(path):
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"partition file not found: {path}")
    try:
        obj = json.loads(path.read_text())
        return ClusterPartition.from_json(obj)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ConfigError(f"malformed partition JSON in {path}: {exc}") from exc

"""On-disk formats for multiplication tables.

The canonical interchange format is a JSON document:

    {"dim": n,
     "identity_index": 0,
     "constants": [[i, j, k, c], ...],   sorted, integer c != 0
     "metric": "euclidean",
     "provenance": {"route": ..., "params": ...}}

LaTeX and CSV exports render the same table as an (n+1) x (n+1) grid
with a header row and column of basis names and cells like "-e_9".
All writers are deterministic: identical tables produce identical bytes.
"""

import json
from fractions import Fraction
from typing import List

import numpy as np

from .cayley import MultTable

METRIC_NAME = "euclidean"


def table_to_dict(t: MultTable) -> dict:
    triples = []
    C = t.constants
    for i, j, k in np.argwhere(C != 0):
        triples.append([int(i), int(j), int(k), int(C[i, j, k])])
    triples.sort()
    return {
        "dim": int(t.dim),
        "identity_index": int(t.identity_index),
        "constants": triples,
        "metric": METRIC_NAME,
        "provenance": t.provenance,
    }


def table_from_dict(doc: dict) -> MultTable:
    if not isinstance(doc, dict):
        raise ValueError("table document must be a JSON object")
    for key in ("dim", "identity_index", "constants", "metric"):
        if key not in doc:
            raise ValueError("table document missing field %r" % key)
    if doc["metric"] != METRIC_NAME:
        raise ValueError("unsupported metric %r" % (doc["metric"],))
    n = int(doc["dim"])
    if n <= 0:
        raise ValueError("dimension must be positive")
    C = np.zeros((n, n, n), dtype=np.int64)
    for entry in doc["constants"]:
        i, j, k, c = (int(v) for v in entry)
        if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
            raise ValueError("constant index out of range: %r" % (entry,))
        if c == 0:
            raise ValueError("explicit zero constant: %r" % (entry,))
        C[i, j, k] = c
    t = MultTable(C, int(doc["identity_index"]),
                  doc.get("provenance", {"route": "unknown", "params": {}}))
    if not t.check_identity():
        raise ValueError("table has no valid identity element at index %d"
                         % t.identity_index)
    return t


def table_to_json(t: MultTable) -> str:
    return json.dumps(table_to_dict(t), indent=2, sort_keys=True) + "\n"


def table_from_json(text: str) -> MultTable:
    return table_from_dict(json.loads(text))


def save_table(t: MultTable, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(table_to_json(t))


def load_table(path: str) -> MultTable:
    with open(path) as fh:
        return table_from_json(fh.read())


def _cells(t: MultTable) -> List[List[str]]:
    """Render every basis product as a signed basis symbol; only valid
    for tables whose basis products are single signed basis elements."""
    C = t.constants
    n = t.dim
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            nz = np.flatnonzero(C[i, j])
            if len(nz) != 1 or abs(C[i, j, nz[0]]) != 1:
                raise ValueError("product e_%d e_%d is not a signed basis "
                                 "element" % (i, j))
            k = int(nz[0])
            sign = "-" if C[i, j, k] < 0 else ""
            row.append("%se_%d" % (sign, k))
        grid.append(row)
    return grid


def _tex_sym(name: str) -> str:
    """Brace multi-digit subscripts so the cell is valid LaTeX."""
    sign, idx = ("-", name[3:]) if name.startswith("-") else ("", name[2:])
    sub = idx if len(idx) == 1 else "{%s}" % idx
    return "%se_%s" % (sign, sub)


def export_latex(t: MultTable) -> str:
    n = t.dim
    grid = _cells(t)
    lines = []
    lines.append(r"\begin{array}{c|%s}" % ("c" * n))
    header = " & ".join(_tex_sym("e_%d" % j) for j in range(n))
    lines.append(" & %s \\\\" % header)
    lines.append(r"\hline")
    for i in range(n):
        cells = " & ".join(_tex_sym(c) for c in grid[i])
        lines.append("%s & %s \\\\" % (_tex_sym("e_%d" % i), cells))
    lines.append(r"\end{array}")
    return "\n".join(lines) + "\n"


def export_csv(t: MultTable) -> str:
    n = t.dim
    grid = _cells(t)
    lines = ["*," + ",".join("e_%d" % j for j in range(n))]
    for i in range(n):
        lines.append("e_%d," % i + ",".join(grid[i]))
    return "\n".join(lines) + "\n"


def scalar_to_strings(s) -> List[str]:
    return [str(Fraction(v)) for v in s.quad()]


def spin_tensor_to_dict(st) -> dict:
    """Serialize a spin-tensor as its nonzero entries; each value is the
    quad of rational coordinates (1, sqrt2, i, i sqrt2)."""
    N = st.N
    entries = []
    for c in range(N):
        for d in range(N):
            v = st.entries.item((c, d))
            if not v.is_zero():
                entries.append([c, d, scalar_to_strings(v)])
    return {"spinor_dim": N, "entries": entries}
